#include "cascade/escalation.hpp"

#include <algorithm>
#include <numeric>

#include "cascade/error.hpp"

namespace cascade {

void RouterConfig::validate() const {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "tau must lie in [0, 1], got " + std::to_string(tau));
  }
}

std::string_view to_string(Path path) noexcept {
  return path == Path::accepted ? "accepted" : "escalated";
}

Path route(const Classification& primary, const RouterConfig& config) {
  if (!config.escalation_enabled || primary.confidence() >= config.tau) return Path::accepted;
  return Path::escalated;
}

RoutedDecision decide(const Document& doc, const Classification& primary, const AgentSuite& agents,
                      const RouterConfig& config, const LabelSpace& labels, UserHistory& history) {
  RoutedDecision decision{doc.id, primary, route(primary, config), primary, std::nullopt, {}};
  if (decision.path == Path::escalated) {
    try {
      const AgentContext context{labels, history};
      decision.verdicts = agents.evaluate(doc, primary, context);
      decision.consensus = aggregate(decision.verdicts, agents.weights(), primary, labels);
      decision.final = decision.consensus->final;
    } catch (const Error& e) {
      throw Error(e.code(), "document '" + doc.id + "': " + e.what());
    }
  }
  if (doc.user_id) history.record(*doc.user_id, decision.final.label());
  return decision;
}

RoutedDecision classify_cascade(const Document& doc, const Classifier& primary, const AgentSuite& agents,
                                const RouterConfig& config, UserHistory& history) {
  config.validate();
  Classification first = [&] {
    try {
      return primary.classify(doc.text);
    } catch (const Error& e) {
      throw Error(e.code(), "document '" + doc.id + "': " + e.what());
    }
  }();
  return decide(doc, first, agents, config, primary.label_space(), history);
}

std::vector<RoutedDecision> run_cascade(std::span<const Document> corpus, const Classifier& primary,
                                        const AgentSuite& agents, const RouterConfig& config) {
  config.validate();
  if (corpus.empty()) return {};
  std::vector<std::string> texts;
  texts.reserve(corpus.size());
  for (const auto& doc : corpus) texts.push_back(doc.text);
  const std::vector<Classification> first = primary.classify_batch(texts);
  return run_cascade(corpus, first, agents, config, primary.label_space());
}

std::vector<RoutedDecision> run_cascade(std::span<const Document> corpus,
                                        std::span<const Classification> primary, const AgentSuite& agents,
                                        const RouterConfig& config, const LabelSpace& labels) {
  config.validate();
  if (primary.size() != corpus.size()) {
    throw Error(ErrorCode::LengthMismatch, "primary classifications do not align with the corpus");
  }
  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return corpus[a].seq < corpus[b].seq; });

  UserHistory history(agents.history_capacity());
  std::vector<std::optional<RoutedDecision>> slots(corpus.size());
  for (std::size_t i : order) slots[i] = decide(corpus[i], primary[i], agents, config, labels, history);

  std::vector<RoutedDecision> out;
  out.reserve(corpus.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

DecompositionReport decompose_accuracy(std::span<const RoutedDecision> decisions, std::span<const Label> gold) {
  if (decisions.empty()) throw Error(ErrorCode::EmptyInput, "no decisions to decompose");
  if (decisions.size() != gold.size()) {
    throw Error(ErrorCode::LengthMismatch, "gold labels do not align with decisions");
  }
  DecompositionReport r;
  r.total = decisions.size();
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    const bool correct = decisions[i].final.label() == gold[i];
    if (decisions[i].path == Path::accepted) {
      ++r.accepted;
      r.accepted_correct += correct ? 1 : 0;
    } else {
      ++r.escalated;
      r.escalated_correct += correct ? 1 : 0;
    }
  }
  const auto n = static_cast<double>(r.total);
  r.p_accept = static_cast<double>(r.accepted) / n;
  r.p_escalate = static_cast<double>(r.escalated) / n;
  r.acc_accept_defined = r.accepted > 0;
  r.acc_escalate_defined = r.escalated > 0;
  if (r.acc_accept_defined) r.acc_accept = static_cast<double>(r.accepted_correct) / static_cast<double>(r.accepted);
  if (r.acc_escalate_defined) {
    r.acc_escalate = static_cast<double>(r.escalated_correct) / static_cast<double>(r.escalated);
  }
  r.overall = static_cast<double>(r.accepted_correct + r.escalated_correct) / n;
  return r;
}

std::vector<Label> gold_labels(std::span<const Document> corpus, const LabelSpace& labels) {
  std::vector<Label> out;
  out.reserve(corpus.size());
  for (const auto& doc : corpus) {
    if (!doc.gold) throw Error(ErrorCode::MissingGold, "document '" + doc.id + "' has no gold label");
    out.push_back(labels.by_name(*doc.gold));
  }
  return out;
}

}  // namespace cascade
