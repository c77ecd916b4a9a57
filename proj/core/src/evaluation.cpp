#include "cascade/evaluation.hpp"

#include <algorithm>
#include <future>

#include "cascade/error.hpp"

namespace cascade {

Metrics compute_metrics(std::span<const Label> predicted, std::span<const Label> gold, const LabelSpace& labels) {
  if (predicted.empty()) throw Error(ErrorCode::EmptyInput, "no predictions to evaluate");
  if (predicted.size() != gold.size()) {
    throw Error(ErrorCode::LengthMismatch, "predictions and gold labels differ in length");
  }
  const std::size_t k = labels.size();
  Metrics m;
  m.total = predicted.size();
  m.confusion.assign(k, std::vector<std::size_t>(k, 0));
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const std::size_t g = labels.by_name(gold[i].name).id;
    const std::size_t p = labels.by_name(predicted[i].name).id;
    ++m.confusion[g][p];
  }

  m.per_class.resize(k);
  std::size_t defined = 0;
  double f1_sum = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    auto& cm = m.per_class[c];
    const std::size_t tp = m.confusion[c][c];
    m.correct += tp;
    for (std::size_t o = 0; o < k; ++o) {
      cm.support += m.confusion[c][o];
      cm.predicted += m.confusion[o][c];
    }
    cm.precision_defined = cm.predicted > 0;
    cm.recall_defined = cm.support > 0;
    cm.f1_defined = cm.precision_defined || cm.recall_defined;
    if (cm.precision_defined) cm.precision = static_cast<double>(tp) / static_cast<double>(cm.predicted);
    if (cm.recall_defined) cm.recall = static_cast<double>(tp) / static_cast<double>(cm.support);
    // harmonic mean of P and R, computed from counts: 2tp / (2tp + fp + fn)
    if (tp > 0) cm.f1 = 2.0 * static_cast<double>(tp) / static_cast<double>(cm.predicted + cm.support);
    if (cm.f1_defined) {
      ++defined;
      f1_sum += cm.f1;
    }
  }
  m.accuracy = static_cast<double>(m.correct) / static_cast<double>(m.total);
  m.macro_f1 = defined ? f1_sum / static_cast<double>(defined) : 0.0;
  return m;
}

EvaluationReport evaluate(std::span<const RoutedDecision> decisions, std::span<const Label> gold,
                          const LabelSpace& labels) {
  if (decisions.empty()) throw Error(ErrorCode::EmptyInput, "no decisions to evaluate");
  std::vector<Label> predicted;
  predicted.reserve(decisions.size());
  for (const auto& d : decisions) predicted.push_back(d.final.label());
  EvaluationReport report;
  report.labels = labels.names();
  report.metrics = compute_metrics(predicted, gold, labels);
  report.decomposition = decompose_accuracy(decisions, gold);
  report.escalation_rate = report.decomposition.p_escalate;
  return report;
}

Predictor classifier_predictor(const Classifier& classifier) {
  return [&classifier](std::span<const Document> corpus) {
    std::vector<std::string> texts;
    texts.reserve(corpus.size());
    for (const auto& doc : corpus) texts.push_back(doc.text);
    std::vector<Label> out;
    out.reserve(corpus.size());
    if (texts.empty()) return out;
    for (const auto& c : classifier.classify_batch(texts)) out.push_back(c.label());
    return out;
  };
}

Predictor cascade_predictor(const Classifier& primary, AgentSuite agents, RouterConfig config) {
  config.validate();
  return [&primary, agents = std::move(agents), config](std::span<const Document> corpus) {
    std::vector<Label> out;
    out.reserve(corpus.size());
    for (const auto& d : run_cascade(corpus, primary, agents, config)) out.push_back(d.final.label());
    return out;
  };
}

std::vector<Document> augment_corpus(std::span<const Document> corpus, std::uint64_t seed,
                                     const std::set<Perturbation>& kinds) {
  std::vector<Document> out;
  out.reserve(corpus.size() * kinds.size());
  for (const auto& doc : corpus) {
    for (auto& variant : augment(doc, seed, kinds)) {
      variant.seq = static_cast<std::int64_t>(out.size());
      out.push_back(std::move(variant));
    }
  }
  return out;
}

RobustnessReport robustness_score(const Predictor& system, std::span<const Document> corpus,
                                  const LabelSpace& labels, std::uint64_t seed,
                                  const std::set<Perturbation>& kinds) {
  if (corpus.empty()) throw Error(ErrorCode::EmptyCorpus, "robustness needs a labeled corpus");
  if (kinds.empty()) throw Error(ErrorCode::InvalidArgument, "no perturbation kinds requested");
  const std::vector<Document> variants = augment_corpus(corpus, seed, kinds);
  const std::vector<Label> gold = gold_labels(variants, labels);
  const std::vector<Label> predicted = system(variants);
  if (predicted.size() != variants.size()) {
    throw Error(ErrorCode::LengthMismatch, "system returned a wrong number of predictions");
  }

  RobustnessReport r;
  r.augmentation_seed = seed;
  r.variants = variants.size();
  r.score = compute_metrics(predicted, gold, labels).macro_f1;
  // Variants are laid out doc-major, kinds in enum order.
  std::size_t k = 0;
  for (Perturbation kind : kinds) {
    std::vector<Label> p, g;
    for (std::size_t i = k; i < variants.size(); i += kinds.size()) {
      p.push_back(predicted[i]);
      g.push_back(gold[i]);
    }
    r.per_perturbation[kind] = compute_metrics(p, g, labels).macro_f1;
    ++k;
  }
  return r;
}

std::vector<SweepRow> sweep_threshold(std::span<const Document> corpus, const Classifier& primary,
                                      const AgentSuite& agents, std::span<const double> taus) {
  if (corpus.empty() || taus.empty()) throw Error(ErrorCode::EmptyInput, "sweep needs documents and taus");
  if (!std::is_sorted(taus.begin(), taus.end())) {
    throw Error(ErrorCode::InvalidArgument, "sweep taus must be ascending");
  }
  const LabelSpace& labels = primary.label_space();
  const std::vector<Label> gold = gold_labels(corpus, labels);
  std::vector<std::string> texts;
  for (const auto& doc : corpus) texts.push_back(doc.text);
  const std::vector<Classification> first = primary.classify_batch(texts);

  std::vector<std::future<EvaluationReport>> cells;
  for (double tau : taus) {
    RouterConfig config{tau, true};
    config.validate();
    cells.push_back(std::async(std::launch::async, [&, config] {
      const auto decisions = run_cascade(corpus, first, agents, config, labels);
      return evaluate(decisions, gold, labels);
    }));
  }
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < taus.size(); ++i) rows.push_back(SweepRow{taus[i], cells[i].get()});
  return rows;
}

std::vector<AblationSpec> default_ablations() {
  const std::set<AgentId> all(kAllAgents.begin(), kAllAgents.end());
  auto minus = [&](AgentId id) {
    auto s = all;
    s.erase(id);
    return s;
  };
  return {
      {"full", all, true},
      {"no-lexical", minus(AgentId::lexical), true},
      {"no-contextual", minus(AgentId::contextual), true},
      {"no-logic", minus(AgentId::logic), true},
      {"escalation-disabled", all, false},
  };
}

std::vector<AblationResult> run_ablations(std::span<const Document> corpus, const Classifier& primary,
                                          const AgentSuite& agents, double tau,
                                          std::span<const AblationSpec> configs, std::uint64_t seed) {
  if (corpus.empty()) throw Error(ErrorCode::EmptyInput, "ablation needs documents");
  const LabelSpace& labels = primary.label_space();
  const std::vector<Label> gold = gold_labels(corpus, labels);
  std::vector<std::string> texts;
  for (const auto& doc : corpus) texts.push_back(doc.text);
  const std::vector<Classification> first = primary.classify_batch(texts);

  std::vector<std::future<AblationResult>> cells;
  for (const auto& spec : configs) {
    cells.push_back(std::async(std::launch::async, [&, spec] {
      const RouterConfig config{tau, spec.escalation_enabled};
      const AgentSuite suite = agents.restricted_to(spec.agents);
      const auto decisions = run_cascade(corpus, first, suite, config, labels);
      AblationResult result{spec.name, spec, evaluate(decisions, gold, labels), {}};
      result.robustness = robustness_score(cascade_predictor(primary, suite, config), corpus, labels, seed);
      return result;
    }));
  }
  std::vector<AblationResult> out;
  for (auto& cell : cells) out.push_back(cell.get());
  return out;
}

}  // namespace cascade
