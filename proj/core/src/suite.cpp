#include "cascade/suite.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cascade/error.hpp"

namespace cascade {

AgentSuite::AgentSuite(std::vector<std::shared_ptr<const Agent>> agents, AgentWeights weights,
                       std::size_t history_capacity)
    : agents_(std::move(agents)), weights_(std::move(weights)), history_capacity_(history_capacity) {
  if (history_capacity_ == 0) throw Error(ErrorCode::InvalidArgument, "history capacity must be >= 1");
  std::set<AgentId> seen;
  for (const auto& a : agents_) {
    if (!a) throw Error(ErrorCode::InvalidArgument, "null agent in suite");
    if (!seen.insert(a->id()).second) {
      throw Error(ErrorCode::InvalidArgument, "agent " + std::string(to_string(a->id())) + " listed twice");
    }
  }
  std::stable_sort(agents_.begin(), agents_.end(),
                   [](const auto& a, const auto& b) { return a->id() < b->id(); });
}

bool AgentSuite::has(AgentId id) const {
  return std::any_of(agents_.begin(), agents_.end(), [id](const auto& a) { return a->id() == id; });
}

AgentSuite AgentSuite::with_weights(AgentWeights weights) const {
  AgentSuite copy = *this;
  copy.weights_ = std::move(weights);
  return copy;
}

AgentSuite AgentSuite::restricted_to(const std::set<AgentId>& keep) const {
  AgentSuite copy = *this;
  std::erase_if(copy.agents_, [&](const auto& a) { return !keep.contains(a->id()); });
  return copy;
}

AgentSuite AgentSuite::without(AgentId id) const {
  AgentSuite copy = *this;
  std::erase_if(copy.agents_, [id](const auto& a) { return a->id() == id; });
  return copy;
}

std::vector<AgentVerdict> AgentSuite::evaluate(const Document& doc, const Classification& primary,
                                               const AgentContext& context) const {
  std::vector<AgentVerdict> verdicts;
  verdicts.reserve(agents_.size());
  for (const auto& agent : agents_) verdicts.push_back(agent->evaluate(doc, primary, context));
  return verdicts;
}

AgentWeights estimate_weights(const AgentSuite& suite, std::span<const Document> validation,
                              const Classifier& primary) {
  if (validation.empty()) throw Error(ErrorCode::EmptyCorpus, "no validation documents");
  const LabelSpace& labels = primary.label_space();

  std::vector<std::size_t> order(validation.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return validation[a].seq < validation[b].seq; });

  std::map<AgentId, std::pair<std::size_t, std::size_t>> tally;  // correct, participated
  for (const auto& agent : suite.agents()) tally[agent->id()] = {0, 0};

  UserHistory history(suite.history_capacity());
  const AgentContext context{labels, history};
  for (std::size_t i : order) {
    const Document& doc = validation[i];
    if (!doc.gold) throw Error(ErrorCode::MissingGold, "validation document '" + doc.id + "' has no gold label");
    const Label gold = labels.by_name(*doc.gold);
    const Classification first = primary.classify(doc.text);
    for (const auto& verdict : suite.evaluate(doc, first, context)) {
      if (verdict.abstained()) continue;
      auto& [correct, participated] = tally[verdict.agent()];
      ++participated;
      if (verdict.suggestion()->label() == gold) ++correct;
    }
    if (doc.user_id) history.record(*doc.user_id, gold);
  }

  std::map<AgentId, double> weights;
  bool any_positive = false;
  for (const auto& [id, counts] : tally) {
    const auto [correct, participated] = counts;
    const double w = participated == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(participated);
    weights[id] = w;
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) {
    for (auto& [_, w] : weights) w = 1.0;
  }
  if (weights.empty()) return AgentWeights();
  return AgentWeights(std::move(weights));
}

}  // namespace cascade
