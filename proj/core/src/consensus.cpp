#include "cascade/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "cascade/error.hpp"
#include "cascade/log.hpp"

namespace cascade {

using nlohmann::json;

namespace {

std::map<AgentId, double> all_ones() {
  std::map<AgentId, double> w;
  for (auto id : kAllAgents) w[id] = 1.0;
  return w;
}

}  // namespace

AgentWeights::AgentWeights() : weights_(all_ones()) {}

AgentWeights::AgentWeights(std::map<AgentId, double> weights) : weights_(std::move(weights)) {
  bool any_positive = false;
  for (const auto& [id, w] : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorCode::InvalidArgument,
                  "weight for " + std::string(to_string(id)) + " must be finite and >= 0");
    }
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw Error(ErrorCode::InvalidArgument, "at least one agent weight must be positive");
}

std::optional<double> AgentWeights::get(AgentId agent) const {
  auto it = weights_.find(agent);
  if (it == weights_.end()) return std::nullopt;
  return it->second;
}

AgentWeights AgentWeights::scaled(double factor) const {
  if (!(factor > 0.0)) throw Error(ErrorCode::InvalidArgument, "scale factor must be positive");
  auto w = weights_;
  for (auto& [_, v] : w) v *= factor;
  return AgentWeights(std::move(w));
}

AgentWeights AgentWeights::from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Malformed, std::string("weights JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::Malformed, "weights must be a JSON object");
  std::map<AgentId, double> w;
  for (const auto& [key, value] : j.items()) {
    auto id = agent_from_string(key);
    if (!id) throw Error(ErrorCode::UnknownAgent, "unknown agent '" + key + "' in weights");
    if (!value.is_number()) throw Error(ErrorCode::Malformed, "weight for '" + key + "' is not a number");
    w[*id] = value.get<double>();
  }
  return AgentWeights(std::move(w));
}

std::string AgentWeights::to_json() const {
  json j = json::object();
  for (const auto& [id, w] : weights_) j[std::string(to_string(id))] = w;
  return j.dump(2);
}

ConsensusResult aggregate(std::span<const AgentVerdict> verdicts, const AgentWeights& weights,
                          const Classification& primary, const LabelSpace& labels) {
  std::set<AgentId> seen;
  std::vector<double> score(labels.size(), 0.0);
  std::vector<bool> suggested(labels.size(), false);
  double weight_total = 0.0;
  std::size_t participants = 0;

  for (const auto& v : verdicts) {
    if (!seen.insert(v.agent()).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate verdict from agent " + std::string(to_string(v.agent())));
    }
    const auto w = weights.get(v.agent());
    if (!w) throw Error(ErrorCode::UnknownAgent, "no weight for agent " + std::string(to_string(v.agent())));
    if (v.abstained()) continue;
    const auto& s = *v.suggestion();
    const std::size_t y = labels.by_name(s.label().name).id;
    score[y] += *w * s.confidence();
    suggested[y] = true;
    weight_total += *w;
    ++participants;
  }

  if (participants == 0 || weight_total <= 0.0) {
    return ConsensusResult{primary, std::move(score), participants, {}, true, false};
  }

  // Scores are sums of decimal confidences, so a mathematical tie such as
  // 0.1 + 0.2 vs 0.3 must not be decided by rounding.
  std::optional<std::size_t> best;
  for (std::size_t y = 0; y < score.size(); ++y) {
    if (!suggested[y]) continue;
    if (!best || score[y] - score[*best] > kTieTolerance * std::max(1.0, std::abs(score[*best]))) best = y;
  }

  double c_final = score[*best] / weight_total;
  bool clamped = false;
  if (c_final > 1.0) {
    log().warn("consensus confidence {} exceeded 1 and was clamped", c_final);
    c_final = 1.0;
    clamped = true;
  }

  const Label winner = labels.by_id(*best);
  std::vector<AgentId> agreed;
  for (const auto& v : verdicts) {
    if (!v.abstained() && v.suggestion()->label().name == winner.name) agreed.push_back(v.agent());
  }
  return ConsensusResult{Classification(winner, c_final), std::move(score), participants,
                         std::move(agreed), false, clamped};
}

}  // namespace cascade
