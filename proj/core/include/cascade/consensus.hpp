#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/domain.hpp"

namespace cascade {

/// Per-agent reliability multipliers w_j. Defaults to 1 for every agent.
class AgentWeights {
 public:
  AgentWeights();
  /// Weights must be finite and >= 0 with at least one positive.
  explicit AgentWeights(std::map<AgentId, double> weights);

  std::optional<double> get(AgentId agent) const;
  const std::map<AgentId, double>& values() const noexcept { return weights_; }
  AgentWeights scaled(double factor) const;

  /// {"lexical": number, "contextual": number, "logic": number}
  static AgentWeights from_json(std::string_view json);
  std::string to_json() const;

  friend bool operator==(const AgentWeights&, const AgentWeights&) = default;

 private:
  std::map<AgentId, double> weights_;
};

struct ConsensusResult {
  Classification final;
  std::vector<double> per_label_score;  // indexed by label id: sum of w_j * c_j per suggested label
  std::size_t participants = 0;         // non-abstaining verdicts
  std::vector<AgentId> agreed_agents;   // participants whose suggestion is final.label
  bool fallback_used = false;           // nobody participated; final is the primary classification
  bool clamped = false;                 // c_final exceeded 1 and was clamped
};

/// Weighted-vote fusion of agent verdicts.
///
///   score(y) = sum_j [y_j == y] * w_j * c_j
///   y_final  = argmax over suggested labels of score(y), ties -> lowest label id
///   c_final  = score(y_final) / sum_j w_j
///
/// Scores within kTieTolerance (relative) of each other count as tied.
/// Both sums run over participating (non-abstaining) agents only. When no
/// agent participates, or every participant has weight 0, the primary
/// classification is returned with fallback_used set.
inline constexpr double kTieTolerance = 1e-9;

ConsensusResult aggregate(std::span<const AgentVerdict> verdicts, const AgentWeights& weights,
                          const Classification& primary, const LabelSpace& labels);

}  // namespace cascade
