#pragma once

#include <memory>
#include <set>
#include <span>
#include <vector>

#include "cascade/agents.hpp"
#include "cascade/classifier.hpp"
#include "cascade/consensus.hpp"
#include "cascade/domain.hpp"

namespace cascade {

/// The verdict agents that take part in an escalation round, their consensus
/// weights and the contextual history length. Agents are shared immutable
/// configuration; copying a suite is cheap.
class AgentSuite {
 public:
  AgentSuite() = default;
  AgentSuite(std::vector<std::shared_ptr<const Agent>> agents, AgentWeights weights,
             std::size_t history_capacity = 5);

  /// Agents in roster order (lexical, contextual, logic).
  const std::vector<std::shared_ptr<const Agent>>& agents() const noexcept { return agents_; }
  const AgentWeights& weights() const noexcept { return weights_; }
  std::size_t history_capacity() const noexcept { return history_capacity_; }
  bool has(AgentId id) const;
  bool empty() const noexcept { return agents_.empty(); }

  AgentSuite with_weights(AgentWeights weights) const;
  /// Keeps only the listed agents.
  AgentSuite restricted_to(const std::set<AgentId>& keep) const;
  AgentSuite without(AgentId id) const;

  /// One verdict per agent, roster order.
  std::vector<AgentVerdict> evaluate(const Document& doc, const Classification& primary,
                                     const AgentContext& context) const;

 private:
  std::vector<std::shared_ptr<const Agent>> agents_;
  AgentWeights weights_;
  std::size_t history_capacity_ = 5;
};

/// w_j = accuracy of agent j over the validation documents it did not
/// abstain on; 0 for agents that always abstain; all 1 if every agent ends
/// at 0. Documents are replayed in seq order and the contextual history is
/// fed each document's gold label after it is scored.
AgentWeights estimate_weights(const AgentSuite& suite, std::span<const Document> validation,
                              const Classifier& primary);

}  // namespace cascade
