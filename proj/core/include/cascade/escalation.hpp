#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/agents.hpp"
#include "cascade/classifier.hpp"
#include "cascade/consensus.hpp"
#include "cascade/domain.hpp"
#include "cascade/suite.hpp"

namespace cascade {

struct RouterConfig {
  double tau = 0.7;  // in [0, 1]
  bool escalation_enabled = true;

  void validate() const;
};

enum class Path { accepted, escalated };

std::string_view to_string(Path path) noexcept;

/// accepted iff confidence >= tau, or escalation is disabled.
Path route(const Classification& primary, const RouterConfig& config);

struct RoutedDecision {
  std::string document_id;
  Classification primary;
  Path path;
  Classification final;
  std::optional<ConsensusResult> consensus;  // escalated only
  std::vector<AgentVerdict> verdicts;         // escalated only, roster order
};

/// Routes one document whose primary classification is already known. On
/// escalation runs a single agent round and consensus. Afterwards the final
/// label is appended to the user's history.
RoutedDecision decide(const Document& doc, const Classification& primary, const AgentSuite& agents,
                      const RouterConfig& config, const LabelSpace& labels, UserHistory& history);

RoutedDecision classify_cascade(const Document& doc, const Classifier& primary, const AgentSuite& agents,
                                const RouterConfig& config, UserHistory& history);

/// Runs the cascade over a corpus with a fresh history. Documents are
/// processed in seq order; results come back in input order. The primary
/// classifier is called once, batched.
std::vector<RoutedDecision> run_cascade(std::span<const Document> corpus, const Classifier& primary,
                                        const AgentSuite& agents, const RouterConfig& config);

/// Same, reusing precomputed primary classifications (aligned with corpus).
std::vector<RoutedDecision> run_cascade(std::span<const Document> corpus,
                                        std::span<const Classification> primary, const AgentSuite& agents,
                                        const RouterConfig& config, const LabelSpace& labels);

struct DecompositionReport {
  std::size_t total = 0;
  std::size_t accepted = 0;
  std::size_t accepted_correct = 0;
  std::size_t escalated = 0;
  std::size_t escalated_correct = 0;
  double p_accept = 0.0;
  double acc_accept = 0.0;  // 0 when no document was accepted
  double p_escalate = 0.0;
  double acc_escalate = 0.0;  // 0 when no document was escalated
  double overall = 0.0;
  bool acc_accept_defined = false;
  bool acc_escalate_defined = false;
};

/// Empirical P(accept), conditional accuracies and overall accuracy. gold is
/// aligned with decisions.
DecompositionReport decompose_accuracy(std::span<const RoutedDecision> decisions, std::span<const Label> gold);

/// Gold labels of a corpus resolved against a label space. Throws MissingGold.
std::vector<Label> gold_labels(std::span<const Document> corpus, const LabelSpace& labels);

}  // namespace cascade
