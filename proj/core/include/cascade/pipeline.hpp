#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "cascade/agents.hpp"
#include "cascade/baseline.hpp"
#include "cascade/consensus.hpp"
#include "cascade/data.hpp"
#include "cascade/suite.hpp"

namespace cascade {

struct PipelineOptions {
  BaselineOptions baseline;
  /// Replace baseline.temperature with the NLL-optimal one on the validation slice.
  bool calibrate_temperature = false;
  KeywordInduction keywords;
  ContextualOptions contextual;
  std::size_t history_capacity = 5;
  SplitFractions fractions{0.6, 0.2, 0.2};
  bool stratify = true;
  std::uint64_t seed = 42;
};

/// Everything trained from one labeled corpus: the baseline on the train
/// slice, the keyword map induced from the train slice, and agent weights
/// (and optionally the baseline temperature) fitted on the validation slice.
struct TrainedSystem {
  CorpusSplit split;
  BaselineModel model;
  KeywordMap keywords;
  RuleSet rules;
  AgentWeights weights;
  AgentSuite suite;
};

AgentSuite make_suite(const KeywordMap& keywords, const RuleSet& rules, AgentWeights weights,
                      const ContextualOptions& contextual = {}, std::size_t history_capacity = 5);

/// primary, when given, replaces the trained baseline as the classifier the
/// weights are estimated against (e.g. a remote model).
TrainedSystem train_system(std::span<const Document> corpus, std::optional<std::string_view> rules_json,
                           const PipelineOptions& options, const Classifier* primary = nullptr);

}  // namespace cascade
