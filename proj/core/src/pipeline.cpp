#include "cascade/pipeline.hpp"

#include "cascade/error.hpp"
#include "cascade/log.hpp"

namespace cascade {

AgentSuite make_suite(const KeywordMap& keywords, const RuleSet& rules, AgentWeights weights,
                      const ContextualOptions& contextual, std::size_t history_capacity) {
  std::vector<std::shared_ptr<const Agent>> agents{
      std::make_shared<LexicalAgent>(keywords),
      std::make_shared<ContextualAgent>(contextual),
      std::make_shared<LogicAgent>(rules),
  };
  return AgentSuite(std::move(agents), std::move(weights), history_capacity);
}

TrainedSystem train_system(std::span<const Document> corpus, std::optional<std::string_view> rules_json,
                           const PipelineOptions& options, const Classifier* primary) {
  CorpusSplit parts = split(corpus, options.fractions, options.seed, options.stratify);
  if (parts.train.empty()) throw Error(ErrorCode::EmptyCorpus, "training slice is empty");
  BaselineModel model = BaselineModel::train(parts.train, options.baseline);
  if (options.calibrate_temperature && !parts.validation.empty()) {
    model = model.with_temperature(fit_temperature(model, parts.validation));
    log().info("calibrated baseline temperature: {}", model.temperature());
  }
  const LabelSpace& labels = model.label_space();
  KeywordMap keywords = induce_lexical_map(parts.train, labels, options.keywords);
  RuleSet rules = rules_json ? RuleSet::from_json(*rules_json, labels) : RuleSet{};

  AgentSuite suite = make_suite(keywords, rules, AgentWeights(), options.contextual, options.history_capacity);
  AgentWeights weights;
  if (!parts.validation.empty()) {
    weights = estimate_weights(suite, parts.validation, primary ? *primary : model);
    suite = suite.with_weights(weights);
  }
  return TrainedSystem{std::move(parts), std::move(model), std::move(keywords), std::move(rules),
                       std::move(weights), std::move(suite)};
}

}  // namespace cascade
