#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cascade/augment.hpp"
#include "cascade/classifier.hpp"
#include "cascade/domain.hpp"
#include "cascade/escalation.hpp"
#include "cascade/suite.hpp"

namespace cascade {

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;    // gold count
  std::size_t predicted = 0;  // predicted count
  bool precision_defined = false;  // predicted > 0
  bool recall_defined = false;     // support > 0
  bool f1_defined = false;         // class appears in gold or predictions
};

/// Standard single-label metrics. Undefined ratios are reported as 0 with
/// their flag cleared. macro_f1 averages the classes whose f1 is defined.
struct Metrics {
  std::size_t total = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  std::vector<ClassMetrics> per_class;              // by label id
  std::vector<std::vector<std::size_t>> confusion;  // [gold][predicted]
};

Metrics compute_metrics(std::span<const Label> predicted, std::span<const Label> gold, const LabelSpace& labels);

struct EvaluationReport {
  std::vector<std::string> labels;
  Metrics metrics;
  double escalation_rate = 0.0;
  DecompositionReport decomposition;
};

/// Throws EmptyInput / LengthMismatch.
EvaluationReport evaluate(std::span<const RoutedDecision> decisions, std::span<const Label> gold,
                          const LabelSpace& labels);

/// A system under test: predicted labels for a corpus, in corpus order.
using Predictor = std::function<std::vector<Label>(std::span<const Document>)>;

Predictor classifier_predictor(const Classifier& classifier);
/// Runs the full cascade over the corpus with a fresh history per call.
Predictor cascade_predictor(const Classifier& primary, AgentSuite agents, RouterConfig config);

struct RobustnessReport {
  double score = 0.0;  // macro-F1 over all augmented variants
  std::uint64_t augmentation_seed = 0;
  std::size_t variants = 0;
  std::map<Perturbation, double> per_perturbation;  // macro-F1 per kind
};

/// Augmented corpus in corpus order, kinds in enum order, seq renumbered 0..n-1.
std::vector<Document> augment_corpus(std::span<const Document> corpus, std::uint64_t seed,
                                     const std::set<Perturbation>& kinds);

RobustnessReport robustness_score(const Predictor& system, std::span<const Document> corpus,
                                  const LabelSpace& labels, std::uint64_t seed,
                                  const std::set<Perturbation>& kinds = default_perturbations());

struct SweepRow {
  double tau = 0.0;
  EvaluationReport report;
};

/// One full cascade evaluation per tau. taus must be ascending.
std::vector<SweepRow> sweep_threshold(std::span<const Document> corpus, const Classifier& primary,
                                      const AgentSuite& agents, std::span<const double> taus);

struct AblationSpec {
  std::string name;
  std::set<AgentId> agents;
  bool escalation_enabled = true;
};

/// full, no-lexical, no-contextual, no-logic, escalation-disabled.
std::vector<AblationSpec> default_ablations();

struct AblationResult {
  std::string name;
  AblationSpec spec;
  EvaluationReport report;
  RobustnessReport robustness;
};

/// Evaluates every configuration on the corpus at the given tau. Weights of
/// removed agents are simply unused. Results follow configs order.
std::vector<AblationResult> run_ablations(std::span<const Document> corpus, const Classifier& primary,
                                          const AgentSuite& agents, double tau,
                                          std::span<const AblationSpec> configs, std::uint64_t seed);

}  // namespace cascade
