#pragma once

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cascade/classifier.hpp"
#include "cascade/domain.hpp"

namespace cascade {

struct BaselineOptions {
  double smoothing = 1.0;    // additive smoothing, must be > 0
  double temperature = 1.0;  // log-posterior divisor, must be > 0
};

/// Multinomial naive Bayes over TF-IDF weighted term counts.
///
/// Training: idf(t) = ln((1 + N) / (1 + df(t))) + 1, every document's term
/// counts are scaled by idf and summed per class, and the per-class term
/// log-likelihoods use additive smoothing over the vocabulary. Scoring applies
/// the same idf weighting to the query, ignores unseen tokens, and turns the
/// joint log-scores into a posterior with a temperature-scaled softmax.
class BaselineModel final : public Classifier {
 public:
  static BaselineModel train(std::span<const Document> docs, BaselineOptions options = {});

  const LabelSpace& label_space() const override { return labels_; }
  Classification classify(std::string_view text) const override;

  /// ln P(class) + sum of idf-weighted term log-likelihoods, per class.
  std::vector<double> log_scores(std::string_view text) const;
  /// Normalized class posterior (sums to 1).
  std::vector<double> posterior(std::string_view text) const;

  BaselineModel with_temperature(double temperature) const;

  double smoothing() const noexcept { return smoothing_; }
  double temperature() const noexcept { return temperature_; }
  std::size_t vocabulary_size() const noexcept { return idf_.size(); }
  std::optional<std::size_t> feature_index(std::string_view token) const;
  double idf(std::size_t feature) const { return idf_.at(feature); }
  double log_prior(std::size_t label) const { return log_prior_.at(label); }
  double log_likelihood(std::size_t label, std::size_t feature) const {
    return log_likelihood_.at(label).at(feature);
  }

  std::string to_json() const;
  static BaselineModel from_json(std::string_view json);

 private:
  BaselineModel(LabelSpace labels, double smoothing, double temperature)
      : labels_(std::move(labels)), smoothing_(smoothing), temperature_(temperature) {}

  LabelSpace labels_;
  double smoothing_;
  double temperature_;
  std::vector<std::string> tokens_;  // feature index -> token, sorted
  std::unordered_map<std::string, std::size_t> vocabulary_;
  std::vector<double> idf_;
  std::vector<double> log_prior_;
  std::vector<std::vector<double>> log_likelihood_;  // [label][feature]
};

/// Temperature scaling: the T in [min_t, max_t] minimizing the mean negative
/// log-likelihood of the gold labels of docs. The loss is convex in 1/T, so a
/// golden-section search over 1/T finds the optimum.
double fit_temperature(const BaselineModel& model, std::span<const Document> docs, double min_t = 0.05,
                       double max_t = 100.0);

}  // namespace cascade
