#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/domain.hpp"

namespace cascade {

/// Seat of the primary model. classify must be deterministic for a fixed
/// trained state and may be called concurrently on a const instance.
class Classifier {
 public:
  virtual ~Classifier() = default;

  virtual const LabelSpace& label_space() const = 0;
  virtual Classification classify(std::string_view text) const = 0;
  /// One result per text, in input order.
  virtual std::vector<Classification> classify_batch(std::span<const std::string> texts) const;
};

/// Index of the largest value; ties go to the lowest index.
std::size_t argmax_lowest(std::span<const double> values);

}  // namespace cascade
