#pragma once

#include <cstddef>
#include <span>

namespace cascade {

/// Regularized incomplete beta I_x(a, b), evaluated with the Lentz continued
/// fraction. a, b > 0; x in [0, 1].
double incomplete_beta(double a, double b, double x);

/// CDF of Student's t distribution with df degrees of freedom (df > 0).
double student_t_cdf(double t, double df);

struct TTestResult {
  double t = 0.0;
  double p = 1.0;  // two-sided
  std::size_t df = 0;
  double mean_difference = 0.0;
  /// Every difference a_i - b_i is identical, so the sample variance is 0 and
  /// the statistic is undefined. t and p then hold their limits: t = 0, p = 1
  /// when the differences are all zero, otherwise t = +/-inf and p = 0.
  bool degenerate_variance = false;
};

/// Paired two-sided t-test on d = a - b with the n-1 sample deviation.
/// Throws LengthMismatch for unequal lengths and InvalidArgument for n < 2.
TTestResult paired_t_test(std::span<const double> a, std::span<const double> b);

}  // namespace cascade
