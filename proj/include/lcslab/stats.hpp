#pragma once

#include <cstdint>

namespace lcslab {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  double width() const noexcept { return hi - lo; }
};

/// Count, mean and unbiased (divisor count-1) variance of a sample.
struct SampleSummary {
  std::uint64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;
};

double student_t_quantile(double p, double degrees_of_freedom);
double chi2_quantile(double p, double degrees_of_freedom);

/// mean +- t_{(1+level)/2, count-1} * sqrt(variance / count).
/// Throws InvalidInput when count < 2 or level is outside (0, 1).
Interval mean_ci_t(const SampleSummary& s, double level);

/// [(count-1) s^2 / chi2_{(1+level)/2}, (count-1) s^2 / chi2_{(1-level)/2}].
/// Assumes roughly normal outcomes. Same preconditions as mean_ci_t.
Interval variance_ci_chi2(const SampleSummary& s, double level);

}  // namespace lcslab
