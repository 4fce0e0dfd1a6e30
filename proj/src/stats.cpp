#include "lcslab/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>

#include "lcslab/error.hpp"

namespace lcslab {

namespace {

void check(const SampleSummary& s, double level) {
  if (s.count < 2) throw InvalidInput("confidence interval needs at least 2 samples");
  if (!(level > 0.0 && level < 1.0)) throw InvalidInput("confidence level must be in (0, 1)");
}

}  // namespace

double student_t_quantile(double p, double degrees_of_freedom) {
  return boost::math::quantile(boost::math::students_t(degrees_of_freedom), p);
}

double chi2_quantile(double p, double degrees_of_freedom) {
  return boost::math::quantile(boost::math::chi_squared(degrees_of_freedom), p);
}

Interval mean_ci_t(const SampleSummary& s, double level) {
  check(s, level);
  const double dof = static_cast<double>(s.count - 1);
  const double half = student_t_quantile((1.0 + level) / 2.0, dof) *
                      std::sqrt(s.variance / static_cast<double>(s.count));
  return {s.mean - half, s.mean + half};
}

Interval variance_ci_chi2(const SampleSummary& s, double level) {
  check(s, level);
  const double dof = static_cast<double>(s.count - 1);
  const double scaled = dof * s.variance;
  return {scaled / chi2_quantile((1.0 + level) / 2.0, dof),
          scaled / chi2_quantile((1.0 - level) / 2.0, dof)};
}

}  // namespace lcslab
