#pragma once

#include <span>
#include <string>
#include <vector>

#include "lcslab/mc_estimator.hpp"

namespace lcslab {

struct SweepPoint {
  double value = 0.0;
  EstimateRecord record;
};

/// Estimates along one parameter, values strictly increasing.
struct SweepCurve {
  std::string parameter_name;
  std::vector<SweepPoint> points;
};

/// Master seed of point `index`. Each point is an ordinary run_experiment
/// with this seed, so a single point can be reproduced on its own.
std::uint64_t sweep_point_seed(std::uint64_t master_seed, std::uint64_t index) noexcept;

/// Binary alphabet with probs (1 - p, p) for each p in (0, 0.5].
/// `base` supplies n, k, trials, grouping, seed and confidence level.
SweepCurve sweep_p(const ExperimentConfig& base, std::span<const double> p_grid, int workers = 0);

/// Uniform alphabets of the given sizes (>= 2, strictly increasing).
SweepCurve sweep_alphabet(const ExperimentConfig& base, std::span<const unsigned> q_list, int workers = 0);

/// gamma_hat * sqrt(q) of an alphabet sweep point; tends to 2 as q grows.
double scaled_gamma(const SweepPoint& point);

/// "start:stop:step" (inclusive, tolerant of rounding) or "a,b,c".
std::vector<double> parse_grid(const std::string& text);

}  // namespace lcslab
