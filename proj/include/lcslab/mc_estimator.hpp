#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lcslab/exact_enum.hpp"
#include "lcslab/lcs.hpp"
#include "lcslab/seqgen.hpp"
#include "lcslab/stats.hpp"

namespace lcslab {

enum class SamplingMode {
  /// Trial t draws k fresh sequences from streams keyed (seed, t, 0..k-1).
  kRandom,
  /// Trial t is the t-th k-tuple in lexicographic order; trials must equal
  /// q^(kn). Turns the estimator into exhaustive enumeration for checks.
  kExhaustive,
};

struct ExperimentConfig {
  std::size_t n = 10;
  unsigned k = 2;
  Alphabet alphabet = Alphabet::uniform(2);
  std::uint64_t trials = std::uint64_t{1} << 18;
  /// Trials per scheduling chunk. Has no effect on results.
  std::uint64_t batch_size = 256;
  /// 0 for independent draws. Otherwise trials are split into consecutive
  /// groups of this size (datasets), the mean is the mean of group means and
  /// the variance is the mean of within-group unbiased variances.
  std::uint64_t group_size = 0;
  std::uint64_t master_seed = 0;
  double confidence_level = 0.95;
  /// For k > 2, (n+1)^k must fit, matching what lcs_k would accept.
  std::uint64_t cell_budget = kDefaultCellBudget;
  SamplingMode mode = SamplingMode::kRandom;

  void validate() const;
};

/// Monte Carlo estimate of |LCS| statistics. sample_variance uses divisor
/// trials - 1 (or the grouped rule above); ExactResult uses the population
/// variance.
struct EstimateRecord {
  ExperimentConfig config;
  double mean_length = 0.0;
  double gamma_hat = 0.0;
  double sample_variance = 0.0;
  /// histogram[L] = trials with LCS length L; size n + 1.
  std::vector<std::uint64_t> histogram;
  Interval mean_ci;
  Interval variance_ci;
  /// Population skewness of the trial lengths; the chi-square variance
  /// interval assumes this is near 0.
  double skewness = 0.0;
  double wall_time_seconds = 0.0;
};

/// Key of sequence `index` in trial `trial`.
std::uint64_t trial_stream_key(std::uint64_t master_seed, std::uint64_t trial, std::uint64_t index) noexcept;

/// The k sequences of one trial.
std::vector<Sequence> trial_sequences(const ExperimentConfig& config, std::uint64_t trial);

/// LCS length of one trial: bit-parallel for k = 2, dominant points for k > 2.
std::size_t trial_length(const ExperimentConfig& config, std::uint64_t trial);

/// Parallel over trials; the result is bit-identical for every worker count.
/// Throws ResourceError before any work when the cell budget is violated.
EstimateRecord run_experiment(const ExperimentConfig& config, int workers = 0);

namespace serial {
/// Trial-by-trial loop with lcs_k for k > 2; reference for run_experiment.
EstimateRecord run_experiment(const ExperimentConfig& config);
}  // namespace serial

/// Builds a record from per-trial lengths (index = trial).
EstimateRecord summarize_trials(const ExperimentConfig& config, std::span<const std::uint32_t> lengths);

struct ExactVsMc {
  double eps_gamma = 0.0;
  double eps_var = 0.0;
  ExactResult exact;
  EstimateRecord estimate;
};

/// |gamma - gamma_hat| and |Var - Var_hat| for uniform pairs at (n, q).
/// `mc_config` supplies trials, grouping, seed and mode; n, k and the
/// alphabet are overridden, and so are trials in exhaustive mode.
ExactVsMc compare_exact_vs_mc(unsigned n, unsigned q, ExperimentConfig mc_config,
                              const ExactOptions& exact_options = {}, int workers = 0);

/// 2 / (sqrt(q k / 2) + 1).
double gamma_predictor(unsigned k, unsigned q);

struct PowerLawFit {
  double exponent = 0.0;
  double coefficient = 0.0;
  double r_squared = 0.0;
};

/// Least squares of log(variance) on log(n). Needs >= 3 distinct n.
PowerLawFit fit_variance_growth(std::span<const EstimateRecord> records);

/// Same fit on raw (n, variance) points.
PowerLawFit fit_power_law(std::span<const double> n, std::span<const double> variance);

/// floor(1 / sum p_i^2).
unsigned mainville_index(std::span<const double> probs);

}  // namespace lcslab
