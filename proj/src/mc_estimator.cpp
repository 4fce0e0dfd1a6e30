#include "lcslab/mc_estimator.hpp"

#include <chrono>
#include <cmath>
#include <set>
#include <string>

#include "lcslab/error.hpp"
#include "lcslab/parallel.hpp"

namespace lcslab {

namespace {

using Wide = unsigned __int128;

long double as_ld(Wide v) { return static_cast<long double>(v); }

}  // namespace

void ExperimentConfig::validate() const {
  if (n < 1) throw InvalidInput("n must be >= 1");
  if (k < 2) throw InvalidInput("k must be >= 2");
  if (trials < 2) throw InvalidInput("trials must be >= 2");
  if (batch_size < 1) throw InvalidInput("batch_size must be >= 1");
  if (!(confidence_level > 0.0 && confidence_level < 1.0))
    throw InvalidInput("confidence level must be in (0, 1)");
  if (group_size != 0 && (group_size < 2 || trials % group_size != 0))
    throw InvalidInput("group_size must be >= 2 and divide trials");
  if (mode == SamplingMode::kExhaustive) {
    const auto tuples = checked_power(alphabet.size(), std::uint64_t{k} * n);
    if (!tuples || *tuples != trials)
      throw InvalidInput("exhaustive mode needs trials == q^(k n)");
  }
  if (k > 2) {
    std::uint64_t cells = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (cells > cell_budget / (n + 1))
        throw ResourceError("k-way LCS at n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                            " exceeds the DP cell budget of " + std::to_string(cell_budget));
      cells *= n + 1;
    }
  }
}

std::uint64_t trial_stream_key(std::uint64_t master_seed, std::uint64_t trial, std::uint64_t index) noexcept {
  return derive_key(master_seed, {static_cast<std::uint64_t>(StreamDomain::kTrial), trial, index});
}

std::vector<Sequence> trial_sequences(const ExperimentConfig& config, std::uint64_t trial) {
  std::vector<Sequence> seqs;
  seqs.reserve(config.k);
  if (config.mode == SamplingMode::kExhaustive) {
    const Sequence joined = sequence_from_index(trial, config.alphabet.size(), config.n * config.k);
    for (unsigned s = 0; s < config.k; ++s) {
      const auto part = joined.symbols().subspan(s * config.n, config.n);
      seqs.emplace_back(std::vector<Symbol>(part.begin(), part.end()), config.alphabet.size());
    }
    return seqs;
  }
  for (unsigned s = 0; s < config.k; ++s)
    seqs.push_back(draw_sequence(config.alphabet, config.n, trial_stream_key(config.master_seed, trial, s)));
  return seqs;
}

std::size_t trial_length(const ExperimentConfig& config, std::uint64_t trial) {
  const auto seqs = trial_sequences(config, trial);
  return config.k == 2 ? lcs2_length(seqs[0], seqs[1]) : lcs_k_dominant(seqs);
}

EstimateRecord summarize_trials(const ExperimentConfig& config, std::span<const std::uint32_t> lengths) {
  EstimateRecord r;
  r.config = config;
  r.histogram.assign(config.n + 1, 0);
  Wide s1 = 0, s2 = 0, s3 = 0;
  for (std::uint32_t l : lengths) {
    ++r.histogram[l];
    s1 += l;
    s2 += Wide{l} * l;
    s3 += Wide{l} * l * l;
  }
  const Wide count = lengths.size();
  const long double mean = as_ld(s1) / as_ld(count);
  r.mean_length = static_cast<double>(mean);
  r.gamma_hat = r.mean_length / static_cast<double>(config.n);

  // exact integer numerator; never negative by Cauchy-Schwarz
  const Wide spread = count * s2 - s1 * s1;
  if (config.group_size == 0) {
    r.sample_variance = static_cast<double>(as_ld(spread) / (as_ld(count) * as_ld(count - 1)));
  } else {
    const std::uint64_t g = config.group_size;
    long double acc = 0.0L;
    for (std::size_t start = 0; start < lengths.size(); start += g) {
      Wide g1 = 0, g2 = 0;
      for (std::size_t i = start; i < start + g; ++i) {
        g1 += lengths[i];
        g2 += Wide{lengths[i]} * lengths[i];
      }
      acc += as_ld(Wide{g} * g2 - g1 * g1) / (as_ld(g) * as_ld(g - 1));
    }
    r.sample_variance = static_cast<double>(acc / static_cast<long double>(lengths.size() / g));
  }

  const long double m2 = as_ld(spread) / (as_ld(count) * as_ld(count));
  const long double m3 = as_ld(s3) / as_ld(count) - 3.0L * mean * as_ld(s2) / as_ld(count) + 2.0L * mean * mean * mean;
  r.skewness = m2 > 0 ? static_cast<double>(m3 / std::pow(m2, 1.5L)) : 0.0;

  const SampleSummary summary{lengths.size(), r.mean_length, r.sample_variance};
  r.mean_ci = mean_ci_t(summary, config.confidence_level);
  r.variance_ci = variance_ci_chi2(summary, config.confidence_level);
  return r;
}

EstimateRecord run_experiment(const ExperimentConfig& config, int workers) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::uint32_t> lengths(config.trials);
  const auto trials = static_cast<std::int64_t>(config.trials);
  const auto chunk = static_cast<int>(std::min<std::uint64_t>(config.batch_size, 1u << 20));
#pragma omp parallel for schedule(dynamic, chunk) num_threads(resolve_workers(workers))
  for (std::int64_t t = 0; t < trials; ++t)
    lengths[t] = static_cast<std::uint32_t>(trial_length(config, static_cast<std::uint64_t>(t)));
  EstimateRecord r = summarize_trials(config, lengths);
  r.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace serial {

EstimateRecord run_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::uint32_t> lengths;
  lengths.reserve(config.trials);
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    const auto seqs = trial_sequences(config, t);
    const std::size_t len = config.k == 2 ? reference::lcs2_length_dp(seqs[0], seqs[1])
                                          : lcs_k(seqs, config.cell_budget).length;
    lengths.push_back(static_cast<std::uint32_t>(len));
  }
  EstimateRecord r = summarize_trials(config, lengths);
  r.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace serial

ExactVsMc compare_exact_vs_mc(unsigned n, unsigned q, ExperimentConfig mc_config,
                              const ExactOptions& exact_options, int workers) {
  mc_config.n = n;
  mc_config.k = 2;
  mc_config.alphabet = Alphabet::uniform(q);
  if (mc_config.mode == SamplingMode::kExhaustive) {
    const auto all = checked_power(q, 2 * std::uint64_t{n});
    if (!all) throw ResourceError("exhaustive sampling: q^(2n) does not fit in 64 bits");
    mc_config.trials = *all;
  }
  ExactVsMc out;
  out.exact = exact_pair_stats(n, q, exact_options);
  out.estimate = run_experiment(mc_config, workers);
  out.eps_gamma = std::abs(out.exact.gamma() - out.estimate.gamma_hat);
  out.eps_var = std::abs(out.exact.variance() - out.estimate.sample_variance);
  return out;
}

double gamma_predictor(unsigned k, unsigned q) {
  if (k < 2 || q < 2) throw InvalidInput("gamma_predictor needs k >= 2 and q >= 2");
  return 2.0 / (std::sqrt(static_cast<double>(q) * k / 2.0) + 1.0);
}

PowerLawFit fit_power_law(std::span<const double> n, std::span<const double> variance) {
  if (n.size() != variance.size()) throw InvalidInput("fit_power_law: size mismatch");
  if (std::set<double>(n.begin(), n.end()).size() < 3)
    throw InvalidInput("fit_variance_growth needs at least 3 distinct lengths");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(n[i] > 0.0) || !(variance[i] > 0.0))
      throw InvalidInput("fit_variance_growth needs positive lengths and variances");
    x.push_back(std::log(n[i]));
    y.push_back(std::log(variance[i]));
  }
  const double m = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  fit.coefficient = std::exp(my - fit.exponent * mx);
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

PowerLawFit fit_variance_growth(std::span<const EstimateRecord> records) {
  std::vector<double> n, v;
  for (const auto& r : records) {
    if (r.config.k != records.front().config.k || !(r.config.alphabet == records.front().config.alphabet))
      throw InvalidInput("fit_variance_growth: records must share k and alphabet");
    n.push_back(static_cast<double>(r.config.n));
    v.push_back(r.sample_variance);
  }
  return fit_power_law(n, v);
}

unsigned mainville_index(std::span<const double> probs) {
  double s = 0.0;
  for (double p : probs) s += p * p;
  if (!(s > 0.0)) throw InvalidInput("mainville_index: probabilities are all zero");
  // tolerance absorbs rounding in sum p^2 for uniform vectors
  return static_cast<unsigned>(std::floor(1.0 / s + 1e-9));
}

}  // namespace lcslab
