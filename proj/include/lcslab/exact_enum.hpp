#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcslab/seqgen.hpp"

namespace lcslab {

using ExactCount = unsigned __int128;

/// Exhaustive LCS statistics over every k-tuple of length-n strings.
/// Variance is the population variance over all tuples.
struct ExactResult {
  unsigned n = 0;
  unsigned k = 2;
  unsigned q = 2;
  /// histogram[L] = number of tuples whose LCS length is L; size n + 1.
  /// Always counts the full q^(kn) tuples, including under symmetry reduction.
  std::vector<ExactCount> histogram;
  bool symmetry_reduced = false;
  /// Tuples whose LCS was actually computed.
  std::uint64_t evaluated_tuples = 0;

  ExactCount total() const;
  ExactCount sum() const;
  ExactCount sum_squares() const;

  double mean() const;
  double gamma() const;
  double variance() const;

  /// Exact rational values rounded half-up to `places` decimals.
  std::string mean_decimal(int places = 12) const;
  std::string gamma_decimal(int places = 12) const;
  std::string variance_decimal(int places = 12) const;
};

struct ExactOptions {
  /// Maximum tuples evaluated (after symmetry reduction).
  std::uint64_t budget = kDefaultEnumerationBudget;
  /// For binary alphabets, enumerate one first string per orbit of
  /// {complement all, reverse all} and weight by orbit size.
  bool use_symmetry = true;
  int workers = 0;
};

/// Exact statistics over all q^(2n) ordered pairs. Throws ResourceError
/// (suggesting Monte Carlo) when over budget.
ExactResult exact_pair_stats(unsigned n, unsigned q, const ExactOptions& options = {});

/// Same over all q^(kn) k-tuples; k == 2 delegates to exact_pair_stats.
ExactResult exact_k_stats(unsigned n, unsigned k, unsigned q, const ExactOptions& options = {});

/// floor(n/4) + 1.
unsigned concentration_delta(unsigned n) noexcept;

/// Histogram mass with length in [n - 2 delta, n].
double delta_concentration(const ExactResult& result);

/// num / den rounded half-up to `places` decimals, e.g. "0.562500000000".
std::string render_ratio(ExactCount num, ExactCount den, int places);

std::string to_string(ExactCount v);

namespace serial {

/// Unreduced brute force over every pair with the classical DP; the
/// independent cross-check for exact_pair_stats.
ExactResult exact_pair_stats(unsigned n, unsigned q, std::uint64_t budget = kDefaultEnumerationBudget);

/// Unreduced brute force over every k-tuple with the k-dimensional DP.
ExactResult exact_k_stats(unsigned n, unsigned k, unsigned q, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace serial

}  // namespace lcslab
