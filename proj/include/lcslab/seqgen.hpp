#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lcslab/rng.hpp"
#include "lcslab/sequence.hpp"

namespace lcslab {

/// Symbol set {0..q-1} with a probability vector.
class Alphabet {
 public:
  static Alphabet uniform(unsigned q);
  /// Validates: 2 <= q <= 64, every p >= 0, sum within 1e-12 of 1.
  static Alphabet from_probs(std::vector<double> probs);

  unsigned size() const noexcept { return static_cast<unsigned>(probs_.size()); }
  const std::vector<double>& probs() const noexcept { return probs_; }
  bool is_uniform() const noexcept;

  /// Draws one symbol. Symbols with zero probability are never returned.
  Symbol draw(CounterRng& rng) const noexcept;

  friend bool operator==(const Alphabet& x, const Alphabet& y) { return x.probs_ == y.probs_; }

 private:
  explicit Alphabet(std::vector<double> probs);
  std::vector<double> probs_;
  std::vector<double> cumulative_;
  Symbol last_nonzero_ = 0;
};

struct DatasetSpec {
  Alphabet alphabet = Alphabet::uniform(2);
  std::size_t seq_length = 1;
  std::size_t count = 1;
  std::uint64_t master_seed = 0;

  void validate() const;
};

struct SequenceDataset {
  DatasetSpec spec;
  std::vector<Sequence> sequences;
};

/// n i.i.d. symbols from the stream keyed `key`.
Sequence draw_sequence(const Alphabet& alphabet, std::size_t n, std::uint64_t key);

/// Key of dataset sequence i under `master_seed`.
std::uint64_t dataset_stream_key(std::uint64_t master_seed, std::uint64_t index) noexcept;

/// Parallel generation. Sequence i depends only on (master_seed, i), so the
/// output is identical for any worker count and to serial::generate.
/// `workers` <= 0 uses the OpenMP default.
SequenceDataset generate(const DatasetSpec& spec, int workers = 0);

namespace serial {
SequenceDataset generate(const DatasetSpec& spec);
}

/// Default ceiling on q^n for enumerate_all.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 30;

/// q^n, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> checked_power(std::uint64_t q, std::uint64_t n) noexcept;

/// All q^n sequences of length n in lexicographic order.
///
///   for (SequenceEnumerator e(2, 3); e; ++e) use(*e);
class SequenceEnumerator {
 public:
  SequenceEnumerator(unsigned q, std::size_t n, std::uint64_t budget = kDefaultEnumerationBudget);

  explicit operator bool() const noexcept { return !done_; }
  const Sequence& operator*() const noexcept { return current_; }
  SequenceEnumerator& operator++();

  std::uint64_t total() const noexcept { return total_; }

 private:
  std::vector<Symbol> digits_;
  Sequence current_;
  unsigned q_;
  std::uint64_t total_;
  bool done_ = false;
};

/// Materialized enumerate_all; prefer SequenceEnumerator for large sets.
std::vector<Sequence> enumerate_all(unsigned q, std::size_t n,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

/// Digits of `index` in base q, most significant first, as a length-n sequence.
Sequence sequence_from_index(std::uint64_t index, unsigned q, std::size_t n);

struct CoverageReport {
  std::uint64_t distinct_count = 0;
  std::uint64_t duplicate_count = 0;
  /// q^n, saturated to UINT64_MAX when not representable.
  std::uint64_t total_possible = 0;
  bool total_saturated = false;
  /// distinct / q^n; 0 when saturated.
  double coverage_fraction = 0.0;
  /// distinct / min(count, q^n): how close the sample is to duplicate-free.
  double relative_coverage = 0.0;
  /// relative_coverage >= kHighCoverageThreshold. The threshold is a local
  /// convention, not a published figure.
  bool high_coverage = false;
};

inline constexpr double kHighCoverageThreshold = 0.99;

struct CompositionReport {
  std::vector<double> global_freq;
  /// n rows of q relative frequencies.
  std::vector<std::vector<double>> per_position_freq;
  double chi2_global = 0.0;
  std::vector<double> chi2_positions;
  /// Degrees of freedom: symbols with nonzero expected probability minus one.
  unsigned degrees_of_freedom = 0;
  /// 99.9% quantile of chi-square with `degrees_of_freedom`, for reference.
  double chi2_critical_999 = 0.0;
};

CoverageReport coverage(const SequenceDataset& dataset);
CompositionReport composition(const SequenceDataset& dataset);

/// Pearson statistic of `counts` against expected probabilities `probs`.
/// A positive count on a zero-probability symbol yields +infinity.
double pearson_chi2(const std::vector<std::uint64_t>& counts, const std::vector<double>& probs);

}  // namespace lcslab
