#include "lcslab/seqgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "lcslab/error.hpp"
#include "lcslab/parallel.hpp"
#include "lcslab/stats.hpp"

namespace lcslab {

Alphabet::Alphabet(std::vector<double> probs) : probs_(std::move(probs)) {
  cumulative_.resize(probs_.size());
  std::partial_sum(probs_.begin(), probs_.end(), cumulative_.begin());
  for (std::size_t i = 0; i < probs_.size(); ++i)
    if (probs_[i] > 0.0) last_nonzero_ = static_cast<Symbol>(i);
}

Alphabet Alphabet::uniform(unsigned q) {
  if (q < 2 || q > kMaxAlphabet) throw InvalidInput("alphabet size must be in [2, 64]");
  return Alphabet(std::vector<double>(q, 1.0 / q));
}

Alphabet Alphabet::from_probs(std::vector<double> probs) {
  if (probs.size() < 2 || probs.size() > kMaxAlphabet)
    throw InvalidInput("alphabet size must be in [2, 64], got " + std::to_string(probs.size()));
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw InvalidInput("probabilities must be finite and >= 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw InvalidInput("probabilities must sum to 1 (got " + std::to_string(sum) + ")");
  return Alphabet(std::move(probs));
}

bool Alphabet::is_uniform() const noexcept {
  return std::all_of(probs_.begin(), probs_.end(), [&](double p) { return p == probs_.front(); });
}

Symbol Alphabet::draw(CounterRng& rng) const noexcept {
  const double u = rng.uniform();
  for (std::size_t i = 0; i < cumulative_.size(); ++i)
    if (u < cumulative_[i] && probs_[i] > 0.0) return static_cast<Symbol>(i);
  // u landed in the rounding gap above the last cumulative sum
  return last_nonzero_;
}

void DatasetSpec::validate() const {
  if (seq_length < 1) throw InvalidInput("sequence length must be >= 1");
  if (count < 1) throw InvalidInput("dataset count must be >= 1");
}

Sequence draw_sequence(const Alphabet& alphabet, std::size_t n, std::uint64_t key) {
  CounterRng rng(key);
  std::vector<Symbol> symbols(n);
  for (auto& s : symbols) s = alphabet.draw(rng);
  return Sequence(std::move(symbols), alphabet.size());
}

std::uint64_t dataset_stream_key(std::uint64_t master_seed, std::uint64_t index) noexcept {
  return derive_key(master_seed, {static_cast<std::uint64_t>(StreamDomain::kDataset), index});
}

SequenceDataset generate(const DatasetSpec& spec, int workers) {
  spec.validate();
  SequenceDataset out{spec, std::vector<Sequence>(spec.count, Sequence(spec.alphabet.size()))};
  const auto count = static_cast<std::int64_t>(spec.count);
  const int threads = resolve_workers(workers);
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i)
    out.sequences[i] = draw_sequence(spec.alphabet, spec.seq_length, dataset_stream_key(spec.master_seed, i));
  return out;
}

namespace serial {

SequenceDataset generate(const DatasetSpec& spec) {
  spec.validate();
  SequenceDataset out{spec, {}};
  out.sequences.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i)
    out.sequences.push_back(draw_sequence(spec.alphabet, spec.seq_length, dataset_stream_key(spec.master_seed, i)));
  return out;
}

}  // namespace serial

std::optional<std::uint64_t> checked_power(std::uint64_t q, std::uint64_t n) noexcept {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
    r *= q;
  }
  return r;
}

SequenceEnumerator::SequenceEnumerator(unsigned q, std::size_t n, std::uint64_t budget)
    : digits_(n, 0), current_(std::vector<Symbol>(n, 0), q), q_(q) {
  const auto total = checked_power(q, n);
  if (!total || *total > budget)
    throw ResourceError("enumerating " + std::to_string(q) + "^" + std::to_string(n) +
                        " sequences exceeds the enumeration budget of " + std::to_string(budget));
  total_ = *total;
}

SequenceEnumerator& SequenceEnumerator::operator++() {
  std::size_t i = digits_.size();
  while (i > 0) {
    --i;
    if (++digits_[i] < q_) {
      current_ = Sequence(digits_, q_);
      return *this;
    }
    digits_[i] = 0;
  }
  done_ = true;
  return *this;
}

std::vector<Sequence> enumerate_all(unsigned q, std::size_t n, std::uint64_t budget) {
  std::vector<Sequence> out;
  SequenceEnumerator e(q, n, budget);
  out.reserve(e.total());
  for (; e; ++e) out.push_back(*e);
  return out;
}

Sequence sequence_from_index(std::uint64_t index, unsigned q, std::size_t n) {
  std::vector<Symbol> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = static_cast<Symbol>(index % q);
    index /= q;
  }
  return Sequence(std::move(digits), q);
}

CoverageReport coverage(const SequenceDataset& dataset) {
  CoverageReport r;
  std::unordered_set<std::string> seen;
  seen.reserve(dataset.sequences.size());
  for (const auto& s : dataset.sequences)
    seen.emplace(reinterpret_cast<const char*>(s.symbols().data()), s.size());
  r.distinct_count = seen.size();
  r.duplicate_count = dataset.sequences.size() - seen.size();

  const auto total = checked_power(dataset.spec.alphabet.size(), dataset.spec.seq_length);
  r.total_saturated = !total.has_value();
  r.total_possible = total.value_or(std::numeric_limits<std::uint64_t>::max());
  r.coverage_fraction = r.total_saturated ? 0.0 : double(r.distinct_count) / double(r.total_possible);
  const std::uint64_t attainable = std::min<std::uint64_t>(dataset.sequences.size(), r.total_possible);
  r.relative_coverage = attainable == 0 ? 0.0 : double(r.distinct_count) / double(attainable);
  r.high_coverage = r.relative_coverage >= kHighCoverageThreshold;
  return r;
}

double pearson_chi2(const std::vector<std::uint64_t>& counts, const std::vector<double>& probs) {
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  double chi2 = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = total * probs[i];
    if (expected == 0.0) {
      if (counts[i] > 0) return std::numeric_limits<double>::infinity();
      continue;
    }
    const double d = double(counts[i]) - expected;
    chi2 += d * d / expected;
  }
  return chi2;
}

CompositionReport composition(const SequenceDataset& dataset) {
  const unsigned q = dataset.spec.alphabet.size();
  const auto& probs = dataset.spec.alphabet.probs();
  std::size_t n = 0;
  for (const auto& s : dataset.sequences) n = std::max(n, s.size());

  std::vector<std::uint64_t> global(q, 0);
  std::vector<std::vector<std::uint64_t>> per_pos(n, std::vector<std::uint64_t>(q, 0));
  for (const auto& s : dataset.sequences)
    for (std::size_t i = 0; i < s.size(); ++i) {
      ++global[s[i]];
      ++per_pos[i][s[i]];
    }

  auto normalize = [q](const std::vector<std::uint64_t>& c) {
    const double total = std::accumulate(c.begin(), c.end(), 0.0);
    std::vector<double> f(q, 0.0);
    if (total > 0)
      for (unsigned i = 0; i < q; ++i) f[i] = double(c[i]) / total;
    return f;
  };

  CompositionReport r;
  r.global_freq = normalize(global);
  r.chi2_global = pearson_chi2(global, probs);
  r.per_position_freq.reserve(n);
  r.chi2_positions.reserve(n);
  for (const auto& c : per_pos) {
    r.per_position_freq.push_back(normalize(c));
    r.chi2_positions.push_back(pearson_chi2(c, probs));
  }
  const auto support = std::count_if(probs.begin(), probs.end(), [](double p) { return p > 0.0; });
  r.degrees_of_freedom = support > 1 ? static_cast<unsigned>(support - 1) : 0;
  r.chi2_critical_999 = r.degrees_of_freedom > 0 ? chi2_quantile(0.999, r.degrees_of_freedom) : 0.0;
  return r;
}

}  // namespace lcslab
