#include "lcslab/exact_enum.hpp"

#include <algorithm>
#include <string>

#include "lcslab/error.hpp"
#include "lcslab/lcs.hpp"
#include "lcslab/parallel.hpp"

namespace lcslab {

namespace {

std::uint64_t reverse_bits(std::uint64_t x, unsigned n) {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < n; ++i, x >>= 1) r = (r << 1) | (x & 1);
  return r;
}

/// First strings to enumerate, each with the number of strings it stands for.
struct Representative {
  std::uint64_t index;
  std::uint64_t weight;
};

std::vector<Representative> representatives(unsigned n, std::uint64_t count, bool reduce) {
  std::vector<Representative> reps;
  if (!reduce) {
    reps.reserve(count);
    for (std::uint64_t a = 0; a < count; ++a) reps.push_back({a, 1});
    return reps;
  }
  // binary: index bits are the string, most significant first
  const std::uint64_t mask = count - 1;
  for (std::uint64_t a = 0; a < count; ++a) {
    const std::uint64_t r = reverse_bits(a, n);
    std::uint64_t images[4] = {a, a ^ mask, r, r ^ mask};
    if (*std::min_element(images, images + 4) != a) continue;
    std::sort(images, images + 4);
    reps.push_back({a, static_cast<std::uint64_t>(std::unique(images, images + 4) - images)});
  }
  return reps;
}

std::uint64_t pow_or_throw(unsigned q, std::uint64_t e, std::uint64_t budget, const char* what) {
  const auto v = checked_power(q, e);
  if (!v || *v > budget)
    throw ResourceError(std::string(what) + ": " + std::to_string(q) + "^" + std::to_string(e) +
                        " tuples exceed the enumeration budget of " + std::to_string(budget) +
                        "; use Monte Carlo estimation instead");
  return *v;
}

/// Counts LCS lengths of `pattern` against every length-`remaining` string,
/// walking the trie of second strings so each node costs one word update.
void count_pairs(const WordLcs& lcs, std::uint64_t state, unsigned remaining, unsigned q,
                 std::vector<std::uint64_t>& counts) {
  if (remaining == 1) {
    for (unsigned c = 0; c < q; ++c) ++counts[lcs.length(lcs.step(state, static_cast<Symbol>(c)))];
    return;
  }
  for (unsigned c = 0; c < q; ++c) count_pairs(lcs, lcs.step(state, static_cast<Symbol>(c)), remaining - 1, q, counts);
}

void merge(std::vector<ExactCount>& into, const std::vector<ExactCount>& from) {
  for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

ExactCount pow10(int p) {
  ExactCount r = 1;
  while (p-- > 0) r *= 10;
  return r;
}

}  // namespace

std::string to_string(ExactCount v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string render_ratio(ExactCount num, ExactCount den, int places) {
  const ExactCount scale = pow10(places);
  const ExactCount scaled = (num * scale * 2 + den) / (den * 2);
  std::string digits = to_string(scaled);
  if (places == 0) return digits;
  if (digits.size() <= static_cast<std::size_t>(places))
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  digits.insert(digits.size() - static_cast<std::size_t>(places), 1, '.');
  return digits;
}

ExactCount ExactResult::total() const {
  ExactCount t = 0;
  for (auto c : histogram) t += c;
  return t;
}

ExactCount ExactResult::sum() const {
  ExactCount t = 0;
  for (std::size_t l = 0; l < histogram.size(); ++l) t += histogram[l] * l;
  return t;
}

ExactCount ExactResult::sum_squares() const {
  ExactCount t = 0;
  for (std::size_t l = 0; l < histogram.size(); ++l) t += histogram[l] * l * l;
  return t;
}

double ExactResult::mean() const { return static_cast<double>(static_cast<long double>(sum()) / static_cast<long double>(total())); }

double ExactResult::gamma() const { return n == 0 ? 0.0 : mean() / n; }

double ExactResult::variance() const {
  const ExactCount t = total(), s = sum();
  const ExactCount num = t * sum_squares() - s * s;
  return static_cast<double>(static_cast<long double>(num) / (static_cast<long double>(t) * static_cast<long double>(t)));
}

std::string ExactResult::mean_decimal(int places) const { return render_ratio(sum(), total(), places); }

std::string ExactResult::gamma_decimal(int places) const { return render_ratio(sum(), total() * n, places); }

std::string ExactResult::variance_decimal(int places) const {
  const ExactCount t = total(), s = sum();
  return render_ratio(t * sum_squares() - s * s, t * t, places);
}

ExactResult exact_pair_stats(unsigned n, unsigned q, const ExactOptions& options) {
  if (n < 1 || n > 64) throw InvalidInput("exact_pair_stats: n must be in [1, 64]");
  if (q < 2 || q > kMaxAlphabet) throw InvalidInput("exact_pair_stats: q must be in [2, 64]");
  const std::uint64_t strings = pow_or_throw(q, n, options.budget, "exact_pair_stats");
  const bool reduce = options.use_symmetry && q == 2;
  const auto reps = representatives(n, strings, reduce);
  if (reps.size() > options.budget / strings)
    throw ResourceError("exact_pair_stats: " + std::to_string(reps.size()) + " x " + std::to_string(strings) +
                        " pairs exceed the enumeration budget of " + std::to_string(options.budget) +
                        "; use Monte Carlo estimation instead");

  ExactResult out;
  out.n = n;
  out.k = 2;
  out.q = q;
  out.symmetry_reduced = reduce;
  out.evaluated_tuples = reps.size() * strings;
  out.histogram.assign(n + 1, 0);

  const auto count = static_cast<std::int64_t>(reps.size());
#pragma omp parallel num_threads(resolve_workers(options.workers))
  {
    std::vector<ExactCount> local(n + 1, 0);
    std::vector<std::uint64_t> counts(n + 1);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t r = 0; r < count; ++r) {
      const Sequence a = sequence_from_index(reps[r].index, q, n);
      const WordLcs lcs(a.symbols(), q);
      std::fill(counts.begin(), counts.end(), 0);
      count_pairs(lcs, lcs.initial_state(), n, q, counts);
      for (unsigned l = 0; l <= n; ++l) local[l] += static_cast<ExactCount>(counts[l]) * reps[r].weight;
    }
#pragma omp critical(lcslab_exact_merge)
    merge(out.histogram, local);
  }
  return out;
}

ExactResult exact_k_stats(unsigned n, unsigned k, unsigned q, const ExactOptions& options) {
  if (k < 2) throw InvalidInput("exact_k_stats: k must be >= 2");
  if (k == 2) return exact_pair_stats(n, q, options);
  if (n < 1) throw InvalidInput("exact_k_stats: n must be >= 1");
  if (q < 2 || q > kMaxAlphabet) throw InvalidInput("exact_k_stats: q must be in [2, 64]");
  const std::uint64_t strings = pow_or_throw(q, n, options.budget, "exact_k_stats");
  const std::uint64_t rest = pow_or_throw(q, std::uint64_t{n} * (k - 1), options.budget, "exact_k_stats");
  const bool reduce = options.use_symmetry && q == 2;
  const auto reps = representatives(n, strings, reduce);
  if (reps.size() > options.budget / rest)
    throw ResourceError("exact_k_stats: " + std::to_string(reps.size()) + " x " + std::to_string(rest) +
                        " tuples exceed the enumeration budget of " + std::to_string(options.budget) +
                        "; use Monte Carlo estimation instead");

  const auto all = enumerate_all(q, n, options.budget);

  ExactResult out;
  out.n = n;
  out.k = k;
  out.q = q;
  out.symmetry_reduced = reduce;
  out.evaluated_tuples = reps.size() * rest;
  out.histogram.assign(n + 1, 0);

  const auto count = static_cast<std::int64_t>(reps.size());
#pragma omp parallel num_threads(resolve_workers(options.workers))
  {
    std::vector<ExactCount> local(n + 1, 0);
    std::vector<std::uint64_t> counts(n + 1);
    std::vector<Sequence> tuple(k, Sequence(q));
    std::vector<std::uint64_t> digit(k, 0);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t r = 0; r < count; ++r) {
      std::fill(counts.begin(), counts.end(), 0);
      tuple[0] = all[reps[r].index];
      std::fill(digit.begin(), digit.end(), 0);
      for (std::uint64_t t = 0; t < rest; ++t) {
        if (t > 0)
          for (std::size_t s = k - 1; s >= 1; --s) {
            if (++digit[s] < strings) break;
            digit[s] = 0;
          }
        for (std::size_t s = 1; s < k; ++s) tuple[s] = all[digit[s]];
        ++counts[lcs_k_dominant(tuple)];
      }
      for (unsigned l = 0; l <= n; ++l) local[l] += static_cast<ExactCount>(counts[l]) * reps[r].weight;
    }
#pragma omp critical(lcslab_exact_merge)
    merge(out.histogram, local);
  }
  return out;
}

unsigned concentration_delta(unsigned n) noexcept { return n / 4 + 1; }

double delta_concentration(const ExactResult& result) {
  const unsigned n = result.n;
  const unsigned delta = concentration_delta(n);
  const unsigned lo = n >= 2 * delta ? n - 2 * delta : 0;
  ExactCount inside = 0;
  for (unsigned l = lo; l <= n && l < result.histogram.size(); ++l) inside += result.histogram[l];
  const ExactCount total = result.total();
  return total == 0 ? 0.0
                    : static_cast<double>(static_cast<long double>(inside) / static_cast<long double>(total));
}

namespace serial {

ExactResult exact_pair_stats(unsigned n, unsigned q, std::uint64_t budget) {
  pow_or_throw(q, std::uint64_t{2} * n, budget, "serial::exact_pair_stats");
  const auto all = enumerate_all(q, n, budget);
  ExactResult out;
  out.n = n;
  out.k = 2;
  out.q = q;
  out.histogram.assign(n + 1, 0);
  for (const auto& a : all)
    for (const auto& b : all) ++out.histogram[reference::lcs2_length_dp(a, b)];
  out.evaluated_tuples = all.size() * all.size();
  return out;
}

ExactResult exact_k_stats(unsigned n, unsigned k, unsigned q, std::uint64_t budget) {
  if (k < 2) throw InvalidInput("exact_k_stats: k must be >= 2");
  const std::uint64_t tuples = pow_or_throw(q, std::uint64_t{k} * n, budget, "serial::exact_k_stats");
  ExactResult out;
  out.n = n;
  out.k = k;
  out.q = q;
  out.histogram.assign(n + 1, 0);
  std::vector<Sequence> tuple(k, Sequence(q));
  for (std::uint64_t t = 0; t < tuples; ++t) {
    const Sequence joined = sequence_from_index(t, q, std::size_t{k} * n);
    for (unsigned s = 0; s < k; ++s) {
      const auto sym = joined.symbols().subspan(std::size_t{s} * n, n);
      tuple[s] = Sequence(std::vector<Symbol>(sym.begin(), sym.end()), q);
    }
    ++out.histogram[lcs_k(tuple).length];
  }
  out.evaluated_tuples = tuples;
  return out;
}

}  // namespace serial

}  // namespace lcslab
