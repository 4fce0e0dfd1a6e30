#include "lcslab/heuristics.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

#include "lcslab/error.hpp"

namespace lcslab {

namespace {

using Clock = std::chrono::steady_clock;

HeuristicOutcome finish(std::string_view name, Sequence result, std::span<const Sequence> seqs,
                        Clock::time_point start) {
  HeuristicOutcome out{std::string(name), std::move(result), 0, false, 0.0};
  out.length = out.result.size();
  out.valid = is_common_subsequence(out.result, seqs);
  out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

void require_k(std::span<const Sequence> seqs, std::size_t min_k, const char* who) {
  if (seqs.size() < min_k)
    throw InvalidInput(std::string(who) + " needs at least " + std::to_string(min_k) + " sequences");
  require_same_alphabet(seqs);
}

/// First index >= p holding each symbol; |s| when absent.
class NextTable {
 public:
  NextTable(const Sequence& s, unsigned q) : q_(q), len_(s.size()), next_((s.size() + 1) * q, s.size()) {
    for (std::size_t p = s.size(); p-- > 0;) {
      std::copy_n(next_.begin() + (p + 1) * q, q, next_.begin() + p * q);
      next_[p * q + s[p]] = p;
    }
  }
  std::size_t operator()(std::size_t pos, Symbol c) const { return pos >= len_ ? len_ : next_[pos * q_ + c]; }

 private:
  unsigned q_;
  std::size_t len_;
  std::vector<std::size_t> next_;
};

/// Picks the symbol whose first occurrence at or after `cursor` lies below
/// `limit` in every sequence, minimizing the largest advance. Fills `hit`.
std::optional<Symbol> pick_symbol(const std::vector<NextTable>& next, unsigned q,
                                  const std::vector<std::size_t>& cursor, const std::vector<std::size_t>& limit,
                                  std::vector<std::size_t>& hit) {
  const std::size_t k = next.size();
  std::optional<Symbol> best;
  std::size_t best_advance = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> pos(k);
  for (unsigned c = 0; c < q; ++c) {
    std::size_t advance = 0;
    bool ok = true;
    for (std::size_t s = 0; s < k && ok; ++s) {
      pos[s] = next[s](cursor[s], static_cast<Symbol>(c));
      ok = pos[s] < limit[s];
      if (ok) advance = std::max(advance, pos[s] - cursor[s] + 1);
    }
    if (ok && advance < best_advance) {
      best_advance = advance;
      best = static_cast<Symbol>(c);
      hit = pos;
    }
  }
  return best;
}

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kLongRun: return "long_run";
    case Algorithm::kGreedy: return "greedy";
    case Algorithm::kTournament: return "tournament";
    case Algorithm::kDepositionExtension: return "dea";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "long_run" || name == "longrun") return Algorithm::kLongRun;
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "tournament") return Algorithm::kTournament;
  if (name == "dea" || name == "deposition_extension") return Algorithm::kDepositionExtension;
  return std::nullopt;
}

std::vector<Algorithm> all_algorithms() {
  return {Algorithm::kDepositionExtension, Algorithm::kLongRun, Algorithm::kGreedy, Algorithm::kTournament};
}

HeuristicOutcome long_run(std::span<const Sequence> seqs) {
  const auto start = Clock::now();
  require_k(seqs, 1, "long_run");
  const unsigned q = seqs.front().alphabet_size();
  std::vector<std::size_t> common(q, std::numeric_limits<std::size_t>::max());
  for (const auto& s : seqs) {
    std::vector<std::size_t> counts(q, 0);
    for (Symbol c : s.symbols()) ++counts[c];
    for (unsigned c = 0; c < q; ++c) common[c] = std::min(common[c], counts[c]);
  }
  // max_element returns the first maximum, i.e. the smallest symbol
  const auto best = static_cast<Symbol>(std::max_element(common.begin(), common.end()) - common.begin());
  Sequence out(std::vector<Symbol>(common[best], best), q);
  return finish(algorithm_name(Algorithm::kLongRun), std::move(out), seqs, start);
}

HeuristicOutcome greedy(std::span<const Sequence> seqs) {
  const auto start = Clock::now();
  require_k(seqs, 2, "greedy");
  std::vector<Sequence> pool(seqs.begin(), seqs.end());
  // pair scores, refreshed only for rows touching the merged sequence
  const std::size_t k = pool.size();
  std::vector<std::size_t> score(k * k, 0);
  std::vector<std::size_t> alive(k);
  std::iota(alive.begin(), alive.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) score[i * k + j] = lcs2_length(pool[i], pool[j]);

  while (alive.size() > 1) {
    std::size_t bi = 0, bj = 1;
    std::size_t best = 0;
    bool found = false;
    for (std::size_t x = 0; x < alive.size(); ++x)
      for (std::size_t y = x + 1; y < alive.size(); ++y) {
        const std::size_t sc = score[alive[x] * k + alive[y]];
        if (!found || sc > best) {
          best = sc;
          bi = x;
          bj = y;
          found = true;
        }
      }
    const std::size_t i = alive[bi], j = alive[bj];
    pool[i] = *lcs2(pool[i], pool[j], true).witness;
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(bj));
    for (std::size_t other : alive) {
      if (other == i) continue;
      const std::size_t lo = std::min(i, other), hi = std::max(i, other);
      score[lo * k + hi] = lcs2_length(pool[lo], pool[hi]);
    }
  }
  return finish(algorithm_name(Algorithm::kGreedy), std::move(pool[alive.front()]), seqs, start);
}

HeuristicOutcome tournament(std::span<const Sequence> seqs) {
  const auto start = Clock::now();
  require_k(seqs, 2, "tournament");
  std::vector<Sequence> round(seqs.begin(), seqs.end());
  while (round.size() > 1) {
    std::vector<Sequence> next;
    next.reserve((round.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < round.size(); i += 2) next.push_back(*lcs2(round[i], round[i + 1], true).witness);
    if (round.size() % 2 == 1) next.push_back(std::move(round.back()));
    round = std::move(next);
  }
  return finish(algorithm_name(Algorithm::kTournament), std::move(round.front()), seqs, start);
}

std::size_t default_window(unsigned q) { return std::max<std::size_t>(2, (q + 1) / 2); }

HeuristicOutcome deposition_extension(std::span<const Sequence> seqs, std::size_t window) {
  const auto start = Clock::now();
  require_k(seqs, 2, "deposition_extension");
  if (window < 1) throw InvalidInput("deposition_extension: window must be >= 1");
  const std::size_t k = seqs.size();
  const unsigned q = seqs.front().alphabet_size();
  std::vector<NextTable> next;
  next.reserve(k);
  for (const auto& s : seqs) next.emplace_back(s, q);

  // deposition
  std::vector<std::vector<std::size_t>> anchors;  // k positions per deposited symbol
  std::vector<Symbol> anchor_symbols;
  std::vector<std::size_t> cursor(k, 0), limit(k), hit(k);
  auto exhausted = [&] {
    for (std::size_t s = 0; s < k; ++s)
      if (cursor[s] >= seqs[s].size()) return true;
    return false;
  };
  while (!exhausted()) {
    for (std::size_t s = 0; s < k; ++s) limit[s] = std::min(seqs[s].size(), cursor[s] + window);
    if (auto sym = pick_symbol(next, q, cursor, limit, hit)) {
      anchors.push_back(hit);
      anchor_symbols.push_back(*sym);
      for (std::size_t s = 0; s < k; ++s) cursor[s] = hit[s] + 1;
    } else {
      for (std::size_t s = 0; s < k; ++s) cursor[s] += window;
    }
  }

  // extension: greedy fill of every gap around the deposited matches
  Sequence out(q);
  auto fill_gap = [&](const std::vector<std::size_t>& lo, const std::vector<std::size_t>& hi) {
    std::vector<std::size_t> cur = lo;
    while (auto sym = pick_symbol(next, q, cur, hi, hit)) {
      out.push_back(*sym);
      for (std::size_t s = 0; s < k; ++s) cur[s] = hit[s] + 1;
    }
  };
  std::vector<std::size_t> lo(k, 0), hi(k);
  for (std::size_t a = 0; a <= anchors.size(); ++a) {
    for (std::size_t s = 0; s < k; ++s) hi[s] = a < anchors.size() ? anchors[a][s] : seqs[s].size();
    fill_gap(lo, hi);
    if (a < anchors.size()) {
      out.push_back(anchor_symbols[a]);
      for (std::size_t s = 0; s < k; ++s) lo[s] = anchors[a][s] + 1;
    }
  }
  return finish(algorithm_name(Algorithm::kDepositionExtension), std::move(out), seqs, start);
}

HeuristicOutcome run_algorithm(Algorithm a, std::span<const Sequence> seqs, std::size_t window) {
  switch (a) {
    case Algorithm::kLongRun: return long_run(seqs);
    case Algorithm::kGreedy: return greedy(seqs);
    case Algorithm::kTournament: return tournament(seqs);
    case Algorithm::kDepositionExtension:
      return deposition_extension(seqs, window == 0 ? default_window(seqs.front().alphabet_size()) : window);
  }
  throw InvalidInput("unknown algorithm");
}

UpperBound upper_bound(std::span<const Sequence> seqs, std::size_t max_dp_seqs, std::uint64_t cell_budget) {
  require_k(seqs, 2, "upper_bound");
  if (max_dp_seqs < 2) throw InvalidInput("upper_bound: max_dp_seqs must be >= 2");
  const std::size_t k = seqs.size();
  const unsigned q = seqs.front().alphabet_size();
  const std::size_t want = std::min<std::size_t>({q, max_dp_seqs, k});

  std::vector<std::vector<std::size_t>> counts(k, std::vector<std::size_t>(q, 0));
  std::vector<std::size_t> global(q, 0);
  for (std::size_t s = 0; s < k; ++s)
    for (Symbol c : seqs[s].symbols()) {
      ++counts[s][c];
      ++global[c];
    }
  std::vector<unsigned> symbols(q);
  std::iota(symbols.begin(), symbols.end(), 0u);
  if (want < q)
    std::stable_sort(symbols.begin(), symbols.end(), [&](unsigned x, unsigned y) { return global[x] > global[y]; });

  struct Pick {
    std::size_t seq;
    std::size_t symbol_freq;
  };
  std::vector<Pick> picks;
  std::vector<bool> taken(k, false);
  for (unsigned c : symbols) {
    if (picks.size() == want) break;
    std::optional<std::size_t> best;
    for (std::size_t s = 0; s < k; ++s)
      if (!taken[s] && (!best || counts[s][c] > counts[*best][c])) best = s;
    taken[*best] = true;
    picks.push_back({*best, global[c]});
  }

  UpperBound out;
  std::size_t min_len = std::numeric_limits<std::size_t>::max();
  for (const auto& s : seqs) min_len = std::min(min_len, s.size());
  while (true) {
    std::vector<Sequence> subset;
    out.selected.clear();
    for (const auto& p : picks) out.selected.push_back(p.seq);
    std::sort(out.selected.begin(), out.selected.end());
    for (std::size_t idx : out.selected) subset.push_back(seqs[idx]);
    if (subset.size() == 2) {
      out.length = lcs2_length(subset[0], subset[1]);
      break;
    }
    if (lcs_k_cells(subset) <= cell_budget) {
      out.length = lcs_k(subset, cell_budget).length;
      break;
    }
    // drop the pick for the least frequent symbol (latest on ties)
    std::size_t drop = 0;
    for (std::size_t i = 1; i < picks.size(); ++i)
      if (picks[i].symbol_freq <= picks[drop].symbol_freq) drop = i;
    picks.erase(picks.begin() + static_cast<std::ptrdiff_t>(drop));
    out.loosened = true;
  }
  out.length = std::min(out.length, min_len);
  return out;
}

}  // namespace lcslab
