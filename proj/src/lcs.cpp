#include "lcslab/lcs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lcslab/error.hpp"

namespace lcslab {

namespace {

using Word = std::uint64_t;
constexpr unsigned kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Match masks of `text` per symbol plus the multi-word bit-parallel row
/// update. Bit j of a row is 0 exactly where the LCS score increases between
/// prefix lengths j and j+1 of `text`.
class BitRows {
 public:
  BitRows(std::span<const Symbol> text, unsigned q)
      : bits_(text.size()), words_(words_for(text.size())), match_(q * words_, 0) {
    for (std::size_t j = 0; j < text.size(); ++j)
      match_[text[j] * words_ + j / kWordBits] |= Word{1} << (j % kWordBits);
    const unsigned tail = bits_ % kWordBits;
    last_mask_ = tail == 0 ? ~Word{0} : (Word{1} << tail) - 1;
  }

  std::size_t words() const noexcept { return words_; }

  void init(std::span<Word> row) const noexcept {
    std::fill(row.begin(), row.end(), ~Word{0});
    if (words_ > 0) row[words_ - 1] &= last_mask_;
  }

  /// row <- (row + (row & M)) | (row & ~M) in place.
  void step(std::span<Word> row, Symbol s) const noexcept {
    const Word* m = match_.data() + std::size_t{s} * words_;
    Word carry = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      const Word v = row[w];
      const Word u = v & m[w];
      const Word sum = v + u + carry;
      carry = (sum < v || (carry && sum == v)) ? 1 : 0;
      row[w] = sum | (v & ~u);
    }
    if (words_ > 0) row[words_ - 1] &= last_mask_;
  }

  /// Score against the first j symbols of text: zeros among bits [0, j).
  std::size_t prefix_score(std::span<const Word> row, std::size_t j) const noexcept {
    std::size_t ones = 0;
    const std::size_t full = j / kWordBits;
    for (std::size_t w = 0; w < full; ++w) ones += static_cast<std::size_t>(__builtin_popcountll(row[w]));
    if (const unsigned rem = j % kWordBits; rem != 0)
      ones += static_cast<std::size_t>(__builtin_popcountll(row[full] & ((Word{1} << rem) - 1)));
    return j - ones;
  }

 private:
  std::size_t bits_;
  std::size_t words_;
  std::vector<Word> match_;
  Word last_mask_ = ~Word{0};
};

void require_pair(const Sequence& a, const Sequence& b) {
  if (a.alphabet_size() != b.alphabet_size())
    throw InvalidInput("lcs2: alphabet sizes differ (" + std::to_string(a.alphabet_size()) + " vs " +
                       std::to_string(b.alphabet_size()) + ")");
}

std::size_t bitparallel_length(const Sequence& rows_seq, const Sequence& bits_seq) {
  if (rows_seq.empty() || bits_seq.empty()) return 0;
  BitRows rows(bits_seq.symbols(), bits_seq.alphabet_size());
  std::vector<Word> v(rows.words());
  rows.init(v);
  for (Symbol s : rows_seq.symbols()) rows.step(v, s);
  return rows.prefix_score(v, bits_seq.size());
}

Sequence checkpointed_witness(const Sequence& a, const Sequence& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  Sequence out(a.alphabet_size());
  if (n == 0 || m == 0) return out;

  BitRows rows(b.symbols(), b.alphabet_size());
  const std::size_t w = rows.words();
  const std::size_t stride = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(double(n)))));

  // checkpoint c holds row c * stride
  std::vector<Word> checkpoints(((n / stride) + 1) * w);
  {
    std::vector<Word> v(w);
    rows.init(v);
    std::copy(v.begin(), v.end(), checkpoints.begin());
    for (std::size_t i = 1; i <= n; ++i) {
      rows.step(v, a[i - 1]);
      if (i % stride == 0) std::copy(v.begin(), v.end(), checkpoints.begin() + (i / stride) * w);
    }
  }

  std::vector<Word> block((stride + 1) * w);
  std::size_t base = n + 1;  // nothing loaded
  auto row = [&](std::size_t i) { return std::span<const Word>(block.data() + (i - base) * w, w); };
  auto load = [&](std::size_t new_base) {
    base = new_base;
    std::copy_n(checkpoints.begin() + (base / stride) * w, w, block.begin());
    const std::size_t top = std::min(n, base + stride);
    for (std::size_t i = base + 1; i <= top; ++i) {
      std::copy_n(block.begin() + (i - 1 - base) * w, w, block.begin() + (i - base) * w);
      rows.step(std::span<Word>(block.data() + (i - base) * w, w), a[i - 1]);
    }
  };

  std::vector<Symbol> rev;
  std::size_t i = n;
  std::size_t j = m;
  load(((i - 1) / stride) * stride);
  std::size_t cur = rows.prefix_score(row(i), j);
  while (i > 0 && j > 0 && cur > 0) {
    if (i - 1 < base) load(((i - 1) / stride) * stride);
    if (a[i - 1] == b[j - 1]) {
      rev.push_back(a[i - 1]);
      --i;
      --j;
      --cur;
    } else if (rows.prefix_score(row(i - 1), j) == cur) {
      --i;
    } else {
      --j;
    }
  }
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) out.push_back(*it);
  return out;
}

}  // namespace

std::size_t lcs2_length(const Sequence& a, const Sequence& b) {
  require_pair(a, b);
  return a.size() >= b.size() ? bitparallel_length(a, b) : bitparallel_length(b, a);
}

LcsResult lcs2(const Sequence& a, const Sequence& b, bool want_witness) {
  require_pair(a, b);
  if (!want_witness) return {lcs2_length(a, b), std::nullopt};
  Sequence w = checkpointed_witness(a, b);
  const std::size_t len = w.size();
  return {len, std::move(w)};
}

std::uint64_t lcs_k_cells(std::span<const Sequence> seqs) noexcept {
  std::uint64_t cells = 1;
  for (const auto& s : seqs) {
    const std::uint64_t d = s.size() + 1;
    if (cells > UINT64_MAX / d) return UINT64_MAX;
    cells *= d;
  }
  return cells;
}

LcsResult lcs_k(std::span<const Sequence> seqs, std::uint64_t cell_budget) {
  if (seqs.size() < 2) throw InvalidInput("lcs_k needs at least 2 sequences");
  require_same_alphabet(seqs);
  const std::uint64_t cells = lcs_k_cells(seqs);
  if (cells > cell_budget)
    throw ResourceError("lcs_k needs " + std::to_string(cells) + " DP cells, budget is " +
                        std::to_string(cell_budget));

  const std::size_t k = seqs.size();
  std::vector<std::uint64_t> stride(k);
  std::uint64_t diag = 0;
  for (std::size_t s = 0; s < k; ++s) {
    stride[s] = s == 0 ? 1 : stride[s - 1] * (seqs[s - 1].size() + 1);
    diag += stride[s];
  }

  std::vector<std::uint32_t> table(cells, 0);
  std::vector<std::size_t> coord(k, 0);
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    if (idx > 0) {
      for (std::size_t s = 0; s < k; ++s) {
        if (++coord[s] <= seqs[s].size()) break;
        coord[s] = 0;
      }
    }
    bool boundary = false;
    for (std::size_t s = 0; s < k && !boundary; ++s) boundary = coord[s] == 0;
    if (boundary) continue;

    const Symbol first = seqs[0][coord[0] - 1];
    bool all_match = true;
    for (std::size_t s = 1; s < k && all_match; ++s) all_match = seqs[s][coord[s] - 1] == first;
    if (all_match) {
      table[idx] = table[idx - diag] + 1;
    } else {
      std::uint32_t best = 0;
      for (std::size_t s = 0; s < k; ++s) best = std::max(best, table[idx - stride[s]]);
      table[idx] = best;
    }
  }
  return {table[cells - 1], std::nullopt};
}

std::size_t lcs_k_dominant(std::span<const Sequence> seqs) {
  if (seqs.size() < 2) throw InvalidInput("lcs_k needs at least 2 sequences");
  require_same_alphabet(seqs);
  const std::size_t k = seqs.size();
  const unsigned q = seqs.front().alphabet_size();
  for (const auto& s : seqs)
    if (s.empty()) return 0;

  // next[s][p*q + c]: first index >= p holding c, or |s| if none
  std::vector<std::vector<std::uint32_t>> next(k);
  for (std::size_t s = 0; s < k; ++s) {
    const std::size_t len = seqs[s].size();
    auto& t = next[s];
    t.assign((len + 1) * q, static_cast<std::uint32_t>(len));
    for (std::size_t p = len; p-- > 0;) {
      std::copy_n(t.begin() + (p + 1) * q, q, t.begin() + p * q);
      t[p * q + seqs[s][p]] = static_cast<std::uint32_t>(p);
    }
  }

  std::vector<std::uint32_t> frontier(k, 0);  // flat k-tuples of next-unread positions
  std::vector<std::uint32_t> candidates;
  std::vector<std::uint32_t> kept;
  std::vector<std::size_t> order;
  std::size_t level = 0;
  while (true) {
    candidates.clear();
    const std::size_t m = frontier.size() / k;
    for (std::size_t st = 0; st < m; ++st) {
      const std::uint32_t* pos = frontier.data() + st * k;
      for (unsigned c = 0; c < q; ++c) {
        const std::size_t start = candidates.size();
        bool ok = true;
        for (std::size_t s = 0; s < k; ++s) {
          const std::uint32_t x = next[s][std::size_t{pos[s]} * q + c];
          if (x == seqs[s].size()) {
            ok = false;
            break;
          }
          candidates.push_back(x + 1);
        }
        if (!ok) candidates.resize(start);
      }
    }
    const std::size_t cm = candidates.size() / k;
    if (cm == 0) return level;
    ++level;

    order.resize(cm);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto tuple = [&](std::size_t i) { return candidates.data() + i * k; };
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return std::lexicographical_compare(tuple(x), tuple(x) + k, tuple(y), tuple(y) + k);
    });
    // Lexicographic order puts every dominating tuple before the ones it
    // dominates, so one pass against the kept set leaves the minimal elements.
    kept.clear();
    for (std::size_t i : order) {
      const std::uint32_t* cand = tuple(i);
      bool dominated = false;
      for (std::size_t e = 0; e < kept.size() / k && !dominated; ++e) {
        const std::uint32_t* other = kept.data() + e * k;
        bool le = true;
        for (std::size_t s = 0; s < k && le; ++s) le = other[s] <= cand[s];
        dominated = le;
      }
      if (!dominated) kept.insert(kept.end(), cand, cand + k);
    }
    frontier.swap(kept);
  }
}

bool is_common_subsequence(const Sequence& cand, std::span<const Sequence> seqs) {
  for (const auto& s : seqs) {
    std::size_t p = 0;
    for (std::size_t i = 0; i < s.size() && p < cand.size(); ++i)
      if (s[i] == cand[p]) ++p;
    if (p < cand.size()) return false;
  }
  return true;
}

WordLcs::WordLcs(std::span<const Symbol> pattern, unsigned alphabet_size)
    : pattern_len_(static_cast<unsigned>(pattern.size())) {
  if (pattern.size() > 64) throw InvalidInput("WordLcs pattern longer than 64");
  if (alphabet_size > kMaxAlphabet) throw InvalidInput("alphabet too large");
  for (std::size_t j = 0; j < pattern.size(); ++j) match_[pattern[j]] |= Word{1} << j;
  mask_ = pattern.size() == 64 ? ~Word{0} : (Word{1} << pattern.size()) - 1;
}

namespace reference {

std::size_t lcs2_length_dp(const Sequence& a, const Sequence& b) {
  require_pair(a, b);
  std::vector<std::uint32_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

Sequence lcs2_witness_table(const Sequence& a, const Sequence& b) {
  require_pair(a, b);
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::uint32_t> t((n + 1) * (m + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return t[i * (m + 1) + j]; };
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      at(i, j) = a[i - 1] == b[j - 1] ? at(i - 1, j - 1) + 1 : std::max(at(i - 1, j), at(i, j - 1));
  std::vector<Symbol> rev;
  std::size_t i = n, j = m;
  while (i > 0 && j > 0) {
    if (a[i - 1] == b[j - 1]) {
      rev.push_back(a[i - 1]);
      --i;
      --j;
    } else if (at(i - 1, j) == at(i, j)) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(rev.begin(), rev.end());
  return Sequence(std::move(rev), a.alphabet_size());
}

}  // namespace reference

}  // namespace lcslab
