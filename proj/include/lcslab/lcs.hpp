#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcslab/sequence.hpp"

namespace lcslab {

/// Default ceiling on k-dimensional DP cells (uint32 each, 512 MiB).
inline constexpr std::uint64_t kDefaultCellBudget = std::uint64_t{1} << 27;

struct LcsResult {
  std::size_t length = 0;
  /// Present only when requested. The canonical witness: the one produced by
  /// backtracking from the bottom-right cell, taking a match whenever the
  /// current symbols agree, otherwise stepping back in the first sequence
  /// when that keeps the score, otherwise in the second.
  std::optional<Sequence> witness;
};

/// Exact LCS of two sequences.
///
/// Length-only mode runs the bit-parallel recurrence with one bit vector over
/// the shorter input, O(|a||b|/64) time and O(q min(|a|,|b|)/64) words.
/// Witness mode stores every ceil(sqrt(|a|))-th bit-vector row and recomputes
/// one block at a time while backtracking, so memory is
/// O(sqrt(|a|) |b| / 64) words.
LcsResult lcs2(const Sequence& a, const Sequence& b, bool want_witness = false);

/// Length-only shortcut for lcs2.
std::size_t lcs2_length(const Sequence& a, const Sequence& b);

/// Exact LCS length of k >= 2 sequences by the k-dimensional recurrence.
/// Throws ResourceError naming the required cell count when
/// prod(|s_i| + 1) exceeds `cell_budget`.
LcsResult lcs_k(std::span<const Sequence> seqs, std::uint64_t cell_budget = kDefaultCellBudget);

/// Number of cells lcs_k would allocate, saturating at UINT64_MAX.
std::uint64_t lcs_k_cells(std::span<const Sequence> seqs) noexcept;

/// Exact LCS length of k >= 2 sequences by level-wise expansion of
/// dominant match points: level L holds the componentwise-minimal
/// leftmost-embedding end positions over all common subsequences of length
/// L. Much faster than lcs_k for small alphabets and short inputs; no cell
/// budget applies.
std::size_t lcs_k_dominant(std::span<const Sequence> seqs);

/// True iff `cand` embeds left-to-right in every sequence.
bool is_common_subsequence(const Sequence& cand, std::span<const Sequence> seqs);

/// Incremental bit-parallel LCS against a fixed "pattern" of length <= 64.
/// Feeding symbols of a second string one at a time updates the LCS of the
/// pattern with the prefix fed so far. The state is one word, so DFS over a
/// trie of second strings costs O(1) per node.
class WordLcs {
 public:
  explicit WordLcs(std::span<const Symbol> pattern, unsigned alphabet_size);

  std::uint64_t initial_state() const noexcept { return mask_; }

  std::uint64_t step(std::uint64_t state, Symbol s) const noexcept {
    const std::uint64_t u = state & match_[s];
    return ((state + u) | (state - u)) & mask_;
  }

  /// LCS length encoded by a state: zeros among the pattern's bits.
  unsigned length(std::uint64_t state) const noexcept {
    return pattern_len_ - static_cast<unsigned>(__builtin_popcountll(state));
  }

 private:
  std::uint64_t match_[kMaxAlphabet] = {};
  std::uint64_t mask_ = 0;
  unsigned pattern_len_ = 0;
};

namespace reference {

/// Classical two-row DP, O(|a||b|) time. Test and benchmark baseline.
std::size_t lcs2_length_dp(const Sequence& a, const Sequence& b);

/// Full-table DP with the canonical backtracking rule. Quadratic memory.
Sequence lcs2_witness_table(const Sequence& a, const Sequence& b);

}  // namespace reference

}  // namespace lcslab
