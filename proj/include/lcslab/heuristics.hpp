#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcslab/lcs.hpp"

namespace lcslab {

enum class Algorithm { kLongRun, kGreedy, kTournament, kDepositionExtension };

std::string_view algorithm_name(Algorithm a);
/// Accepts long_run, greedy, tournament, dea (or deposition_extension).
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::vector<Algorithm> all_algorithms();

struct HeuristicOutcome {
  std::string algorithm;
  Sequence result;
  std::size_t length = 0;
  /// is_common_subsequence(result, inputs)
  bool valid = false;
  double elapsed_seconds = 0.0;
};

/// sigma^m for the largest m with sigma^m common to all inputs; ties go to
/// the smallest symbol.
HeuristicOutcome long_run(std::span<const Sequence> seqs);

/// Repeatedly replaces the pair with the longest pairwise LCS (lowest index
/// pair on ties) by its canonical lcs2 witness, keeping it at the lower index.
HeuristicOutcome greedy(std::span<const Sequence> seqs);

/// Rounds of adjacent pairing (0,1), (2,3), ...; an odd leftover passes
/// through to the end of the next round.
HeuristicOutcome tournament(std::span<const Sequence> seqs);

/// max(2, ceil(q / 2)).
std::size_t default_window(unsigned q);

/// Deposition: one cursor per sequence; a symbol is deposited when it occurs
/// within the next `window` unread positions of every sequence (the one with
/// the smallest maximal cursor advance, smallest symbol on ties), and cursors
/// move past its first occurrences; otherwise all cursors skip `window`.
/// Extension: every gap between consecutive deposited matches (and before
/// the first / after the last) is filled greedily with the symbol whose next
/// occurrence inside the gap has the smallest maximal advance.
HeuristicOutcome deposition_extension(std::span<const Sequence> seqs, std::size_t window);

HeuristicOutcome run_algorithm(Algorithm a, std::span<const Sequence> seqs, std::size_t window);

struct UpperBound {
  std::size_t length = 0;
  /// Indices (into the input) of the sequences the exact LCS ran on.
  std::vector<std::size_t> selected;
  /// Sequences dropped to fit the cell budget (bound is looser).
  bool loosened = false;
};

/// Exact LCS of a symbol-rich subset: selection i is the unselected sequence
/// with the most occurrences of symbol i (symbols ranked by global frequency
/// when fewer than q selections are made), at most min(q, max_dp_seqs, k)
/// sequences. Over the cell budget, the sequence chosen for the
/// lowest-frequency symbol is dropped first, down to 2. The result is also
/// capped by the shortest input.
UpperBound upper_bound(std::span<const Sequence> seqs, std::size_t max_dp_seqs = 3,
                       std::uint64_t cell_budget = kDefaultCellBudget);

}  // namespace lcslab
