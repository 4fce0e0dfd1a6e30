#include "lcslab/heuristic_bench.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <span>

#include "lcslab/error.hpp"
#include "lcslab/parallel.hpp"

namespace lcslab {

std::string_view reference_name(ReferenceKind r) {
  return r == ReferenceKind::kExact ? "exact" : "upper_bound";
}

double performance_ratio(std::size_t reference_length, std::size_t heuristic_length) {
  if (heuristic_length == 0)
    return reference_length == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return static_cast<double>(reference_length) / static_cast<double>(heuristic_length);
}

std::vector<AlgorithmSummary> summarize_reports(const std::vector<HeuristicReport>& reports) {
  std::vector<AlgorithmSummary> out;
  if (reports.empty()) return out;
  for (std::size_t a = 0; a < reports.front().outcomes.size(); ++a) {
    AlgorithmSummary s;
    s.algorithm = reports.front().outcomes[a].algorithm;
    std::vector<double> finite;
    double length_sum = 0.0;
    for (const auto& r : reports) {
      const auto& o = r.outcomes[a];
      ++s.groups;
      s.valid_count += o.valid ? 1 : 0;
      length_sum += static_cast<double>(o.length);
      s.total_seconds += o.elapsed_seconds;
      if (std::isinf(r.ratios[a]))
        ++s.infinite_count;
      else
        finite.push_back(r.ratios[a]);
    }
    s.mean_length = length_sum / static_cast<double>(s.groups);
    if (!finite.empty()) {
      double sum = 0.0;
      for (double x : finite) sum += x;
      s.mean_ratio = sum / static_cast<double>(finite.size());
      if (finite.size() > 1) {
        double ss = 0.0;
        for (double x : finite) ss += (x - s.mean_ratio) * (x - s.mean_ratio);
        s.ratio_variance = ss / static_cast<double>(finite.size() - 1);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

BenchmarkResult benchmark(const SequenceDataset& dataset, const BenchmarkOptions& options) {
  const unsigned k = options.group_size;
  if (k < 2) throw InvalidInput("benchmark: group size must be >= 2");
  if (dataset.sequences.size() % k != 0 || dataset.sequences.empty())
    throw InvalidInput("benchmark: dataset of " + std::to_string(dataset.sequences.size()) +
                       " sequences does not split into groups of " + std::to_string(k));
  if (options.algorithms.empty()) throw InvalidInput("benchmark: no algorithms selected");

  const std::size_t groups = dataset.sequences.size() / k;
  auto group = [&](std::size_t g) { return std::span<const Sequence>(dataset.sequences).subspan(g * k, k); };

  BenchmarkResult result;
  result.requested_reference = options.reference;
  result.used_reference = options.reference;
  if (options.reference == ReferenceKind::kExact && k > 2) {
    for (std::size_t g = 0; g < groups; ++g) {
      const std::uint64_t cells = lcs_k_cells(group(g));
      if (cells > options.cell_budget) {
        result.used_reference = ReferenceKind::kUpperBound;
        result.warning = "exact reference needs " + std::to_string(cells) + " DP cells for group " +
                         std::to_string(g) + " (budget " + std::to_string(options.cell_budget) +
                         "); using upper_bound instead";
        break;
      }
    }
  }

  result.reports.resize(groups);
  const auto count = static_cast<std::int64_t>(groups);
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_workers(options.workers))
  for (std::int64_t g = 0; g < count; ++g) {
    const auto seqs = group(static_cast<std::size_t>(g));
    HeuristicReport& r = result.reports[g];
    r.dataset_id = options.dataset_id + "#" + std::to_string(g);
    r.k = k;
    r.n = dataset.spec.seq_length;
    r.q = dataset.spec.alphabet.size();
    r.reference_kind = result.used_reference;
    if (result.used_reference == ReferenceKind::kExact) {
      r.reference_length = k == 2 ? lcs2_length(seqs[0], seqs[1]) : lcs_k(seqs, options.cell_budget).length;
    } else {
      const UpperBound ub = upper_bound(seqs, options.max_dp_seqs, options.cell_budget);
      r.reference_length = ub.length;
      r.reference_loosened = ub.loosened;
    }
    for (Algorithm a : options.algorithms) {
      r.outcomes.push_back(run_algorithm(a, seqs, options.window));
      r.ratios.push_back(performance_ratio(r.reference_length, r.outcomes.back().length));
    }
  }
  result.summary = summarize_reports(result.reports);
  return result;
}

}  // namespace lcslab
