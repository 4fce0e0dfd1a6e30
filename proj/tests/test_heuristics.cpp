#include <doctest.h>

#include <cmath>

#include "lcslab/heuristic_bench.hpp"
#include "lcslab/heuristics.hpp"
#include "lcslab/lcs.hpp"
#include "lcslab/seqgen.hpp"
#include "oracles.hpp"

using namespace lcslab;
using oracle::seq;

namespace {
std::vector<Sequence> seqs(std::initializer_list<const char*> texts) {
  std::vector<Sequence> v;
  for (auto t : texts) v.push_back(seq(t));
  return v;
}
}  // namespace

TEST_CASE("long_run examples") {
  auto r = long_run(seqs({"0011", "0101"}));
  CHECK(r.result.to_string() == "00");
  CHECK(r.length == 2);
  CHECK(long_run(seqs({"000", "000"})).result.to_string() == "000");
  r = long_run(seqs({"0", "1"}));
  CHECK(r.length == 0);
  CHECK(r.valid);
}

TEST_CASE("greedy examples") {
  std::mt19937_64 g(21);
  for (int t = 0; t < 30; ++t) {
    std::vector<Sequence> pair{oracle::random_sequence(g, 30, 2), oracle::random_sequence(g, 25, 2)};
    CHECK(greedy(pair).length == lcs2_length(pair[0], pair[1]));
    CHECK(greedy(pair).result == *lcs2(pair[0], pair[1], true).witness);
  }
  CHECK(greedy(seqs({"0101", "0101", "0101"})).result.to_string() == "0101");
  const auto s = seqs({"0110", "1101", "0111"});
  const auto r = greedy(s);
  CHECK(r.valid);
  CHECK(r.length <= oracle::lcs(s));
}

TEST_CASE("tournament examples") {
  std::mt19937_64 g(22);
  std::vector<Sequence> pair{oracle::random_sequence(g, 40, 3), oracle::random_sequence(g, 40, 3)};
  CHECK(tournament(pair).length == lcs2_length(pair[0], pair[1]));
  const auto four = seqs({"011010", "011010", "011010", "011010"});
  CHECK(tournament(four).result.to_string() == "011010");
  std::vector<Sequence> five;
  for (int i = 0; i < 5; ++i) five.push_back(oracle::random_sequence(g, 20, 2));
  const auto r = tournament(five);
  CHECK(r.valid);
  CHECK(r.length <= lcs_k_dominant(five));
}

TEST_CASE("deposition_extension examples") {
  for (std::size_t w : {1u, 2u, 5u}) CHECK(deposition_extension(seqs({"0110101", "0110101"}), w).result.to_string() == "0110101");
  CHECK(deposition_extension(seqs({"0", "1"}), 1).length == 0);
  CHECK(default_window(2) == 2);
  CHECK(default_window(5) == 3);
  CHECK(default_window(20) == 10);
  std::mt19937_64 g(23);
  for (int t = 0; t < 50; ++t) {
    std::vector<Sequence> s;
    for (int i = 0; i < 3; ++i) s.push_back(oracle::random_sequence(g, 30, 2));
    const auto r = deposition_extension(s, 4);
    CHECK(r.valid);
    CHECK(r.length <= lcs_k(s).length);
  }
}

TEST_CASE("upper_bound examples") {
  std::mt19937_64 g(24);
  std::vector<Sequence> pair{oracle::random_sequence(g, 30, 2), oracle::random_sequence(g, 30, 2)};
  CHECK(upper_bound(pair).length == lcs2_length(pair[0], pair[1]));
  CHECK(upper_bound(seqs({"0110", "0110", "0110"})).length == 4);
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = 2 + t % 3;
    std::vector<Sequence> s;
    for (std::size_t i = 0; i < k; ++i) s.push_back(oracle::random_sequence(g, 1 + g() % 8, 2 + t % 2));
    CHECK(upper_bound(s, 2 + t % 3).length >= oracle::lcs(s));
  }
  // selection: sequence richest in the most frequent symbol first
  const auto ub = upper_bound(seqs({"0000011", "0101010", "1111100"}), 2);
  CHECK(ub.selected == std::vector<std::size_t>{0, 2});
  // over budget: falls back to two sequences and flags it
  std::vector<Sequence> many;
  for (int i = 0; i < 4; ++i) many.push_back(oracle::random_sequence(g, 40, 4));
  const auto loose = upper_bound(many, 4, 41 * 41 * 41 - 1);
  CHECK(loose.loosened);
  CHECK(loose.selected.size() == 2);
}

TEST_CASE("heuristic properties on random instances") {
  std::mt19937_64 g(25);
  for (int t = 0; t < 300; ++t) {
    const unsigned q = std::vector<unsigned>{2, 4, 20}[t % 3];
    const std::size_t k = 2 + t % 5;
    std::vector<Sequence> s;
    for (std::size_t i = 0; i < k; ++i) s.push_back(oracle::random_sequence(g, 1 + g() % 25, q));
    const auto exact = lcs_k_dominant(s);
    const auto ub = upper_bound(s).length;
    CHECK(ub >= exact);
    std::size_t max_run = 0;
    for (unsigned c = 0; c < q; ++c) {
      std::size_t m = SIZE_MAX;
      for (const auto& x : s) m = std::min<std::size_t>(m, std::count(x.symbols().begin(), x.symbols().end(), c));
      max_run = std::max(max_run, m);
    }
    for (auto a : all_algorithms()) {
      const auto r = run_algorithm(a, s, 0);
      CHECK(r.valid);
      CHECK(is_common_subsequence(r.result, s));
      CHECK(r.length == r.result.size());
      CHECK(r.length <= exact);
      CHECK(run_algorithm(a, s, 0).result == r.result);
    }
    CHECK(long_run(s).length == max_run);
  }
}

TEST_CASE("performance ratios") {
  CHECK(performance_ratio(10, 5) == 2.0);
  CHECK(std::isinf(performance_ratio(3, 0)));
  CHECK(performance_ratio(0, 0) == 1.0);
  CHECK(parse_algorithm("dea") == Algorithm::kDepositionExtension);
  CHECK(parse_algorithm("greedy") == Algorithm::kGreedy);
  CHECK_FALSE(parse_algorithm("nope"));
}

TEST_CASE("benchmark harness") {
  SequenceDataset same;
  same.spec.count = 6;
  same.spec.seq_length = 8;
  for (int i = 0; i < 6; ++i) same.sequences.push_back(seq("01101001"));
  BenchmarkOptions o;
  o.group_size = 3;
  const auto r = benchmark(same, o);
  REQUIRE(r.reports.size() == 2);
  // long_run can only return one repeated symbol, so it gets 8/4 here
  for (const auto& rep : r.reports)
    for (std::size_t i = 0; i < rep.outcomes.size(); ++i)
      CHECK(rep.ratios[i] == (rep.outcomes[i].algorithm == "long_run" ? 2.0 : 1.0));
  CHECK(r.reports[1].dataset_id == "dataset#1");
  for (auto& s : same.sequences) s = seq("11111111");
  for (const auto& rep : benchmark(same, o).reports)
    for (double x : rep.ratios) CHECK(x == 1.0);

  DatasetSpec spec;
  spec.seq_length = 60;
  spec.count = 20;
  spec.master_seed = 4;
  const auto pairs = benchmark(generate(spec), BenchmarkOptions{});
  CHECK(pairs.used_reference == ReferenceKind::kExact);
  for (const auto& rep : pairs.reports)
    for (double x : rep.ratios) CHECK(x >= 1.0);
  BenchmarkOptions par;
  par.workers = 3;
  const auto again = benchmark(generate(spec), par);
  for (std::size_t i = 0; i < again.reports.size(); ++i) CHECK(again.reports[i].ratios == pairs.reports[i].ratios);

  // k = 5, n = 100 is beyond the default cell budget: switches with a warning
  spec.seq_length = 100;
  spec.count = 50;
  BenchmarkOptions five;
  five.group_size = 5;
  const auto big = benchmark(generate(spec), five);
  CHECK(big.used_reference == ReferenceKind::kUpperBound);
  CHECK_FALSE(big.warning.empty());
  CHECK(big.reports.size() == 10);
  for (const auto& rep : big.reports)
    for (const auto& out : rep.outcomes) CHECK(out.valid);
  CHECK(big.summary.size() == 4);

  BenchmarkOptions odd;
  odd.group_size = 3;
  CHECK_THROWS(benchmark(generate(spec), odd));
}
