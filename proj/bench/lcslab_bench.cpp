#include <benchmark/benchmark.h>

#include "lcslab/exact_enum.hpp"
#include "lcslab/lcs.hpp"
#include "lcslab/mc_estimator.hpp"
#include "lcslab/rng.hpp"
#include "lcslab/seqgen.hpp"

using namespace lcslab;

namespace {

std::pair<Sequence, Sequence> random_pair(std::size_t n) {
  const Alphabet a = Alphabet::uniform(2);
  return {draw_sequence(a, n, derive_key(7, {0})), draw_sequence(a, n, derive_key(7, {1}))};
}

void BM_Lcs2BitParallel(benchmark::State& st) {
  const auto [a, b] = random_pair(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(lcs2_length(a, b));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_Lcs2BitParallel)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_Lcs2Dp(benchmark::State& st) {
  const auto [a, b] = random_pair(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(reference::lcs2_length_dp(a, b));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_Lcs2Dp)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_Lcs2Witness(benchmark::State& st) {
  const auto [a, b] = random_pair(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(lcs2(a, b, true));
}
BENCHMARK(BM_Lcs2Witness)->Arg(1000)->Arg(4000);

ExperimentConfig mc_config() {
  ExperimentConfig c;
  c.n = 200;
  c.trials = 2048;
  c.master_seed = 3;
  return c;
}

void BM_ExperimentSerial(benchmark::State& st) {
  const auto c = mc_config();
  for (auto _ : st) benchmark::DoNotOptimize(serial::run_experiment(c));
}
BENCHMARK(BM_ExperimentSerial)->Unit(benchmark::kMillisecond);

void BM_ExperimentParallel(benchmark::State& st) {
  const auto c = mc_config();
  for (auto _ : st) benchmark::DoNotOptimize(run_experiment(c, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_ExperimentParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ExactSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::exact_pair_stats(static_cast<unsigned>(st.range(0)), 2));
}
BENCHMARK(BM_ExactSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ExactParallel(benchmark::State& st) {
  ExactOptions o;
  for (auto _ : st) benchmark::DoNotOptimize(exact_pair_stats(static_cast<unsigned>(st.range(0)), 2, o));
}
BENCHMARK(BM_ExactParallel)->Arg(6)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_GenerateSerial(benchmark::State& st) {
  DatasetSpec s{Alphabet::uniform(4), 1000, 2000, 9};
  for (auto _ : st) benchmark::DoNotOptimize(serial::generate(s));
}
BENCHMARK(BM_GenerateSerial)->Unit(benchmark::kMillisecond);

void BM_GenerateParallel(benchmark::State& st) {
  DatasetSpec s{Alphabet::uniform(4), 1000, 2000, 9};
  for (auto _ : st) benchmark::DoNotOptimize(generate(s, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_GenerateParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
