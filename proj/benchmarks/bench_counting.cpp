#include <benchmark/benchmark.h>

#include "rainbowap/counting.hpp"
#include "rainbowap/pattern.hpp"
#include "rainbowap/progression.hpp"
#include "rainbowap/templates.hpp"

using namespace rainbowap;

namespace {

void BM_ApCountClosedForm(benchmark::State& state) {
  const long long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(ap_count_closed_form(n, 4));
}
BENCHMARK(BM_ApCountClosedForm)->Arg(300)->Arg(100000);

void BM_ApCountInterval(benchmark::State& state) {
  const auto s = GroundSet::interval(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ap_count(s, 4));
}
BENCHMARK(BM_ApCountInterval)->Arg(300)->Arg(3000);

void BM_EnumerateAps(benchmark::State& state) {
  const auto s = GroundSet::interval(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_k_aps(s, 3));
}
BENCHMARK(BM_EnumerateAps)->Arg(100)->Arg(300);

void BM_CountPruned(benchmark::State& state) {
  const auto s = GroundSet::interval(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_pruned(s, 3, 3).count);
}
BENCHMARK(BM_CountPruned)->Arg(10)->Arg(14)->Arg(18);

void BM_CountSymmetry(benchmark::State& state) {
  const auto s = GroundSet::interval(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_symmetry(s, 3, 3).count);
}
BENCHMARK(BM_CountSymmetry)->Arg(10)->Arg(14)->Arg(18);

void BM_CountBruteforce(benchmark::State& state) {
  const auto s = GroundSet::interval(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_bruteforce(s, 3, 3).count);
}
BENCHMARK(BM_CountBruteforce)->Arg(8)->Arg(10);

void BM_CountPrunedParallel(benchmark::State& state) {
  const auto s = GroundSet::interval(16);
  ExecOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_pruned(s, 4, 3, opts).count);
}
BENCHMARK(BM_CountPrunedParallel)->Arg(1)->Arg(2)->Arg(4);

void BM_RainbowSubtemplates(benchmark::State& state) {
  const auto full = Template::full(state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(count_rainbow_subtemplates(full, 4));
}
BENCHMARK(BM_RainbowSubtemplates)->Arg(20)->Arg(40);

void BM_SidonSolutions(benchmark::State& state) {
  const auto s = GroundSet::interval(state.range(0));
  const auto m = LinearPattern::sidon();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pattern_solutions(m, s));
}
BENCHMARK(BM_SidonSolutions)->Arg(12)->Arg(20);

void BM_SurjectionCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(surjection_count(8, state.range(0)));
}
BENCHMARK(BM_SurjectionCount)->Arg(64)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
