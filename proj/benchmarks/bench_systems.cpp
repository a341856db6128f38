#include <benchmark/benchmark.h>

#include <horikawa/horikawa.hpp>

using namespace horikawa;

namespace {

void BM_Table2Sweep(benchmark::State& state) {
  const long n_max = state.range(0);
  for (auto _ : state)
    for (long n = 14; n <= n_max; ++n)
      for (long d : admissible_ds(Kind::First, n))
        benchmark::DoNotOptimize(analyze_system(BlowupConfig::make(d, 0, 0), n));
}
BENCHMARK(BM_Table2Sweep)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Table1Sweep(benchmark::State& state) {
  const long n_max = state.range(0);
  for (auto _ : state)
    for (long n = 14; n <= n_max; ++n)
      for (long d : admissible_ds(Kind::First, n)) benchmark::DoNotOptimize(d_strata(n, d));
}
BENCHMARK(BM_Table1Sweep)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_H1Assembly(benchmark::State& state) {
  const long n = state.range(0);
  const long d = n / 2 + 1 - (n % 2 == 0 ? 0 : 1);
  for (auto _ : state) benchmark::DoNotOptimize(h1_assembly(n, d, Which::DPrime));
}
BENCHMARK(BM_H1Assembly)->Arg(40)->Arg(200);

void BM_SymbolicRow(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(analyze_system(BlowupConfig::make(9, 1, 1), Regime::Middle));
}
BENCHMARK(BM_SymbolicRow);

}  // namespace
