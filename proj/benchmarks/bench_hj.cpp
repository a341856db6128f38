#include <benchmark/benchmark.h>

#include <horikawa/hj_calculus.hpp>
#include <horikawa/picard_lattice.hpp>

#include <numeric>

using namespace horikawa;

namespace {

void BM_RoundTrip(benchmark::State& state) {
  const long n_max = state.range(0);
  long pairs = 0;
  for (auto _ : state) {
    pairs = 0;
    for (long n = 2; n <= n_max; ++n)
      for (long q = 1; q < n; ++q) {
        if (std::gcd(n, q) != 1) continue;
        benchmark::DoNotOptimize(hj_eval(hj_expand(CyclicQuotientSingularity::make(n, q))));
        ++pairs;
      }
  }
  state.counters["pairs"] = static_cast<double>(pairs);
  state.SetItemsProcessed(state.iterations() * pairs);
}
BENCHMARK(BM_RoundTrip)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ClassifyChain(benchmark::State& state) {
  const Chain c = grow_chain(grow_chain(Chain{3, 2, 2, 2, 3}, Side::Left), Side::Right);
  for (auto _ : state) benchmark::DoNotOptimize(classify_chain(c));
}
BENCHMARK(BM_ClassifyChain);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_t_chains(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_Discrepancies(benchmark::State& state) {
  std::vector<Integer> e(static_cast<std::size_t>(state.range(0)), 2);
  e.front() = 3;
  e.back() = 3;
  const Chain c(e);
  for (auto _ : state) benchmark::DoNotOptimize(discrepancies(c));
}
BENCHMARK(BM_Discrepancies)->Arg(4)->Arg(16)->Arg(30);

}  // namespace
