#include <benchmark/benchmark.h>

#include "hpcc/batch.hpp"
#include "hpcc/dp_solver.hpp"
#include "hpcc/oracle.hpp"

namespace {

void BM_Solve(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto g = hpcc::generate({n, 0.5, 0.5, 42});
  for (auto _ : state) benchmark::DoNotOptimize(hpcc::solve(g));
  state.SetComplexityN(n);
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Solve)->RangeMultiplier(10)->Range(1000, 1'000'000)->Complexity(benchmark::oN)
    ->Unit(benchmark::kMillisecond);

void BM_Reference(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto g = hpcc::generate({n, 0.5, 0.5, 42});
  for (auto _ : state) benchmark::DoNotOptimize(hpcc::reference_optimal(g));
}
BENCHMARK(BM_Reference)->RangeMultiplier(4)->Range(256, 4096)->Unit(benchmark::kMillisecond);

void BM_CompareBatch(benchmark::State& state) {
  const auto exec = state.range(0) ? hpcc::Execution::Parallel : hpcc::Execution::Serial;
  const auto cases = hpcc::compare_corpus(2000, 4, 9, 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hpcc::compare_batch(cases, exec));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
  state.SetItemsProcessed(state.iterations() * cases.size());
}
BENCHMARK(BM_CompareBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
