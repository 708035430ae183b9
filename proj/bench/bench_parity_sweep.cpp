// Serial reference vs OpenMP sweep over the same grid.
//
//   ./bench_parity_sweep --benchmark_filter=Full
#include "tbundle/swcalc/parity_sweep.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using tbundle::sw::IntRange;

static void BM_SweepSerial(benchmark::State& state) {
  const long hi = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(tbundle::sw::sweep_cells_serial({2, 20}, {-hi, hi}, {-hi, hi}));
  state.SetItemsProcessed(state.iterations() * 19 * (2 * hi) * (2 * hi));
}

static void BM_SweepOpenMP(benchmark::State& state) {
  const long hi = state.range(0);
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(tbundle::sw::sweep_cells({2, 20}, {-hi, hi}, {-hi, hi}));
  state.SetItemsProcessed(state.iterations() * 19 * (2 * hi) * (2 * hi));
}

BENCHMARK(BM_SweepSerial)->Arg(10)->Arg(20)->Name("Full/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOpenMP)
    ->ArgsProduct({{10, 20}, {1, 2, 4, 8}})
    ->Name("Full/openmp")
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
