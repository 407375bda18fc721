// Serial vs OpenMP-parallel law sweeps.
#include <benchmark/benchmark.h>

#include "iterlab/lawlab.hpp"

using namespace iterlab;

namespace {

void sweep(benchmark::State& state, const char* id, Exec exec) {
  const Law& law = find_law(id);
  SizeBounds b;
  b.max_size = 6;
  const auto cases = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const LawReport rep = run_law(law, 1, cases, b, Hooks::canonical(), exec);
    benchmark::DoNotOptimize(rep.passed);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_WandOracle_Serial(benchmark::State& s) { sweep(s, "wand.oracle", Exec::serial); }
void BM_WandOracle_Parallel(benchmark::State& s) { sweep(s, "wand.oracle", Exec::parallel); }
void BM_Sliding_Serial(benchmark::State& s) { sweep(s, "Trace.Sliding", Exec::serial); }
void BM_Sliding_Parallel(benchmark::State& s) { sweep(s, "Trace.Sliding", Exec::parallel); }
void BM_Dinaturality_Serial(benchmark::State& s) { sweep(s, "wand.3", Exec::serial); }
void BM_Dinaturality_Parallel(benchmark::State& s) { sweep(s, "wand.3", Exec::parallel); }

}  // namespace

BENCHMARK(BM_WandOracle_Serial)->Arg(1000)->Arg(10000)->UseRealTime();
BENCHMARK(BM_WandOracle_Parallel)->Arg(1000)->Arg(10000)->UseRealTime();
BENCHMARK(BM_Sliding_Serial)->Arg(300)->Arg(3000)->UseRealTime();
BENCHMARK(BM_Sliding_Parallel)->Arg(300)->Arg(3000)->UseRealTime();
BENCHMARK(BM_Dinaturality_Serial)->Arg(1000)->Arg(10000)->UseRealTime();
BENCHMARK(BM_Dinaturality_Parallel)->Arg(1000)->Arg(10000)->UseRealTime();

BENCHMARK_MAIN();
