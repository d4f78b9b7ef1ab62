#include <benchmark/benchmark.h>

#include "sensornoise/calibration.hpp"
#include "sensornoise/distributions.hpp"

using namespace sensornoise;

// Full 201-point grid search.
static void BM_PpccFit(benchmark::State& state) {
  const auto x = sample_tukey_lambda(static_cast<std::size_t>(state.range(0)), -0.1, 3.0, RngStream(3, 0));
  for (auto _ : state) benchmark::DoNotOptimize(ppcc_fit(x).lambda);
}
BENCHMARK(BM_PpccFit)->Arg(10000)->Arg(100000)->Arg(200000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
