#include <benchmark/benchmark.h>

#include "sensornoise/distributions.hpp"
#include "sensornoise/rng.hpp"

using namespace sensornoise;

static void BM_TukeyLambda(benchmark::State& state) {
  RngStream rng(1, 0);
  const double lambda = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(draw_tukey_lambda(lambda, 4.0, rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TukeyLambda)->Arg(-30)->Arg(0)->Arg(14);

static void BM_Gaussian(benchmark::State& state) {
  RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(draw_gaussian(1.0, rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Gaussian);

// mean 3 takes the multiplication path, the rest PTRS
static void BM_Poisson(benchmark::State& state) {
  RngStream rng(1, 0);
  const double mean = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(draw_poisson(mean, rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Poisson)->Arg(3)->Arg(30)->Arg(3000);

BENCHMARK_MAIN();
