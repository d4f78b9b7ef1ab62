#include <benchmark/benchmark.h>

#include "sensornoise/synthesis.hpp"

using namespace sensornoise;

static void BM_SynthesizeNoise(benchmark::State& state) {
  const std::size_t side = static_cast<std::size_t>(state.range(0));
  const unsigned threads = static_cast<unsigned>(state.range(1));
  SensorInfo info;
  info.black_level = 512;
  info.white_level = 16383;
  const RawFrame clean(side, side, info, 400.0);
  NoiseParams p;
  p.k = 2.0;
  p.lambda = -0.1;
  p.sigma_tl = 4.0;
  p.sigma_r = 1.5;
  std::uint64_t i = 0;
  for (auto _ : state) {
    RawFrame out = synthesize_noise(clean, p, RngStream(7, i++), {}, threads);
    benchmark::DoNotOptimize(out.samples().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(side * side));
}
BENCHMARK(BM_SynthesizeNoise)->Args({1024, 1})->Args({2048, 1})->Args({2048, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
