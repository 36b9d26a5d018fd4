#include <benchmark/benchmark.h>

#include "welch/optimize.hpp"

using namespace welch;

namespace {

void BM_GrassmannianRestart(benchmark::State& state) {
  SearchConfig cfg;
  cfg.seed = 21;
  cfg.restarts = 1;
  cfg.max_iters = static_cast<std::size_t>(state.range(0));
  const LpSpace space{2, 2.0, Field::Complex};
  for (auto _ : state) {
    benchmark::DoNotOptimize(grassmannian_search(space, 4, cfg));
  }
}
BENCHMARK(BM_GrassmannianRestart)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_EtfRestart(benchmark::State& state) {
  SearchConfig cfg;
  cfg.seed = 22;
  cfg.restarts = 1;
  cfg.max_iters = 1000;
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(etf_search(dim, cfg));
  }
}
BENCHMARK(BM_EtfRestart)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EtfResidual(benchmark::State& state) {
  SearchConfig cfg;
  cfg.seed = 23;
  cfg.restarts = 1;
  cfg.max_iters = 200;
  const auto result = etf_search(2, cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(etf_residual(result.pair, 1.0 / 3.0));
  }
}
BENCHMARK(BM_EtfResidual);

}  // namespace
