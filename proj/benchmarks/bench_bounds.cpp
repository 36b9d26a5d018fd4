#include <benchmark/benchmark.h>

#include <random>

#include "welch/continuous.hpp"

using namespace welch;

namespace {

DualPair random_hilbert(std::mt19937_64& rng, std::size_t n, std::size_t d) {
  std::normal_distribution<double> g;
  Matrix v(n, d);
  for (Eigen::Index j = 0; j < v.rows(); ++j) {
    for (Eigen::Index i = 0; i < v.cols(); ++i) v(j, i) = Complex(g(rng), g(rng));
    v.row(j).normalize();
  }
  return hilbert_embed(v, LpSpace{d, 2.0, Field::Complex});
}

void BM_GramAndFrameOperator(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const auto pair = random_hilbert(rng, static_cast<std::size_t>(state.range(0)), 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gram(pair));
    benchmark::DoNotOptimize(frame_operator(pair));
  }
}
BENCHMARK(BM_GramAndFrameOperator)->RangeMultiplier(2)->Range(16, 256);

void BM_WelchSumCheck(benchmark::State& state) {
  std::mt19937_64 rng(12);
  const auto pair = random_hilbert(rng, 32, 8);
  const unsigned order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(discrete_welch_sum_check(pair, order));
  }
}
BENCHMARK(BM_WelchSumCheck)->DenseRange(1, 3);

void BM_FullReport(benchmark::State& state) {
  std::mt19937_64 rng(13);
  const auto pair = random_hilbert(rng, static_cast<std::size_t>(state.range(0)), 8);
  ReportOptions opts;
  opts.orders = {1, 2, 3};
  opts.p_list = {4.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_report(pair, opts));
  }
}
BENCHMARK(BM_FullReport)->RangeMultiplier(2)->Range(8, 64);

void BM_ContWelchCheck(benchmark::State& state) {
  std::mt19937_64 rng(14);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto pair = random_hilbert(rng, n, 8);
  FiniteMeasure measure;
  measure.weights.resize(static_cast<Eigen::Index>(n));
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (std::size_t i = 0; i < n; ++i) {
    measure.atoms.push_back("a");
    measure.weights(static_cast<Eigen::Index>(i)) = u(rng);
  }
  const ContinuousASF casf{measure, pair};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cont_welch_check(casf, 2));
  }
}
BENCHMARK(BM_ContWelchCheck)->RangeMultiplier(2)->Range(8, 64);

}  // namespace
