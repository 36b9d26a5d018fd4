#include <benchmark/benchmark.h>

#include <random>

#include "welch/symlift.hpp"

using namespace welch;

namespace {

Matrix random_square(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  Matrix m(n, n);
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index i = 0; i < m.cols(); ++i) m(j, i) = Complex(g(rng), g(rng));
  }
  return m;
}

void BM_Eigen(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Matrix m = random_square(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigen(m));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigen)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_NumericalRank(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Matrix m = random_square(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(numerical_rank(m));
  }
}
BENCHMARK(BM_NumericalRank)->RangeMultiplier(2)->Range(8, 128);

void BM_HadamardPower(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const Matrix m = random_square(rng, 64);
  const unsigned order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hadamard_power(m, order));
  }
}
BENCHMARK(BM_HadamardPower)->DenseRange(1, 4);

void BM_ExplicitLift(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  const std::size_t d = 4;
  const std::size_t n = 8;
  Matrix v(n, d), f(n, d);
  for (Eigen::Index j = 0; j < v.rows(); ++j) {
    for (Eigen::Index i = 0; i < v.cols(); ++i) {
      v(j, i) = Complex(g(rng), g(rng));
      f(j, i) = Complex(g(rng), g(rng));
    }
  }
  const DualPair pair(LpSpace{d, 2.0, Field::Complex}, v, f);
  const unsigned order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(explicit_lift(pair, order));
  }
}
BENCHMARK(BM_ExplicitLift)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
