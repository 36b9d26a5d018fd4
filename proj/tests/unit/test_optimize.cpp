#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "checks.hpp"
#include "fixtures.hpp"
#include "welch/optimize.hpp"

using namespace welch;
using checks::approx;

TEST_CASE("frame_correlation: fixtures") {
  CHECK(frame_correlation(fixtures::dual_basis(3)) == doctest::Approx(0.0));
  CHECK(frame_correlation(fixtures::mercedes()) == doctest::Approx(0.5));
  CHECK(frame_correlation(fixtures::sic_d2()) == doctest::Approx(1.0 / std::sqrt(3.0)));
  Matrix v(1, 2);
  v << Complex(1.0), Complex(0.0);
  CHECK_THROWS_AS(frame_correlation(DualPair(LpSpace{2, 2.0, Field::Real}, v, v)),
                  TooFewVectorsError);
}

TEST_CASE("rms_cross: fixtures") {
  CHECK(rms_cross(fixtures::mercedes()) == doctest::Approx(0.5));
  CHECK(rms_cross(fixtures::dual_basis(4)) == doctest::Approx(0.0));
  CHECK(rms_cross(fixtures::e1e1e2()) == doctest::Approx(1.0 / std::sqrt(3.0)));

  // The floor from the first-order bound: rms >= sqrt((n-d)/(d(n-1))).
  CHECK(rms_cross(fixtures::mercedes()) >= std::sqrt(welch_rhs(3, 2, 1)) - 1e-12);

  std::mt19937_64 rng(61);
  CHECK_THROWS_AS(rms_cross(fixtures::random_pair(rng, 4, 2)), NotNormalizedError);
}

TEST_CASE("pseudo_frame_potential: fixtures and the trace identity") {
  CHECK(pseudo_frame_potential(fixtures::dual_basis(3)) == doctest::Approx(3.0));
  CHECK(pseudo_frame_potential(fixtures::mercedes()) == doctest::Approx(4.5));
  CHECK(pseudo_frame_potential(fixtures::e1e1e2()) == doctest::Approx(5.0));

  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pair = fixtures::random_unit_hilbert(rng, 4 + trial % 4, 2 + trial % 2);
    CHECK(pseudo_frame_potential(pair) == doctest::Approx(trace_S2(pair).real()));
  }
}

TEST_CASE("equiangularity: fixtures") {
  const auto mb = equiangularity(fixtures::mercedes(), 1e-8);
  CHECK(mb.flag);
  CHECK(mb.gamma == doctest::Approx(0.25));
  CHECK(mb.max_dev <= 1e-12);

  const auto basis = equiangularity(fixtures::dual_basis(3), 1e-8);
  CHECK(basis.flag);
  CHECK(basis.gamma == doctest::Approx(0.0));

  const auto skew = equiangularity(fixtures::e1e1e2(), 1e-8);
  CHECK_FALSE(skew.flag);
}

TEST_CASE("etf_residual: the exact tetrahedron scores below 1e-12") {
  const auto res = etf_residual(fixtures::sic_d2(), 1.0 / 3.0);
  CHECK(res.objective < 1e-12);
  CHECK(res.max_dev < 1e-12);
  CHECK(res.tightness_residual < 1e-12);
}

TEST_CASE("grassmannian_search: n = d recovers an orthonormal-like system") {
  SearchConfig cfg;
  cfg.seed = 7;
  cfg.restarts = 4;
  cfg.max_iters = 1500;
  const auto result = grassmannian_search(LpSpace{2, 2.0, Field::Complex}, 2, cfg);
  CHECK(result.objective_value <= 1e-6);
  CHECK(result.feasibility.max_dev() <= 1e-6);
}

TEST_CASE("grassmannian_search: d=2 n=3 reaches the Mercedes-Benz optimum") {
  SearchConfig cfg;
  cfg.seed = 11;
  cfg.restarts = 6;
  cfg.max_iters = 2000;
  const auto result = grassmannian_search(LpSpace{2, 2.0, Field::Complex}, 3, cfg);
  CHECK(result.objective_value == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(result.feasibility.max_dev() <= 1e-6);
  CHECK(result.converged);
}

TEST_CASE("search determinism: identical seeds give identical objectives") {
  SearchConfig cfg;
  cfg.seed = 99;
  cfg.restarts = 3;
  cfg.max_iters = 600;
  const auto a = grassmannian_search(LpSpace{2, 2.0, Field::Complex}, 3, cfg);
  const auto b = grassmannian_search(LpSpace{2, 2.0, Field::Complex}, 3, cfg);
  CHECK(a.objective_value == b.objective_value);
  CHECK(a.iters_used == b.iters_used);
  CHECK((a.pair.vectors() - b.pair.vectors()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("search determinism: worker count does not change the result") {
  SearchConfig cfg;
  cfg.seed = 123;
  cfg.restarts = 4;
  cfg.max_iters = 500;
  cfg.workers = 1;
  const auto serial = grassmannian_search(LpSpace{2, 2.0, Field::Complex}, 3, cfg);
  cfg.workers = 4;
  const auto parallel = grassmannian_search(LpSpace{2, 2.0, Field::Complex}, 3, cfg);
  CHECK(serial.objective_value == parallel.objective_value);
  CHECK((serial.pair.vectors() - parallel.pair.vectors()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("potential_minimize: d=2 n=3 real reaches the 9/2 floor") {
  SearchConfig cfg;
  cfg.seed = 3;
  cfg.restarts = 6;
  cfg.max_iters = 2000;
  const auto result = potential_minimize(LpSpace{2, 2.0, Field::Real}, 3, cfg);
  CHECK(result.objective_value == doctest::Approx(4.5).epsilon(1e-6));
  CHECK(tightness(result.pair, 1e-3).tight);
  CHECK(result.feasibility.max_dev() <= 1e-6);

  CHECK_THROWS_AS(potential_minimize(LpSpace{3, 2.0, Field::Real}, 2, cfg),
                  DegenerateCountError);
}

TEST_CASE("potential_minimize: n = d settles on the basis value") {
  SearchConfig cfg;
  cfg.seed = 5;
  cfg.restarts = 4;
  cfg.max_iters = 1200;
  const auto result = potential_minimize(LpSpace{2, 2.0, Field::Complex}, 2, cfg);
  CHECK(result.objective_value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("potential_minimize: d=2 n=4 complex reaches n^2/d = 8") {
  SearchConfig cfg;
  cfg.seed = 13;
  cfg.restarts = 6;
  cfg.max_iters = 2000;
  const auto result = potential_minimize(LpSpace{2, 2.0, Field::Complex}, 4, cfg);
  CHECK(result.objective_value == doctest::Approx(8.0).epsilon(1e-6));
  CHECK(result.welch_gap <= 1e-5);
}

TEST_CASE("etf_search: d = 2 drives the residual to zero") {
  SearchConfig cfg;
  cfg.seed = 1;
  cfg.restarts = 6;
  cfg.max_iters = 3000;
  const auto result = etf_search(2, cfg);
  CHECK(result.objective_value < 1e-6);
  CHECK(result.equiangular_max_dev < 1e-3);
  CHECK(result.feasibility.max_dev() <= 1e-6);
}

TEST_CASE("floor property: feasible Hilbert iterates respect the Welch floor") {
  const double floor = std::sqrt(welch_rhs(4, 2, 1));
  bool saw_hypothesis_pass = false;
  SearchConfig cfg;
  cfg.seed = 17;
  cfg.restarts = 2;
  cfg.max_iters = 800;
  cfg.on_iterate = [&](const IterateInfo& info) {
    if (info.feasibility_dev > 1e-9) return;  // only exactly feasible snapshots
    const auto verdict = spectral_verdict(eigen(frame_operator(info.pair)));
    if (!verdict.diagonalizable || !verdict.nonneg) return;
    saw_hypothesis_pass = true;
    CHECK(info.objective_value >= floor - 1e-9);
  };
  grassmannian_search(LpSpace{2, 2.0, Field::Complex}, 4, cfg);
  CHECK(saw_hypothesis_pass);
}

TEST_CASE("non-smooth exponents: search stays feasible and above the floor") {
  SearchConfig cfg;
  cfg.seed = 23;
  cfg.restarts = 2;
  cfg.max_iters = 400;
  const auto result = grassmannian_search(
      LpSpace{2, std::numeric_limits<double>::infinity(), Field::Real}, 3, cfg);
  CHECK(result.feasibility.max_dev() <= 1e-6);
  CHECK(result.objective_value >= 0.0);

  const auto result_l1 = grassmannian_search(LpSpace{2, 1.0, Field::Real}, 3, cfg);
  CHECK(result_l1.feasibility.max_dev() <= 1e-6);
}

TEST_CASE("SearchConfig validation") {
  SearchConfig cfg;
  cfg.step_decay = 1.5;
  CHECK_THROWS_AS(grassmannian_search(LpSpace{2, 2.0, Field::Complex}, 3, cfg),
                  ValidationError);
}
