#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "checks.hpp"
#include "fixtures.hpp"
#include "welch/symlift.hpp"

using namespace welch;
using checks::approx;

TEST_CASE("sym_dim: closed-form values") {
  CHECK(sym_dim(2, 2) == 3);  // C(3,2)
  CHECK(sym_dim(3, 2) == 6);  // C(4,2)
  CHECK(sym_dim(5, 1) == 5);
  CHECK(sym_dim(1, 7) == 1);
  CHECK(sym_dim(4, 3) == 20);  // C(6,3)
  CHECK_THROWS_AS(sym_dim(0, 1), ValidationError);
  CHECK_THROWS_AS(sym_dim(2000, 100), OverflowError);
}

TEST_CASE("sym_multi_indices: deterministic enumeration") {
  const auto idx = sym_multi_indices(2, 2);
  REQUIRE(idx.size() == 3);
  CHECK(idx[0] == std::vector<unsigned>{2, 0});
  CHECK(idx[1] == std::vector<unsigned>{1, 1});
  CHECK(idx[2] == std::vector<unsigned>{0, 2});
  for (std::size_t d = 1; d <= 4; ++d) {
    for (unsigned m = 1; m <= 4; ++m) {
      CHECK(sym_multi_indices(d, m).size() == sym_dim(d, m));
    }
  }
}

TEST_CASE("lifted_gram: fixtures") {
  const Matrix g = gram(fixtures::mercedes());
  CHECK(checks::matrix_approx(lifted_gram(g, 1), g, 0.0));
  const Matrix g2 = lifted_gram(g, 2);
  for (Eigen::Index j = 0; j < 3; ++j) {
    for (Eigen::Index k = 0; k < 3; ++k) {
      CHECK(g2(j, k).real() == doctest::Approx(j == k ? 1.0 : 0.25));
    }
  }
  CHECK(checks::matrix_approx(lifted_gram(Matrix::Identity(4, 4), 3), Matrix::Identity(4, 4),
                              0.0));
}

TEST_CASE("explicit_lift: m = 1 returns the pair unchanged") {
  const auto pair = fixtures::mercedes();
  const auto lifted = explicit_lift(pair, 1);
  CHECK(lifted.dim() == pair.dim());
  CHECK(checks::matrix_approx(lifted.vectors(), pair.vectors(), 0.0));
}

TEST_CASE("explicit_lift: d=2 multinomial expansion identity") {
  // Pairing of order-2 lifts must equal (ac + be)^2 for tau=(a,b), f=(c,e).
  std::mt19937_64 rng(31);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    Matrix v(1, 2), f(1, 2);
    v << Complex(g(rng), g(rng)), Complex(g(rng), g(rng));
    f << Complex(g(rng), g(rng)), Complex(g(rng), g(rng));
    const DualPair pair(LpSpace{2, 2.0, Field::Complex}, v, f);
    const auto lifted = explicit_lift(pair, 2);
    REQUIRE(lifted.dim() == 3);
    const Complex base = pairing(pair, 0, 0);
    const Complex expect = base * base;
    CHECK(std::abs(pairing(lifted, 0, 0) - expect) <= 1e-10 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("explicit_lift: cap") {
  std::mt19937_64 rng(32);
  const auto pair = fixtures::random_pair(rng, 2, 50);
  CHECK_THROWS_AS(explicit_lift(pair, 4), LiftTooLargeError);  // C(53,4) = 292825 > 4096
}

TEST_CASE("property: pairing power law up to m = 4") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pair = fixtures::random_pair(rng, 3, 2 + trial % 2);
    for (unsigned m = 1; m <= 4; ++m) {
      const auto lifted = explicit_lift(pair, m);
      for (std::size_t j = 0; j < pair.size(); ++j) {
        for (std::size_t k = 0; k < pair.size(); ++k) {
          const Complex base = pairing(pair, j, k);
          Complex expect{1.0, 0.0};
          for (unsigned i = 0; i < m; ++i) expect *= base;
          CHECK(std::abs(pairing(lifted, j, k) - expect) <=
                1e-10 * std::max(1.0, std::abs(expect)));
        }
      }
    }
  }
}

TEST_CASE("property: gram commutes with the lift") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const auto pair = fixtures::random_pair(rng, 2 + trial % 5, d);
    for (unsigned m = 1; m <= 3; ++m) {
      CHECK(checks::matrix_approx(gram(explicit_lift(pair, m)), lifted_gram(gram(pair), m),
                                  1e-10));
    }
  }
}

TEST_CASE("lifted_frame_spectrum: fixtures") {
  const auto basis = fixtures::dual_basis(3);
  const auto ls = lifted_frame_spectrum(basis, 1);
  CHECK(ls.zero_padding == 0);
  for (const auto& lambda : ls.spectrum.eigenvalues) {
    CHECK(approx(lambda.real(), 1.0, 1e-12));
  }

  const auto mb = lifted_frame_spectrum(fixtures::mercedes(), 1);
  REQUIRE(mb.spectrum.eigenvalues.size() == 3);
  CHECK(mb.spectrum.eigenvalues[0].real() == doctest::Approx(1.5));
  CHECK(mb.spectrum.eigenvalues[1].real() == doctest::Approx(1.5));
  CHECK(std::abs(mb.spectrum.eigenvalues[2]) <= 1e-12);
  CHECK(mb.zero_padding == 0);

  // d = 3, m = 2, n = 4: the Sym^2 space has dimension 6, so two zeros pad
  // the 4x4 Gram spectrum.
  std::mt19937_64 rng(35);
  const auto pair = fixtures::random_pair(rng, 4, 3);
  CHECK(lifted_frame_spectrum(pair, 2).zero_padding == 2);
}

TEST_CASE("property: lifted Gram and explicit lift share nonzero spectra") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const std::size_t n = 2 + trial % 6;
    const auto pair = fixtures::random_unit_hilbert(rng, n, d);
    for (unsigned m = 1; m <= 3; ++m) {
      const auto via_gram = lifted_frame_spectrum(pair, m);
      const auto via_lift = eigen(frame_operator(explicit_lift(pair, m)));
      CHECK(checks::spectra_match(via_gram.spectrum.eigenvalues, via_lift.eigenvalues, 1e-8));
    }
  }
}
