#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "checks.hpp"
#include "fixtures.hpp"
#include "welch/asf.hpp"

using namespace welch;
using checks::approx;

TEST_CASE("LpSpace: dual exponents") {
  CHECK(LpSpace{2, 2.0, Field::Real}.dual_exponent() == doctest::Approx(2.0));
  CHECK(LpSpace{2, 3.0, Field::Real}.dual_exponent() == doctest::Approx(1.5));
  CHECK(std::isinf(LpSpace{2, 1.0, Field::Real}.dual_exponent()));
  CHECK(LpSpace{2, std::numeric_limits<double>::infinity(), Field::Real}.dual_exponent() ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS((LpSpace{2, 0.5, Field::Real}.validate()), ValidationError);
  CHECK_THROWS_AS((LpSpace{0, 2.0, Field::Real}.validate()), ValidationError);
}

TEST_CASE("lp_norm: exact formulas at p = 1, 2, inf") {
  Eigen::RowVectorXcd row(3);
  row << Complex(3.0, 4.0), Complex(-1.0), Complex(0.0);
  CHECK(lp_norm(row, 1.0) == doctest::Approx(6.0));
  CHECK(lp_norm(row, 2.0) == doctest::Approx(std::sqrt(26.0)));
  CHECK(lp_norm(row, std::numeric_limits<double>::infinity()) == doctest::Approx(5.0));
}

TEST_CASE("DualPair: validation") {
  Matrix v = Matrix::Identity(2, 2);
  Matrix f = Matrix::Identity(3, 2);
  CHECK_THROWS_AS(DualPair(LpSpace{2, 2.0, Field::Real}, v, f), DimensionMismatchError);

  Matrix bad = v;
  bad(0, 0) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(DualPair(LpSpace{2, 2.0, Field::Real}, bad, v), ValidationError);

  Matrix cplx = v;
  cplx(0, 1) = Complex(0.0, 0.5);
  CHECK_THROWS_AS(DualPair(LpSpace{2, 2.0, Field::Real}, cplx, v), ValidationError);
}

TEST_CASE("pairing: dual basis and Hilbert embedding") {
  const auto basis = fixtures::dual_basis(3);
  CHECK(pairing(basis, 0, 0).real() == doctest::Approx(1.0));
  CHECK(std::abs(pairing(basis, 0, 2)) == doctest::Approx(0.0));
  CHECK_THROWS_AS(pairing(basis, 0, 3), IndexOutOfRangeError);

  // f = conj(tau) with tau = (1,0); evaluating on (1/sqrt2, 1/sqrt2).
  Matrix v(2, 2);
  v << Complex(1.0), Complex(0.0), Complex(1.0 / std::sqrt(2.0)), Complex(1.0 / std::sqrt(2.0));
  const auto pair = hilbert_embed(v, LpSpace{2, 2.0, Field::Real});
  CHECK(pairing(pair, 0, 1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("gram: fixtures") {
  CHECK(checks::matrix_approx(gram(fixtures::dual_basis(4)), Matrix::Identity(4, 4), 0.0));

  const Matrix g = gram(fixtures::mercedes());
  for (Eigen::Index j = 0; j < 3; ++j) {
    for (Eigen::Index k = 0; k < 3; ++k) {
      CHECK(g(j, k).real() == doctest::Approx(j == k ? 1.0 : -0.5));
    }
  }

  Matrix v(1, 2), f(1, 2);
  v << Complex(2.0), Complex(0.0);
  f << Complex(0.5), Complex(0.0);
  const DualPair single(LpSpace{2, 2.0, Field::Real}, v, f);
  CHECK(gram(single)(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("frame_operator: fixtures") {
  CHECK(checks::matrix_approx(frame_operator(fixtures::dual_basis(3)), Matrix::Identity(3, 3),
                              0.0));
  CHECK(checks::matrix_approx(frame_operator(fixtures::mercedes()),
                              1.5 * Matrix::Identity(2, 2), 1e-15));

  Matrix v(1, 2), f(1, 2);
  v << Complex(1.0), Complex(0.0);
  f << Complex(1.0), Complex(0.0);
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  CHECK(checks::matrix_approx(frame_operator(DualPair(LpSpace{2, 2.0, Field::Real}, v, f)),
                              expected, 0.0));
}

TEST_CASE("analysis and synthesis") {
  const auto basis = fixtures::dual_basis(3);
  CVector e1 = CVector::Zero(3);
  e1(0) = 1.0;
  const CVector coeffs = analysis(basis, e1);
  CHECK(coeffs(0).real() == doctest::Approx(1.0));
  CHECK(std::abs(coeffs(1)) == doctest::Approx(0.0));

  CHECK(analysis(basis, CVector::Zero(3)).norm() == doctest::Approx(0.0));
  CHECK_THROWS_AS(analysis(basis, CVector::Zero(2)), DimensionMismatchError);
  CHECK_THROWS_AS(synthesis(basis, CVector::Zero(2)), DimensionMismatchError);

  const auto mb = fixtures::mercedes();
  CVector x(2);
  x << Complex(1.0), Complex(0.0);
  const CVector out = analysis(mb, x);
  CHECK(out(0).real() == doctest::Approx(1.0));
  CHECK(out(1).real() == doctest::Approx(-0.5));
  CHECK(out(2).real() == doctest::Approx(-0.5));
}

TEST_CASE("property: operator factorizations as matrices") {
  // Build the analysis and synthesis matrices column by column through the
  // operator actions, then compare the products against frame_operator and
  // gram. This checks S = theta_tau theta_f and G = theta_f theta_tau
  // independently of how those functions are implemented.
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const std::size_t d = 1 + trial % 4;
    const auto pair = fixtures::random_pair(rng, n, d);

    Matrix theta_f(n, d);
    for (std::size_t i = 0; i < d; ++i) {
      CVector e = CVector::Zero(d);
      e(static_cast<Eigen::Index>(i)) = 1.0;
      theta_f.col(static_cast<Eigen::Index>(i)) = analysis(pair, e);
    }
    Matrix theta_tau(d, n);
    for (std::size_t j = 0; j < n; ++j) {
      CVector e = CVector::Zero(n);
      e(static_cast<Eigen::Index>(j)) = 1.0;
      theta_tau.col(static_cast<Eigen::Index>(j)) = synthesis(pair, e);
    }

    const Matrix s = frame_operator(pair);
    const Matrix g = gram(pair);
    const double s_scale = std::max(1.0, s.cwiseAbs().maxCoeff());
    const double g_scale = std::max(1.0, g.cwiseAbs().maxCoeff());
    CHECK((Matrix(theta_tau * theta_f) - s).cwiseAbs().maxCoeff() <= 1e-12 * s_scale);
    CHECK((Matrix(theta_f * theta_tau) - g).cwiseAbs().maxCoeff() <= 1e-12 * g_scale);
  }
}

TEST_CASE("property: synthesis(analysis(x)) equals frame_operator * x") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pair = fixtures::random_pair(rng, 3 + trial % 6, 2 + trial % 3);
    const Matrix s = frame_operator(pair);
    CVector x(pair.dim());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      x(i) = Complex(std::normal_distribution<double>()(rng),
                     std::normal_distribution<double>()(rng));
    }
    const CVector lhs = synthesis(pair, analysis(pair, x));
    CHECK((lhs - s * x).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, s.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("trace identities on fixtures") {
  CHECK(trace_S(fixtures::dual_basis(4)).real() == doctest::Approx(4.0));
  CHECK(trace_S(fixtures::mercedes()).real() == doctest::Approx(3.0));
  CHECK(trace_S2(fixtures::dual_basis(4)).real() == doctest::Approx(4.0));
  CHECK(trace_S2(fixtures::mercedes()).real() == doctest::Approx(4.5));

  Matrix v(1, 2), f(1, 2);
  v << Complex(2.0), Complex(0.0);
  f << Complex(0.5), Complex(0.0);
  CHECK(trace_S2(DualPair(LpSpace{2, 2.0, Field::Real}, v, f)).real() == doctest::Approx(1.0));
}

TEST_CASE("property: trace identities match matrix traces") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 64);
    const std::size_t d = 1 + static_cast<std::size_t>(rng() % 16);
    const auto pair = fixtures::random_pair(rng, n, d);
    const Matrix s = frame_operator(pair);
    const Complex t1 = trace(s);
    const Complex t2 = trace(Matrix(s * s));
    CHECK(std::abs(trace_S(pair) - t1) <= 1e-10 * std::max(1.0, std::abs(t1)));
    CHECK(std::abs(trace_S2(pair) - t2) <= 1e-10 * std::max(1.0, std::abs(t2)));
  }
}

TEST_CASE("property: gram and frame operator share nonzero spectra") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 8);
    const std::size_t d = 1 + static_cast<std::size_t>(rng() % 6);
    const auto pair = fixtures::random_pair(rng, n, d);
    CHECK(checks::spectra_match(eigen(gram(pair)).eigenvalues,
                                eigen(frame_operator(pair)).eigenvalues, 1e-8));
  }
}

TEST_CASE("tightness: fixtures") {
  const auto basis_t = tightness(fixtures::dual_basis(3), 1e-10);
  CHECK(basis_t.tight);
  CHECK(basis_t.lambda.real() == doctest::Approx(1.0));

  const auto mb_t = tightness(fixtures::mercedes(), 1e-10);
  CHECK(mb_t.tight);
  CHECK(mb_t.lambda.real() == doctest::Approx(1.5));

  const auto skew_t = tightness(fixtures::e1e1e2(), 1e-10);
  CHECK_FALSE(skew_t.tight);
  CHECK(skew_t.lambda.real() == doctest::Approx(1.5));
}

TEST_CASE("normalization_report: fixtures") {
  const auto clean = normalization_report(fixtures::dual_basis(3));
  CHECK(clean.max_vec_norm_dev <= 1e-15);
  CHECK(clean.max_fun_norm_dev <= 1e-15);
  CHECK(clean.max_pairing_dev <= 1e-15);

  const auto mb = normalization_report(fixtures::mercedes());
  CHECK(mb.max_dev() <= 1e-15);

  const auto basis = fixtures::dual_basis(2);
  const DualPair scaled(basis.space(), 2.0 * basis.vectors(), basis.functionals());
  const auto rep = normalization_report(scaled);
  CHECK(rep.max_vec_norm_dev == doctest::Approx(1.0));
}

TEST_CASE("normalization_report: l1 and linf norms") {
  // tau = (1/2, 1/2) has unit l1 norm; its dual-normed functional in linf
  // is (1, 1) with pairing 1.
  Matrix v(1, 2), f(1, 2);
  v << Complex(0.5), Complex(0.5);
  f << Complex(1.0), Complex(1.0);
  const DualPair pair(LpSpace{2, 1.0, Field::Real}, v, f);
  const auto rep = normalization_report(pair);
  CHECK(rep.max_vec_norm_dev <= 1e-15);
  CHECK(rep.max_fun_norm_dev <= 1e-15);
  CHECK(rep.max_pairing_dev <= 1e-15);
}

TEST_CASE("hilbert_embed: conjugation and positivity") {
  Matrix v(1, 2);
  v << Complex(0.0, 1.0), Complex(0.0);
  const auto pair = hilbert_embed(v, LpSpace{2, 2.0, Field::Complex});
  CHECK(pair.functionals()(0, 0) == Complex(0.0, -1.0));
  CHECK(pairing(pair, 0, 0).real() == doctest::Approx(1.0));

  CHECK_THROWS_AS(hilbert_embed(v, LpSpace{2, 3.0, Field::Complex}), WrongExponentError);

  const auto sic = fixtures::sic_d2();
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(std::abs(pairing(sic, j, j) - Complex(1.0)) <= 1e-14);
  }

  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pair2 = fixtures::random_unit_hilbert(rng, 3 + trial, 2 + trial % 3);
    const auto verdict = spectral_verdict(eigen(frame_operator(pair2)));
    CHECK(verdict.diagonalizable);
    CHECK(verdict.nonneg);
  }
}
