#pragma once

#include <cmath>
#include <random>

#include "welch/asf.hpp"
#include "welch/continuous.hpp"

namespace fixtures {

using welch::Complex;
using welch::DualPair;
using welch::Field;
using welch::LpSpace;
using welch::Matrix;

// Three unit vectors at 120 degrees in R^2, Hilbert-embedded. Tight with
// frame bound 3/2; all off-diagonal Gram entries are -1/2.
inline DualPair mercedes() {
  const double s = std::sqrt(3.0) / 2.0;
  Matrix v(3, 2);
  v << Complex(1.0), Complex(0.0),
       Complex(-0.5), Complex(s),
       Complex(-0.5), Complex(-s);
  return welch::hilbert_embed(v, LpSpace{2, 2.0, Field::Real});
}

// Four tetrahedron states in C^2: |<t_j, t_k>|^2 = 1/3 for j != k, tight
// with frame bound 2.
inline DualPair sic_d2() {
  const double a = 1.0 / std::sqrt(3.0);
  const double b = std::sqrt(2.0 / 3.0);
  const Complex w = std::polar(1.0, 2.0 * M_PI / 3.0);
  Matrix v(4, 2);
  v(0, 0) = 1.0;
  v(0, 1) = 0.0;
  for (int k = 0; k < 3; ++k) {
    v(k + 1, 0) = a;
    v(k + 1, 1) = b * std::pow(w, k);
  }
  return welch::hilbert_embed(v, LpSpace{2, 2.0, Field::Complex});
}

inline DualPair dual_basis(std::size_t d, Field field = Field::Complex, double p = 2.0) {
  Matrix eye = Matrix::Identity(d, d);
  return DualPair(LpSpace{d, p, field}, eye, eye);
}

// {e1, e1, e2} in R^2 with the canonical dual functionals: not tight,
// S = diag(2, 1), Gram has a duplicated pair.
inline DualPair e1e1e2() {
  Matrix v(3, 2);
  v << Complex(1.0), Complex(0.0),
       Complex(1.0), Complex(0.0),
       Complex(0.0), Complex(1.0);
  return DualPair(LpSpace{2, 2.0, Field::Real}, v, v);
}

// Gram matrix is the 2x2 Jordan block [[1,1],[0,1]]: defective, so every
// diagonalizability hypothesis must fail.
inline DualPair jordan_pair() {
  Matrix v = Matrix::Identity(2, 2);
  Matrix f(2, 2);
  f << Complex(1.0), Complex(1.0),
       Complex(0.0), Complex(1.0);
  return DualPair(LpSpace{2, 2.0, Field::Real}, v, f);
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                            Field field) {
  std::normal_distribution<double> g;
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index i = 0; i < m.cols(); ++i) {
      const double re = g(rng);
      m(j, i) = field == Field::Complex ? Complex(re, g(rng)) : Complex(re, 0.0);
    }
  }
  return m;
}

inline DualPair random_pair(std::mt19937_64& rng, std::size_t n, std::size_t d,
                            double p = 2.0, Field field = Field::Complex) {
  return DualPair(LpSpace{d, p, field}, random_matrix(rng, n, d, field),
                  random_matrix(rng, n, d, field));
}

// Unit-vector Hilbert family: f_j = conj(tau_j), so f_j(tau_j) = 1 and the
// frame operator is positive.
inline DualPair random_unit_hilbert(std::mt19937_64& rng, std::size_t n, std::size_t d,
                                    Field field = Field::Complex) {
  Matrix v = random_matrix(rng, n, d, field);
  for (Eigen::Index j = 0; j < v.rows(); ++j) v.row(j).normalize();
  return welch::hilbert_embed(v, LpSpace{d, 2.0, field});
}

inline welch::ContinuousASF counting_measure(const DualPair& pair) {
  welch::FiniteMeasure measure;
  measure.weights = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(pair.size()));
  for (std::size_t j = 0; j < pair.size(); ++j) {
    measure.atoms.push_back("atom_" + std::to_string(j));
  }
  return welch::ContinuousASF{std::move(measure), pair};
}

inline welch::ContinuousASF weighted(const DualPair& pair, const Eigen::VectorXd& w) {
  welch::FiniteMeasure measure;
  measure.weights = w;
  for (std::size_t j = 0; j < pair.size(); ++j) {
    measure.atoms.push_back("atom_" + std::to_string(j));
  }
  return welch::ContinuousASF{std::move(measure), pair};
}

}  // namespace fixtures
