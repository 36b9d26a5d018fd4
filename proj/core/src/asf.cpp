#include "welch/asf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace welch {

namespace {
constexpr double kRealImagTol = 1e-12;
}

double LpSpace::dual_exponent() const {
  if (std::isinf(p)) return 1.0;
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  return p / (p - 1.0);
}

void LpSpace::validate() const {
  if (dim < 1) throw ValidationError("LpSpace: dimension must be >= 1");
  if (std::isnan(p) || p < 1.0) throw ValidationError("LpSpace: exponent must lie in [1, inf]");
}

double lp_norm(const Eigen::RowVectorXcd& row, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (Eigen::Index i = 0; i < row.size(); ++i) m = std::max(m, std::abs(row(i)));
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < row.size(); ++i) s += std::abs(row(i));
    return s;
  }
  if (p == 2.0) return row.norm();
  double s = 0.0;
  for (Eigen::Index i = 0; i < row.size(); ++i) s += std::pow(std::abs(row(i)), p);
  return std::pow(s, 1.0 / p);
}

double NormalizationReport::max_dev() const {
  return std::max({max_vec_norm_dev, max_fun_norm_dev, max_pairing_dev});
}

DualPair::DualPair(LpSpace space, Matrix vectors, Matrix functionals)
    : space_(space), vectors_(std::move(vectors)), functionals_(std::move(functionals)) {
  space_.validate();
  if (vectors_.rows() < 1) throw ValidationError("DualPair: at least one vector is required");
  if (vectors_.rows() != functionals_.rows()) {
    throw DimensionMismatchError("DualPair: vector and functional row counts differ");
  }
  if (static_cast<std::size_t>(vectors_.cols()) != space_.dim ||
      static_cast<std::size_t>(functionals_.cols()) != space_.dim) {
    throw DimensionMismatchError("DualPair: row length does not match the space dimension");
  }
  if (!vectors_.allFinite() || !functionals_.allFinite()) {
    throw ValidationError("DualPair: entries must be finite");
  }
  if (space_.field == Field::Real) {
    const double vi = vectors_.imag().cwiseAbs().maxCoeff();
    const double fi = functionals_.imag().cwiseAbs().maxCoeff();
    if (vi > kRealImagTol || fi > kRealImagTol) {
      throw ValidationError("DualPair: real field requires zero imaginary parts");
    }
    vectors_.imag().setZero();
    functionals_.imag().setZero();
  }
}

Complex pairing(const DualPair& pair, std::size_t j, std::size_t k) {
  const std::size_t n = pair.size();
  if (j >= n || k >= n) throw IndexOutOfRangeError("pairing: index out of range");
  return (pair.functionals().row(j).array() * pair.vectors().row(k).array()).sum();
}

Matrix gram(const DualPair& pair) {
  return pair.functionals() * pair.vectors().transpose();
}

Matrix frame_operator(const DualPair& pair) {
  return pair.vectors().transpose() * pair.functionals();
}

CVector analysis(const DualPair& pair, const CVector& x) {
  if (static_cast<std::size_t>(x.size()) != pair.dim()) {
    throw DimensionMismatchError("analysis: input length does not match the space dimension");
  }
  return pair.functionals() * x;
}

CVector synthesis(const DualPair& pair, const CVector& a) {
  if (static_cast<std::size_t>(a.size()) != pair.size()) {
    throw DimensionMismatchError("synthesis: coefficient length does not match the family size");
  }
  return pair.vectors().transpose() * a;
}

Complex trace_S(const DualPair& pair) {
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < pair.size(); ++j) sum += pairing(pair, j, j);
  return sum;
}

Complex trace_S2(const DualPair& pair) {
  const Matrix g = gram(pair);
  Complex sum{0.0, 0.0};
  for (Eigen::Index j = 0; j < g.rows(); ++j) {
    for (Eigen::Index k = 0; k < g.cols(); ++k) sum += g(j, k) * g(k, j);
  }
  return sum;
}

Tightness tightness(const DualPair& pair, double tol) {
  if (!(tol > 0)) throw ValidationError("tightness: tolerance must be > 0");
  Tightness t;
  t.lambda = trace_S(pair) / static_cast<double>(pair.dim());
  Matrix dev = frame_operator(pair);
  dev.diagonal().array() -= t.lambda;
  t.tight = dev.cwiseAbs().maxCoeff() <= tol * std::max(1.0, std::abs(t.lambda));
  return t;
}

NormalizationReport normalization_report(const DualPair& pair) {
  NormalizationReport r;
  const double p = pair.space().p;
  const double q = pair.space().dual_exponent();
  for (std::size_t j = 0; j < pair.size(); ++j) {
    const Eigen::RowVectorXcd vr = pair.vectors().row(j);
    const Eigen::RowVectorXcd fr = pair.functionals().row(j);
    r.max_vec_norm_dev = std::max(r.max_vec_norm_dev, std::abs(lp_norm(vr, p) - 1.0));
    r.max_fun_norm_dev = std::max(r.max_fun_norm_dev, std::abs(lp_norm(fr, q) - 1.0));
    r.max_pairing_dev = std::max(r.max_pairing_dev, std::abs(pairing(pair, j, j) - 1.0));
  }
  return r;
}

DualPair hilbert_embed(const Matrix& vectors, const LpSpace& space) {
  if (space.p != 2.0) throw WrongExponentError("hilbert_embed: requires p == 2");
  return DualPair(space, vectors, vectors.conjugate());
}

}  // namespace welch
