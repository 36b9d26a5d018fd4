#include "welch/numkernel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace welch {

void ToleranceConfig::validate() const {
  if (!(eig_imag_tol > 0) || !(nonneg_tol > 0) || !(rank_tol > 0) || !(diag_cond_max > 0)) {
    throw ValidationError("ToleranceConfig: all tolerances must be strictly positive");
  }
}

double Spectrum::spectral_radius() const {
  double rho = 0.0;
  for (const auto& lambda : eigenvalues) rho = std::max(rho, std::abs(lambda));
  return rho;
}

Spectrum eigen(const Matrix& m) {
  if (m.rows() != m.cols()) throw NonSquareError("eigen: matrix is not square");
  if (m.rows() < 1) throw ValidationError("eigen: matrix order must be >= 1");

  Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailureError("eigen: eigenvalue iteration did not converge");
  }

  Spectrum s;
  s.eigenvalues.assign(solver.eigenvalues().data(),
                       solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });

  for (const auto& lambda : s.eigenvalues) s.max_imag = std::max(s.max_imag, std::abs(lambda.imag()));

  // Condition of the eigenvector matrix; infinite for a defective matrix.
  Eigen::JacobiSVD<Matrix> svd(solver.eigenvectors());
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  s.eigvec_condition = (smin > 0.0) ? smax / smin : std::numeric_limits<double>::infinity();
  s.eigvec_condition = std::max(s.eigvec_condition, 1.0);
  return s;
}

SpectralVerdict spectral_verdict(const Spectrum& s, const ToleranceConfig& tol) {
  tol.validate();
  SpectralVerdict v;
  v.diagonalizable = s.eigvec_condition <= tol.diag_cond_max;
  const double rho = s.spectral_radius();
  v.nonneg = true;
  for (const auto& lambda : s.eigenvalues) {
    if (std::abs(lambda.imag()) > tol.eig_imag_tol * rho) v.nonneg = false;
    if (lambda.real() < -tol.nonneg_tol * rho) v.nonneg = false;
  }
  return v;
}

Complex trace(const Matrix& m) {
  if (m.rows() != m.cols()) throw NonSquareError("trace: matrix is not square");
  return m.trace();
}

double trace_power(const Spectrum& s, double r, const ToleranceConfig& tol) {
  if (!(r > 0)) throw ValidationError("trace_power: exponent must be > 0");
  if (!spectral_verdict(s, tol).nonneg) {
    throw NegativeSpectrumError("trace_power: spectrum failed the non-negativity verdict");
  }
  double sum = 0.0;
  for (const auto& lambda : s.eigenvalues) {
    const double re = std::max(lambda.real(), 0.0);
    if (re > 0.0) sum += std::pow(re, r);
  }
  return sum;
}

Matrix hadamard_power(const Matrix& g, unsigned m) {
  if (m < 1) throw ValidationError("hadamard_power: order must be >= 1");
  Matrix out = g;
  for (unsigned i = 1; i < m; ++i) out = out.cwiseProduct(g);
  return out;
}

std::size_t numerical_rank(const Matrix& m, const ToleranceConfig& tol) {
  tol.validate();
  Eigen::BDCSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double smax = sv(0);
  if (smax == 0.0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol.rank_tol * smax) ++rank;
  }
  return rank;
}

}  // namespace welch
