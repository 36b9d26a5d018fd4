#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "welch/errors.hpp"

namespace welch {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Tolerances for the spectral hypothesis verdicts and rank decisions.
/// eig_imag_tol and nonneg_tol are relative to the spectral radius,
/// rank_tol is relative to the largest singular value.
struct ToleranceConfig {
  double eig_imag_tol = 1e-9;
  double nonneg_tol = 1e-9;
  double rank_tol = 1e-10;
  double diag_cond_max = 1e8;

  void validate() const;
};

/// Eigenvalues of a square matrix, ordered by descending real part
/// (ties broken by descending imaginary part), plus a condition estimate
/// of the eigenvector matrix used as the diagonalizability proxy.
struct Spectrum {
  std::vector<Complex> eigenvalues;
  double eigvec_condition = 1.0;
  double max_imag = 0.0;

  double spectral_radius() const;
};

struct SpectralVerdict {
  bool diagonalizable = false;
  bool nonneg = false;
};

/// Dense eigendecomposition. Throws NonSquareError / NumericalFailureError.
Spectrum eigen(const Matrix& m);

/// Diagonalizability and non-negativity verdicts for a computed spectrum.
/// Both tests are relative to the spectral radius; a zero matrix passes.
SpectralVerdict spectral_verdict(const Spectrum& s, const ToleranceConfig& tol = {});

/// Sum of diagonal entries. Throws NonSquareError.
Complex trace(const Matrix& m);

/// Sum of max(Re(lambda), 0)^r over the spectrum, with 0^r := 0.
/// Requires r > 0 and a non-negative spectrum verdict (NegativeSpectrumError).
/// Tiny negative real parts (within tolerance) are clamped to zero so that
/// fractional powers stay real.
double trace_power(const Spectrum& s, double r, const ToleranceConfig& tol = {});

/// Entrywise m-th power, m >= 1.
Matrix hadamard_power(const Matrix& g, unsigned m);

/// Number of singular values above rank_tol * sigma_max.
std::size_t numerical_rank(const Matrix& m, const ToleranceConfig& tol = {});

}  // namespace welch
