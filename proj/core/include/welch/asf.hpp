#pragma once

#include <cstddef>

#include "welch/numkernel.hpp"

namespace welch {

enum class Field { Real, Complex };

/// Finite-dimensional l^p space over R or C. p = infinity is encoded as
/// std::numeric_limits<double>::infinity().
struct LpSpace {
  std::size_t dim = 1;
  double p = 2.0;
  Field field = Field::Complex;

  double dual_exponent() const;
  void validate() const;
};

/// l^p norm of a coordinate row; exact max/sum formulas for p in {1, inf}.
double lp_norm(const Eigen::RowVectorXcd& row, double p);

/// Result of an equiangularity test: gamma is the mean of the tested
/// cross quantities, max_dev the largest deviation from it.
struct Equiangularity {
  bool flag = false;
  double gamma = 0.0;
  double max_dev = 0.0;
};

/// Deviations of a pair from the constraint set ||tau_j||_p = 1,
/// ||f_j||_q = 1, f_j(tau_j) = 1.
struct NormalizationReport {
  double max_vec_norm_dev = 0.0;
  double max_fun_norm_dev = 0.0;
  double max_pairing_dev = 0.0;

  double max_dev() const;
  bool within(double tol) const { return max_dev() <= tol; }
};

/// n vectors tau_j in a d-dimensional l^p space together with n functionals
/// f_j in the dual, both stored as n x d coordinate rows. The pairing is
/// bilinear: f_j(x) = sum_i functionals(j,i) * x(i) -- no conjugation. The
/// Hilbert case is recovered by hilbert_embed, which conjugates coordinates.
/// Immutable after construction.
class DualPair {
 public:
  DualPair(LpSpace space, Matrix vectors, Matrix functionals);

  const LpSpace& space() const { return space_; }
  const Matrix& vectors() const { return vectors_; }
  const Matrix& functionals() const { return functionals_; }
  std::size_t size() const { return static_cast<std::size_t>(vectors_.rows()); }
  std::size_t dim() const { return space_.dim; }

 private:
  LpSpace space_;
  Matrix vectors_;
  Matrix functionals_;
};

/// f_j(tau_k); indices are 0-based. Throws IndexOutOfRangeError.
Complex pairing(const DualPair& pair, std::size_t j, std::size_t k);

/// n x n Gram matrix G(j,k) = f_j(tau_k). Equals analysis o synthesis.
Matrix gram(const DualPair& pair);

/// d x d frame operator S(a,b) = sum_j vectors(j,a) * functionals(j,b),
/// i.e. S = synthesis o analysis.
Matrix frame_operator(const DualPair& pair);

/// (f_j(x))_j for a coordinate vector x of length d.
CVector analysis(const DualPair& pair, const CVector& x);

/// sum_j a_j tau_j for a coefficient vector a of length n.
CVector synthesis(const DualPair& pair, const CVector& a);

/// Tra(S) computed as sum_j f_j(tau_j).
Complex trace_S(const DualPair& pair);

/// Tra(S^2) computed as the double sum of f_j(tau_k) f_k(tau_j).
Complex trace_S2(const DualPair& pair);

struct Tightness {
  bool tight = false;
  Complex lambda{0.0, 0.0};
};

/// Tests S = lambda I with lambda = Tra(S)/d, in the max norm.
Tightness tightness(const DualPair& pair, double tol);

NormalizationReport normalization_report(const DualPair& pair);

/// Builds the dual functionals f_j = <., tau_j> of a Hilbert-space family:
/// functional rows are the componentwise conjugates of the vector rows.
/// Requires p == 2 (WrongExponentError).
DualPair hilbert_embed(const Matrix& vectors, const LpSpace& space);

}  // namespace welch
