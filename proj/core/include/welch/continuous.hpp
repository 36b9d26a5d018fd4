#pragma once

#include <string>
#include <vector>

#include "welch/bounds.hpp"

namespace welch {

/// Atomic sigma-finite measure: labelled atoms with strictly positive
/// weights. For the product measure on Omega x Omega the diagonal has mass
/// sum w^2 and its complement total^2 - sum w^2.
struct FiniteMeasure {
  std::vector<std::string> atoms;
  Eigen::VectorXd weights;

  double total_mass() const { return weights.sum(); }
  double diag_mass() const { return weights.squaredNorm(); }
  double offdiag_mass() const {
    const double t = total_mass();
    return t * t - diag_mass();
  }
  void validate() const;
};

/// A measure-indexed family (f_alpha, tau_alpha): one pair row per atom.
/// The frame operator is the weighted sum S = sum_alpha w_alpha tau_alpha
/// f_alpha, the atomic realization of the weak integral.
struct ContinuousASF {
  FiniteMeasure measure;
  DualPair pair;

  std::size_t atom_count() const { return pair.size(); }
  std::size_t dim() const { return pair.dim(); }
  void validate() const;
};

Matrix cont_frame_operator(const ContinuousASF& casf);

/// Integral trace formulas: sum_a w_a f_a(tau_a) and the weighted double sum
/// of f_b(tau_a) f_a(tau_b).
Complex cont_trace(const ContinuousASF& casf);
Complex cont_trace2(const ContinuousASF& casf);

/// Weighted order-m checks; returns {sum-form, product-max-form,
/// single-max-form}. Hypotheses come from the spectrum of
/// W^{1/2} G^(m) W^{1/2}. Throws DegenerateMeasureError for a single atom.
std::vector<BoundRecord> cont_welch_check(const ContinuousASF& casf, unsigned m,
                                          const CheckOptions& opts = {});

/// Weighted Jensen trace-power check (direction flips at r = 1).
BoundRecord cont_trace_power_check(const ContinuousASF& casf, double r,
                                   const CheckOptions& opts = {});

/// Weighted p-power check, 2 < p < infinity, on a normalized family:
///   sum w_a w_b |G(a,b) G(b,a)|^{p/2}
///     >= (total^2/d - diag_mass)^{p/2} / offdiag_mass^{p/2-1} + diag_mass.
BoundRecord cont_p_check(const ContinuousASF& casf, double p, const CheckOptions& opts = {});

/// One atom per partition cell: weight masses[j], rows divided by
/// sqrt(masses[j]); the resulting frame operator equals the discrete one
/// exactly. Throws NonPositiveMassError.
ContinuousASF partition_construction(const DualPair& pair, const std::vector<double>& masses);

struct ContinuousMetrics {
  double crms = 0.0;
  double cpfp = 0.0;
  double correlation = 0.0;
  Equiangularity equiangular;
};

/// Weighted RMS cross relation, pseudo frame potential, frame correlation and
/// the |f_a(tau_b)| = gamma equiangularity test. Requires f_a(tau_a) = 1 and
/// at least two atoms.
ContinuousMetrics cont_metrics(const ContinuousASF& casf, double eq_tol = 1e-8);

}  // namespace welch
