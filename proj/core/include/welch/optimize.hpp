#pragma once

#include <cstdint>
#include <functional>

#include "welch/bounds.hpp"

namespace welch {

/// max_{j != k} |f_j(tau_k)|. Throws TooFewVectorsError when n < 2.
double frame_correlation(const DualPair& pair);

/// Root-mean-square cross relation
///   sqrt( (1/(n(n-1))) sum_{j != k} f_j(tau_k) f_k(tau_j) )
/// of a normalized pair (real part taken). A substantially negative cross
/// sum raises NegativeRadicandError (hypothesis failure).
double rms_cross(const DualPair& pair, double norm_tol = 1e-6);

/// Pseudo frame potential: the full double sum of f_j(tau_k) f_k(tau_j),
/// identically Re Tra(S^2). Requires f_j(tau_j) = 1 within norm_tol.
double pseudo_frame_potential(const DualPair& pair, double norm_tol = 1e-6);

/// Tests |f_j(tau_k)|^2 = gamma over j != k; gamma is the mean of the
/// squared cross pairings and max_dev the worst deviation from it.
Equiangularity equiangularity(const DualPair& pair, double tol);

enum class Objective { Correlation, Potential, Equiangular };

struct IterateInfo {
  std::size_t restart = 0;
  std::size_t iter = 0;
  double objective_value = 0.0;
  double feasibility_dev = 0.0;
  const DualPair& pair;
};

struct SearchConfig {
  std::uint64_t seed = 1;
  std::size_t restarts = 32;
  /// Iterations of the penalized joint phase per restart; the feasible
  /// polish phase that follows adds up to half of this (at least 500).
  std::size_t max_iters = 5000;
  double step_init = 0.1;
  /// Step adaptation constant: accepted steps grow the step by 1/step_decay,
  /// rejected ones shrink it by step_decay^3.
  double step_decay = 0.99;
  /// Constraint penalty weight; doubled every 500 iterations, capped at 1e6.
  double penalty_weight = 10.0;
  double tol = 1e-9;
  Objective objective = Objective::Correlation;
  /// Target squared cross pairing for Objective::Equiangular.
  double equiangular_target = 0.0;
  /// Worker threads across restarts; results are independent of the count.
  /// on_iterate must only be set with workers == 1.
  std::size_t workers = 1;
  std::function<void(const IterateInfo&)> on_iterate;

  void validate() const;
};

struct SearchResult {
  DualPair pair;
  double objective_value = 0.0;
  double welch_gap = 0.0;  // NaN when the floor is vacuous or not applicable
  NormalizationReport feasibility;
  std::size_t iters_used = 0;
  bool converged = false;
  double equiangular_max_dev = 0.0;  // Equiangular objective only, else NaN
  double tightness_residual = 0.0;   // Equiangular objective only, else NaN
};

/// Equiangularity-plus-tightness residual of a pair against a target squared
/// cross pairing; the tightness target is S = (n/d) I.
struct EtfResidual {
  double objective = 0.0;             // equiangular_residual + tightness_residual
  double equiangular_residual = 0.0;  // sum_{j != k} (|G(j,k)|^2 - target)^2
  double tightness_residual = 0.0;    // ||S - (n/d) I||_F^2
  double max_dev = 0.0;               // max_{j != k} | |G(j,k)|^2 - target |
};

EtfResidual etf_residual(const DualPair& pair, double gamma_sq_target);

/// Minimizes the frame correlation over pairs satisfying ||tau_j||_p = 1,
/// ||f_j||_q = 1, f_j(tau_j) = 1, by penalized projected local search with a
/// softmax-smoothed max and deterministic random restarts.
SearchResult grassmannian_search(const LpSpace& space, std::size_t n, const SearchConfig& cfg);

/// Searches for a 1/(d+1)-equiangular tight pair of d^2 vectors in complex
/// l^2 of dimension d. Requires d >= 2.
SearchResult etf_search(std::size_t d, const SearchConfig& cfg);

/// Minimizes the pseudo frame potential under the normalization constraints;
/// the floor is n^2/d with equality exactly at tight pairs. Requires n >= d.
SearchResult potential_minimize(const LpSpace& space, std::size_t n, const SearchConfig& cfg);

}  // namespace welch
