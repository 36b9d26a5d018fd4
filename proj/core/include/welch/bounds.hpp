#pragma once

#include <string>
#include <vector>

#include "welch/symlift.hpp"

namespace welch {

/// One checked inequality. `slack` is oriented so that slack >= 0 (up to
/// tolerance) means the asserted inequality holds; for the few reversed
/// (<=) claims the orientation is noted in `notes`. A record with
/// hypothesis_ok == false asserts nothing: holds/equality are reported but
/// must not be read as a verdict on the inequality.
struct BoundRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
  bool equality = false;
  bool hypothesis_ok = false;
  std::string notes;
};

/// Spectrum and verdicts of the operator whose hypotheses gate an order-m
/// check (the lifted Gram; the plain Gram / frame operator at m = 1).
struct SpectralDiagnostic {
  unsigned order = 1;
  Spectrum spectrum;
  std::size_t zero_padding = 0;
  bool diagonalizable = false;
  bool nonneg = false;
};

struct PairSummary {
  std::size_t n = 0;
  std::size_t dim = 0;
  double p = 2.0;
  Field field = Field::Complex;
  bool normalized = false;
};

struct BoundReport {
  PairSummary summary;
  std::vector<SpectralDiagnostic> diagnostics;
  std::vector<BoundRecord> records;

  /// True when some record fails while its hypotheses held -- the numerical
  /// alarm condition (CLI exit code 2).
  bool any_asserted_violation() const;
};

struct CheckOptions {
  ToleranceConfig tol{};
  double equality_tol = 1e-8;  // relative tolerance for holds/equality flags
};

/// Normalized order-m Welch floor (1/(n-1)) (n / sym_dim(d, m) - 1).
/// May be negative (vacuous); returned as-is.
double welch_rhs(std::size_t n, std::size_t d, unsigned m);

/// Sum-form order-m check:
///   sum_{j,k} G(j,k)^m G(k,j)^m  >=  (sum_j G(j,j)^m)^2 / sym_dim(d, m).
BoundRecord discrete_welch_sum_check(const DualPair& pair, unsigned m,
                                     const CheckOptions& opts = {});

/// Max-form order-m checks against
///   rhs = (sum-form rhs - sum_j |G(j,j)|^{2m}) / (n^2 - n):
/// [0] product form, lhs = max_{j!=k} |G(j,k) G(k,j)|^m;
/// [1] single form, lhs = (max_{j!=k} |G(j,k)|)^{2m}.
/// Throws TooFewVectorsError when n < 2.
std::vector<BoundRecord> discrete_welch_max_check(const DualPair& pair, unsigned m,
                                                  const CheckOptions& opts = {});

/// First-order checks with sym_dim replaced by the numerical rank of G
/// (sum form plus both max forms when n >= 2).
std::vector<BoundRecord> gram_rank_check(const DualPair& pair, const CheckOptions& opts = {});

/// Order-m checks with sym_dim replaced by the numerical rank of the
/// entrywise power G^(m); hypotheses from the spectrum of G^(m).
std::vector<BoundRecord> hadamard_rank_check(const DualPair& pair, unsigned m,
                                             const CheckOptions& opts = {});

/// Jensen trace-power check: Tra(S^r) >= (Tra S)^r / d^{r-1} for r >= 1 and
/// the reversed inequality for r in (0,1); r = 1 is an identity. Throws
/// NegativeSpectrumError when the frame operator fails the non-negativity
/// verdict.
BoundRecord trace_power_check(const DualPair& pair, double r, const CheckOptions& opts = {});

/// p-sum check for 2 < p < infinity on a normalized pair (f_j(tau_j) = 1):
///   sum_{j,k} |G(j,k) G(k,j)|^{p/2} >= n(n-1) ((n-d)/(d(n-1)))^{p/2} + n.
/// Throws NotNormalizedError, and DegenerateCountError when n < d (the rhs
/// base becomes negative and fractional powers are undefined).
BoundRecord p_sum_check(const DualPair& pair, double p, const CheckOptions& opts = {});

/// Gerzon's bound: d^2 over C, d(d+1)/2 over R.
std::size_t gerzon(std::size_t d, Field field);

/// Classical Hilbert-space coherence floors, for comparison only.
struct ClassicalBound {
  std::string name;
  double rhs = 0.0;
  bool applicable = false;
  std::string note;
};

std::vector<ClassicalBound> classical_bounds(std::size_t n, std::size_t d, Field field);

struct ReportOptions {
  std::vector<unsigned> orders{1};
  std::vector<double> p_list{};
  std::vector<double> r_list{0.5, 1.0, 2.0};
  CheckOptions check{};
};

/// Runs every applicable check and collects per-order spectral diagnostics.
/// Hypothesis failures are recorded, never asserted.
BoundReport full_report(const DualPair& pair, const ReportOptions& opts = {});

}  // namespace welch
