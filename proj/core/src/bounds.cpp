#include "welch/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace welch {

namespace {

constexpr double kImagResidueTol = 1e-8;
constexpr double kNormalizedTol = 1e-9;

std::string fmt_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Orientation: `reversed` flips the claim to lhs <= rhs; slack stays "margin
// in the direction of the claim" so the holds/equality rules are uniform.
BoundRecord finalize(std::string name, double lhs, double rhs, bool hypothesis_ok,
                     std::string notes, const CheckOptions& opts, bool reversed = false) {
  BoundRecord rec;
  rec.name = std::move(name);
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.slack = reversed ? rhs - lhs : lhs - rhs;
  const double tol = opts.equality_tol * std::max(1.0, std::abs(rhs));
  rec.holds = rec.slack >= -tol;
  rec.equality = std::abs(rec.slack) <= tol;
  rec.hypothesis_ok = hypothesis_ok;
  rec.notes = std::move(notes);
  if (rhs < 0.0 && !reversed) {
    if (!rec.notes.empty()) rec.notes += "; ";
    rec.notes += "vacuous (negative rhs)";
  }
  return rec;
}

struct SumParts {
  double lhs = 0.0;        // Re sum_{j,k} Gm(j,k) Gm(k,j)
  double diag_sum = 0.0;   // Re sum_j Gm(j,j)
  double diag_abs2 = 0.0;  // sum_j |G(j,j)|^{2m}
  double max_prod = 0.0;   // max_{j!=k} |Gm(j,k) Gm(k,j)|
  double max_single = 0.0; // max_{j!=k} |G(j,k)|, unlifted
  bool imag_ok = true;
  std::string imag_note;
};

SumParts sum_parts(const Matrix& g, const Matrix& gm) {
  SumParts parts;
  Complex lhs{0.0, 0.0};
  Complex diag{0.0, 0.0};
  const Eigen::Index n = gm.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      lhs += gm(j, k) * gm(k, j);
      if (j != k) {
        parts.max_prod = std::max(parts.max_prod, std::abs(gm(j, k) * gm(k, j)));
        parts.max_single = std::max(parts.max_single, std::abs(g(j, k)));
      }
    }
    diag += gm(j, j);
    parts.diag_abs2 += std::norm(gm(j, j));
  }
  parts.lhs = lhs.real();
  parts.diag_sum = diag.real();
  if (std::abs(lhs.imag()) > kImagResidueTol * std::max(1.0, std::abs(lhs.real())) ||
      std::abs(diag.imag()) > kImagResidueTol * std::max(1.0, std::abs(diag.real()))) {
    parts.imag_ok = false;
    parts.imag_note = "imaginary residue " + fmt_double(std::max(std::abs(lhs.imag()),
                                                                 std::abs(diag.imag()))) +
                      " exceeds tolerance; sums are not real";
  }
  return parts;
}

struct Hypothesis {
  bool ok = false;
  std::string note;
  SpectralDiagnostic diagnostic;
};

Hypothesis order_hypothesis(const Matrix& gm, unsigned m, std::size_t d, std::size_t n,
                            const ToleranceConfig& tol) {
  Hypothesis h;
  h.diagnostic.order = m;
  h.diagnostic.spectrum = eigen(gm);
  const std::size_t big_d = sym_dim(d, m);
  h.diagnostic.zero_padding = big_d > n ? big_d - n : 0;
  const SpectralVerdict v = spectral_verdict(h.diagnostic.spectrum, tol);
  h.diagnostic.diagonalizable = v.diagonalizable;
  h.diagnostic.nonneg = v.nonneg;
  h.ok = v.diagonalizable && v.nonneg;
  if (!v.diagonalizable) h.note = "diagonalizability proxy failed (eigvec condition too large)";
  if (!v.nonneg) {
    if (!h.note.empty()) h.note += "; ";
    h.note += "spectrum not non-negative";
  }
  return h;
}

std::vector<BoundRecord> rank_checks(const DualPair& pair, unsigned m, const std::string& stem,
                                     const CheckOptions& opts) {
  const Matrix g = gram(pair);
  const Matrix gm = hadamard_power(g, m);
  const std::size_t n = pair.size();
  const std::size_t r = numerical_rank(gm, opts.tol);

  Hypothesis hyp;
  hyp.diagnostic.order = m;
  hyp.diagnostic.spectrum = eigen(gm);
  const SpectralVerdict v = spectral_verdict(hyp.diagnostic.spectrum, opts.tol);
  hyp.ok = v.diagonalizable && v.nonneg;
  if (!v.diagonalizable) hyp.note = "diagonalizability proxy failed (eigvec condition too large)";
  if (!v.nonneg) {
    if (!hyp.note.empty()) hyp.note += "; ";
    hyp.note += "spectrum not non-negative";
  }

  SumParts parts = sum_parts(g, gm);
  bool hypothesis_ok = hyp.ok && parts.imag_ok;
  std::string base_note = "rank " + std::to_string(r);
  if (!hyp.note.empty()) base_note += "; " + hyp.note;
  if (!parts.imag_ok) base_note += "; " + parts.imag_note;

  std::vector<BoundRecord> records;
  if (r == 0) {
    records.push_back(finalize(stem + "_sum", parts.lhs, 0.0, hypothesis_ok,
                               base_note + "; zero Gram, bound vacuous", opts));
    return records;
  }
  const double sum_rhs = parts.diag_sum * parts.diag_sum / static_cast<double>(r);
  records.push_back(finalize(stem + "_sum", parts.lhs, sum_rhs, hypothesis_ok, base_note, opts));
  if (n >= 2) {
    const double denom = static_cast<double>(n) * static_cast<double>(n - 1);
    const double max_rhs = (sum_rhs - parts.diag_abs2) / denom;
    records.push_back(finalize(stem + "_max_product", parts.max_prod, max_rhs, hypothesis_ok,
                               base_note, opts));
    const double single_lhs = std::pow(parts.max_single, 2.0 * m);
    records.push_back(finalize(stem + "_max_single", single_lhs, max_rhs, hypothesis_ok,
                               base_note, opts));
  }
  return records;
}

}  // namespace

bool BoundReport::any_asserted_violation() const {
  for (const auto& rec : records) {
    if (rec.hypothesis_ok && !rec.holds) return true;
  }
  return false;
}

double welch_rhs(std::size_t n, std::size_t d, unsigned m) {
  if (n < 2) throw TooFewVectorsError("welch_rhs: requires n >= 2");
  const double dim = static_cast<double>(sym_dim(d, m));
  return (static_cast<double>(n) / dim - 1.0) / static_cast<double>(n - 1);
}

BoundRecord discrete_welch_sum_check(const DualPair& pair, unsigned m, const CheckOptions& opts) {
  const Matrix g = gram(pair);
  const Matrix gm = hadamard_power(g, m);
  const Hypothesis hyp = order_hypothesis(gm, m, pair.dim(), pair.size(), opts.tol);
  const SumParts parts = sum_parts(g, gm);

  const double rhs = parts.diag_sum * parts.diag_sum / static_cast<double>(sym_dim(pair.dim(), m));
  std::string note = hyp.note;
  if (!parts.imag_ok) {
    if (!note.empty()) note += "; ";
    note += parts.imag_note;
  }
  return finalize("welch_sum_m" + std::to_string(m), parts.lhs, rhs,
                  hyp.ok && parts.imag_ok, note, opts);
}

std::vector<BoundRecord> discrete_welch_max_check(const DualPair& pair, unsigned m,
                                                  const CheckOptions& opts) {
  const std::size_t n = pair.size();
  if (n < 2) throw TooFewVectorsError("discrete_welch_max_check: requires n >= 2");
  const Matrix g = gram(pair);
  const Matrix gm = hadamard_power(g, m);
  const Hypothesis hyp = order_hypothesis(gm, m, pair.dim(), n, opts.tol);
  const SumParts parts = sum_parts(g, gm);

  const double sum_rhs =
      parts.diag_sum * parts.diag_sum / static_cast<double>(sym_dim(pair.dim(), m));
  const double denom = static_cast<double>(n) * static_cast<double>(n - 1);
  const double rhs = (sum_rhs - parts.diag_abs2) / denom;

  std::string note = hyp.note;
  if (!parts.imag_ok) {
    if (!note.empty()) note += "; ";
    note += parts.imag_note;
  }
  const bool ok = hyp.ok && parts.imag_ok;

  std::vector<BoundRecord> records;
  records.push_back(
      finalize("welch_max_product_m" + std::to_string(m), parts.max_prod, rhs, ok, note, opts));
  records.push_back(finalize("welch_max_single_m" + std::to_string(m),
                             std::pow(parts.max_single, 2.0 * m), rhs, ok, note, opts));
  return records;
}

std::vector<BoundRecord> gram_rank_check(const DualPair& pair, const CheckOptions& opts) {
  return rank_checks(pair, 1, "gram_rank", opts);
}

std::vector<BoundRecord> hadamard_rank_check(const DualPair& pair, unsigned m,
                                             const CheckOptions& opts) {
  return rank_checks(pair, m, "hadamard_rank_m" + std::to_string(m), opts);
}

BoundRecord trace_power_check(const DualPair& pair, double r, const CheckOptions& opts) {
  if (!(r > 0)) throw ValidationError("trace_power_check: exponent must be > 0");
  const Matrix s_mat = frame_operator(pair);
  const Spectrum spec = eigen(s_mat);
  const SpectralVerdict verdict = spectral_verdict(spec, opts.tol);
  if (!verdict.nonneg) {
    throw NegativeSpectrumError("trace_power_check: frame operator failed non-negativity");
  }

  const double lhs = trace_power(spec, r, opts.tol);
  const Complex ts = trace_S(pair);
  const double base = std::max(ts.real(), 0.0);
  const double d = static_cast<double>(pair.dim());
  const double rhs = std::pow(base, r) / std::pow(d, r - 1.0);

  const bool reversed = r < 1.0;
  bool ok = verdict.diagonalizable;
  std::string note = reversed ? "direction: Tra(S^r) <= floor (r < 1)"
                              : "direction: Tra(S^r) >= floor (r >= 1)";
  if (!verdict.diagonalizable) note += "; diagonalizability proxy failed";
  if (std::abs(ts.imag()) > kImagResidueTol * std::max(1.0, std::abs(ts.real()))) {
    ok = false;
    note += "; trace has imaginary residue " + fmt_double(ts.imag());
  }
  std::ostringstream name;
  name << "trace_power_r" << r;
  return finalize(name.str(), lhs, rhs, ok, note, opts, reversed);
}

BoundRecord p_sum_check(const DualPair& pair, double p, const CheckOptions& opts) {
  if (!(p > 2.0) || std::isinf(p)) {
    throw ValidationError("p_sum_check: requires 2 < p < infinity");
  }
  const NormalizationReport nr = normalization_report(pair);
  if (nr.max_pairing_dev > kNormalizedTol) {
    throw NotNormalizedError("p_sum_check: requires f_j(tau_j) = 1 (deviation " +
                             fmt_double(nr.max_pairing_dev) + ")");
  }
  const std::size_t n = pair.size();
  const std::size_t d = pair.dim();
  if (n < d) {
    throw DegenerateCountError("p_sum_check: requires n >= d (rhs base is negative)");
  }

  const Matrix g = gram(pair);
  double lhs = 0.0;
  for (Eigen::Index j = 0; j < g.rows(); ++j) {
    for (Eigen::Index k = 0; k < g.cols(); ++k) {
      lhs += std::pow(std::abs(g(j, k) * g(k, j)), p / 2.0);
    }
  }

  double rhs = static_cast<double>(n);
  if (n >= 2 && n > d) {
    const double base =
        static_cast<double>(n - d) / (static_cast<double>(d) * static_cast<double>(n - 1));
    rhs += static_cast<double>(n) * static_cast<double>(n - 1) * std::pow(base, p / 2.0);
  }

  const Spectrum spec = eigen(frame_operator(pair));
  const SpectralVerdict verdict = spectral_verdict(spec, opts.tol);
  std::string note;
  if (!verdict.diagonalizable) note = "diagonalizability proxy failed";
  if (!verdict.nonneg) {
    if (!note.empty()) note += "; ";
    note += "spectrum not non-negative";
  }
  std::ostringstream name;
  name << "p_sum_p" << p;
  return finalize(name.str(), lhs, rhs, verdict.diagonalizable && verdict.nonneg, note, opts);
}

std::size_t gerzon(std::size_t d, Field field) {
  if (d < 1) throw ValidationError("gerzon: requires d >= 1");
  return field == Field::Complex ? d * d : d * (d + 1) / 2;
}

std::vector<ClassicalBound> classical_bounds(std::size_t n, std::size_t d, Field field) {
  if (n < 2) throw TooFewVectorsError("classical_bounds: requires n >= 2");
  const double m = field == Field::Complex ? 1.0 : 0.5;
  const double nd = static_cast<double>(n);
  const double dd = static_cast<double>(d);
  std::vector<ClassicalBound> out;

  {
    ClassicalBound b{"bukh_cox", 0.0, n > d, ""};
    if (b.applicable) {
      const double z = static_cast<double>(gerzon(n - d, field));
      const double excess = nd - dd;
      b.rhs = z / (nd * (1.0 + m * (excess - 1.0) * std::sqrt(1.0 / m + excess)) - z);
    } else {
      b.note = "requires n > d";
    }
    out.push_back(b);
  }
  {
    const std::size_t z = gerzon(d, field);
    ClassicalBound b{"orthoplex", 0.0, n > z, ""};
    if (b.applicable) {
      b.rhs = 1.0 / std::sqrt(dd);
    } else {
      b.note = "requires n > Gerzon bound " + std::to_string(z);
    }
    out.push_back(b);
  }
  {
    const std::size_t z = gerzon(d, field);
    ClassicalBound b{"levenstein", 0.0, n > z, ""};
    if (b.applicable) {
      b.rhs = std::sqrt((nd * (m + 1.0) - dd * (m * dd + 1.0)) / ((nd - dd) * (m * dd + 1.0)));
    } else {
      b.note = "requires n > Gerzon bound " + std::to_string(z);
    }
    out.push_back(b);
  }
  {
    ClassicalBound b{"exponential", 0.0, d >= 2, ""};
    if (b.applicable) {
      b.rhs = 1.0 - 2.0 * std::pow(nd, -1.0 / (dd - 1.0));
    } else {
      b.note = "degenerate dimension d = 1";
    }
    out.push_back(b);
  }
  return out;
}

BoundReport full_report(const DualPair& pair, const ReportOptions& opts) {
  BoundReport report;
  const NormalizationReport nr = normalization_report(pair);
  report.summary = PairSummary{pair.size(), pair.dim(), pair.space().p, pair.space().field,
                               nr.max_pairing_dev <= kNormalizedTol};

  const Matrix g = gram(pair);
  for (unsigned m : opts.orders) {
    const Matrix gm = hadamard_power(g, m);
    Hypothesis hyp = order_hypothesis(gm, m, pair.dim(), pair.size(), opts.check.tol);
    report.diagnostics.push_back(hyp.diagnostic);

    report.records.push_back(discrete_welch_sum_check(pair, m, opts.check));
    if (pair.size() >= 2) {
      for (auto& rec : discrete_welch_max_check(pair, m, opts.check)) {
        report.records.push_back(std::move(rec));
      }
    }
    if (m >= 2) {
      for (auto& rec : hadamard_rank_check(pair, m, opts.check)) {
        report.records.push_back(std::move(rec));
      }
    }
  }
  for (auto& rec : gram_rank_check(pair, opts.check)) report.records.push_back(std::move(rec));

  for (double r : opts.r_list) {
    try {
      report.records.push_back(trace_power_check(pair, r, opts.check));
    } catch (const NegativeSpectrumError& err) {
      BoundRecord rec;
      std::ostringstream name;
      name << "trace_power_r" << r;
      rec.name = name.str();
      rec.holds = true;
      rec.hypothesis_ok = false;
      rec.notes = std::string("not evaluated: ") + err.what();
      report.records.push_back(std::move(rec));
    }
  }
  for (double p : opts.p_list) {
    try {
      report.records.push_back(p_sum_check(pair, p, opts.check));
    } catch (const Error& err) {
      BoundRecord rec;
      std::ostringstream name;
      name << "p_sum_p" << p;
      rec.name = name.str();
      rec.holds = true;
      rec.hypothesis_ok = false;
      rec.notes = std::string("not evaluated: ") + err.what();
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

}  // namespace welch
