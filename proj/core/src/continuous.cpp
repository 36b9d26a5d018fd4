#include "welch/continuous.hpp"

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

}  // namespace

void FiniteMeasure::validate() const {
  if (static_cast<std::size_t>(weights.size()) != atoms.size()) {
    throw DimensionMismatchError("FiniteMeasure: atom and weight counts differ");
  }
  if (weights.size() < 1) throw ValidationError("FiniteMeasure: at least one atom is required");
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (!(weights(i) > 0.0) || !std::isfinite(weights(i))) {
      throw NonPositiveMassError("FiniteMeasure: weights must be finite and > 0");
    }
  }
}

void ContinuousASF::validate() const {
  measure.validate();
  if (measure.atoms.size() != pair.size()) {
    throw DimensionMismatchError("ContinuousASF: atom count does not match the pair size");
  }
}

Matrix cont_frame_operator(const ContinuousASF& casf) {
  casf.validate();
  const Matrix& v = casf.pair.vectors();
  const Matrix& f = casf.pair.functionals();
  return v.transpose() * casf.measure.weights.asDiagonal() * f;
}

Complex cont_trace(const ContinuousASF& casf) {
  casf.validate();
  Complex sum{0.0, 0.0};
  for (std::size_t a = 0; a < casf.atom_count(); ++a) {
    sum += casf.measure.weights(a) * pairing(casf.pair, a, a);
  }
  return sum;
}

Complex cont_trace2(const ContinuousASF& casf) {
  casf.validate();
  const Matrix g = gram(casf.pair);
  const auto& w = casf.measure.weights;
  Complex sum{0.0, 0.0};
  for (Eigen::Index a = 0; a < g.rows(); ++a) {
    for (Eigen::Index b = 0; b < g.cols(); ++b) {
      sum += w(a) * w(b) * g(a, b) * g(b, a);
    }
  }
  return sum;
}

std::vector<BoundRecord> cont_welch_check(const ContinuousASF& casf, unsigned m,
                                          const CheckOptions& opts) {
  casf.validate();
  if (casf.atom_count() < 2) {
    throw DegenerateMeasureError("cont_welch_check: single atom (off-diagonal mass is zero)");
  }
  const Matrix g = gram(casf.pair);
  const Matrix gm = hadamard_power(g, m);
  const auto& w = casf.measure.weights;
  const Eigen::Index n = gm.rows();

  Complex lhs_sum{0.0, 0.0};
  Complex diag_sum{0.0, 0.0};
  double diag_abs2 = 0.0;  // sum_a w_a^2 |G(a,a)|^{2m}
  double max_prod = 0.0;
  double max_single = 0.0;
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      lhs_sum += w(a) * w(b) * gm(a, b) * gm(b, a);
      if (a != b) {
        max_prod = std::max(max_prod, std::abs(gm(a, b) * gm(b, a)));
        max_single = std::max(max_single, std::abs(g(a, b)));
      }
    }
    diag_sum += w(a) * gm(a, a);
    diag_abs2 += w(a) * w(a) * std::norm(gm(a, a));
  }

  bool imag_ok = true;
  std::string note;
  if (std::abs(lhs_sum.imag()) > kImagResidueTol * std::max(1.0, std::abs(lhs_sum.real())) ||
      std::abs(diag_sum.imag()) > kImagResidueTol * std::max(1.0, std::abs(diag_sum.real()))) {
    imag_ok = false;
    note = "imaginary residue exceeds tolerance; sums are not real";
  }

  // Hypothesis operator: symmetrized weighting, similar to W G^(m).
  const Eigen::VectorXd sqrt_w = w.cwiseSqrt();
  const Matrix weighted = sqrt_w.asDiagonal() * gm * sqrt_w.asDiagonal();
  const Spectrum spec = eigen(weighted);
  const SpectralVerdict verdict = spectral_verdict(spec, opts.tol);
  if (!verdict.diagonalizable) {
    if (!note.empty()) note += "; ";
    note += "diagonalizability proxy failed (eigvec condition too large)";
  }
  if (!verdict.nonneg) {
    if (!note.empty()) note += "; ";
    note += "spectrum not non-negative";
  }
  const bool ok = verdict.diagonalizable && verdict.nonneg && imag_ok;

  const double sum_rhs =
      diag_sum.real() * diag_sum.real() / static_cast<double>(sym_dim(casf.dim(), m));
  const double offdiag = casf.measure.offdiag_mass();
  const double max_rhs = (sum_rhs - diag_abs2) / offdiag;

  std::vector<BoundRecord> records;
  records.push_back(finalize("cont_welch_sum_m" + std::to_string(m), lhs_sum.real(), sum_rhs,
                             ok, note, opts));
  records.push_back(finalize("cont_welch_max_product_m" + std::to_string(m), max_prod, max_rhs,
                             ok, note, opts));
  records.push_back(finalize("cont_welch_max_single_m" + std::to_string(m),
                             std::pow(max_single, 2.0 * m), max_rhs, ok, note, opts));
  return records;
}

BoundRecord cont_trace_power_check(const ContinuousASF& casf, double r, const CheckOptions& opts) {
  if (!(r > 0)) throw ValidationError("cont_trace_power_check: exponent must be > 0");
  casf.validate();
  const Spectrum spec = eigen(cont_frame_operator(casf));
  const SpectralVerdict verdict = spectral_verdict(spec, opts.tol);
  if (!verdict.nonneg) {
    throw NegativeSpectrumError("cont_trace_power_check: frame operator failed non-negativity");
  }
  const double lhs = trace_power(spec, r, opts.tol);
  const Complex ts = cont_trace(casf);
  const double base = std::max(ts.real(), 0.0);
  const double d = static_cast<double>(casf.dim());
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
  name << "cont_trace_power_r" << r;
  return finalize(name.str(), lhs, rhs, ok, note, opts, reversed);
}

BoundRecord cont_p_check(const ContinuousASF& casf, double p, const CheckOptions& opts) {
  if (!(p > 2.0) || std::isinf(p)) {
    throw ValidationError("cont_p_check: requires 2 < p < infinity");
  }
  casf.validate();
  const NormalizationReport nr = normalization_report(casf.pair);
  if (nr.max_pairing_dev > kNormalizedTol) {
    throw NotNormalizedError("cont_p_check: requires f_a(tau_a) = 1 (deviation " +
                             fmt_double(nr.max_pairing_dev) + ")");
  }
  if (casf.atom_count() < 2) {
    throw DegenerateMeasureError("cont_p_check: single atom (off-diagonal mass is zero)");
  }
  const double total = casf.measure.total_mass();
  const double diag = casf.measure.diag_mass();
  const double offdiag = casf.measure.offdiag_mass();
  const double d = static_cast<double>(casf.dim());
  const double base = total * total / d - diag;
  if (base < 0.0) {
    throw DegenerateCountError("cont_p_check: total^2/d below diagonal mass (rhs base negative)");
  }

  const Matrix g = gram(casf.pair);
  const auto& w = casf.measure.weights;
  double lhs = 0.0;
  for (Eigen::Index a = 0; a < g.rows(); ++a) {
    for (Eigen::Index b = 0; b < g.cols(); ++b) {
      lhs += w(a) * w(b) * std::pow(std::abs(g(a, b) * g(b, a)), p / 2.0);
    }
  }
  const double rhs = std::pow(base, p / 2.0) / std::pow(offdiag, p / 2.0 - 1.0) + diag;

  const Spectrum spec = eigen(cont_frame_operator(casf));
  const SpectralVerdict verdict = spectral_verdict(spec, opts.tol);
  std::string note;
  if (!verdict.diagonalizable) note = "diagonalizability proxy failed";
  if (!verdict.nonneg) {
    if (!note.empty()) note += "; ";
    note += "spectrum not non-negative";
  }
  std::ostringstream name;
  name << "cont_p_p" << p;
  return finalize(name.str(), lhs, rhs, verdict.diagonalizable && verdict.nonneg, note, opts);
}

ContinuousASF partition_construction(const DualPair& pair, const std::vector<double>& masses) {
  if (masses.size() != pair.size()) {
    throw DimensionMismatchError("partition_construction: one mass per pair row is required");
  }
  FiniteMeasure measure;
  measure.weights.resize(static_cast<Eigen::Index>(masses.size()));
  Matrix v = pair.vectors();
  Matrix f = pair.functionals();
  for (std::size_t j = 0; j < masses.size(); ++j) {
    if (!(masses[j] > 0.0) || !std::isfinite(masses[j])) {
      throw NonPositiveMassError("partition_construction: masses must be finite and > 0");
    }
    measure.weights(j) = masses[j];
    measure.atoms.push_back("cell_" + std::to_string(j));
    const double scale = 1.0 / std::sqrt(masses[j]);
    v.row(j) *= scale;
    f.row(j) *= scale;
  }
  return ContinuousASF{std::move(measure), DualPair(pair.space(), std::move(v), std::move(f))};
}

ContinuousMetrics cont_metrics(const ContinuousASF& casf, double eq_tol) {
  casf.validate();
  if (casf.atom_count() < 2) {
    throw DegenerateMeasureError("cont_metrics: single atom (off-diagonal mass is zero)");
  }
  const NormalizationReport nr = normalization_report(casf.pair);
  if (nr.max_pairing_dev > kNormalizedTol) {
    throw NotNormalizedError("cont_metrics: requires f_a(tau_a) = 1 (deviation " +
                             fmt_double(nr.max_pairing_dev) + ")");
  }

  const Matrix g = gram(casf.pair);
  const auto& w = casf.measure.weights;
  const Eigen::Index n = g.rows();

  Complex cross{0.0, 0.0};
  Complex full{0.0, 0.0};
  double correlation = 0.0;
  double gamma_sum = 0.0;
  double mag_min = std::numeric_limits<double>::infinity();
  double mag_max = 0.0;
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const Complex term = w(a) * w(b) * g(a, b) * g(b, a);
      full += term;
      if (a != b) {
        cross += term;
        const double mag = std::abs(g(a, b));
        correlation = std::max(correlation, mag);
        gamma_sum += mag;
        mag_min = std::min(mag_min, mag);
        mag_max = std::max(mag_max, mag);
      }
    }
  }

  ContinuousMetrics out;
  const double offdiag = casf.measure.offdiag_mass();
  double radicand = cross.real() / offdiag;
  if (radicand < 0.0) {
    if (radicand < -kImagResidueTol) {
      throw NegativeRadicandError("cont_metrics: cross sum is negative (hypothesis failure)");
    }
    radicand = 0.0;
  }
  out.crms = std::sqrt(radicand);
  out.cpfp = full.real();
  out.correlation = correlation;

  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  out.equiangular.gamma = gamma_sum / pairs;
  out.equiangular.max_dev =
      std::max(mag_max - out.equiangular.gamma, out.equiangular.gamma - mag_min);
  out.equiangular.flag = out.equiangular.max_dev <= eq_tol;
  return out;
}

}  // namespace welch
