#include "welch/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>
#include <vector>

namespace welch {

namespace {

constexpr double kPenaltyCap = 1e6;
constexpr double kFeasibleTol = 1e-6;
constexpr std::size_t kPlateauWindow = 200;
constexpr double kBetaInit = 40.0;
constexpr double kBetaCap = 5e5;
constexpr double kPairingGuard = 0.1;

double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Problem {
  LpSpace space;
  std::size_t n = 0;
  Objective kind = Objective::Correlation;
  double gamma_target = 0.0;  // Equiangular: target squared cross pairing
  double lambda0 = 0.0;       // Equiangular: tightness target S = lambda0 I
};

Eigen::RowVectorXcd random_row(std::mt19937_64& rng, std::size_t d, Field field) {
  std::normal_distribution<double> g;
  Eigen::RowVectorXcd row(static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < row.size(); ++i) {
    const double re = g(rng);
    row(i) = field == Field::Complex ? Complex(re, g(rng)) : Complex(re, 0.0);
  }
  return row;
}

// Dual-norming functional of an l^p-unit row: unit dual norm and pairing 1.
Eigen::RowVectorXcd norming_functional(const Eigen::RowVectorXcd& v, double p) {
  const Eigen::Index d = v.size();
  Eigen::RowVectorXcd f = Eigen::RowVectorXcd::Zero(d);
  if (std::isinf(p)) {
    Eigen::Index imax = 0;
    double best = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (std::abs(v(i)) > best) {
        best = std::abs(v(i));
        imax = i;
      }
    }
    if (best > 0.0) f(imax) = std::conj(v(imax)) / (best * best);
    return f;
  }
  if (p == 1.0) {
    for (Eigen::Index i = 0; i < d; ++i) {
      const double mag = std::abs(v(i));
      if (mag > 0.0) f(i) = std::conj(v(i)) / mag;
    }
    return f;
  }
  if (p == 2.0) return v.conjugate();
  for (Eigen::Index i = 0; i < d; ++i) {
    const double mag = std::abs(v(i));
    if (mag > 0.0) f(i) = std::conj(v(i)) * std::pow(mag, p - 2.0);
  }
  return f;
}

// Constraint projection: tau rows to unit l^p, f rows to unit l^q, then f
// rescaled by 1/f_j(tau_j); rows with near-zero pairing are re-randomized,
// falling back to the norming functional.
void project_rows(Matrix& v, Matrix& f, const LpSpace& space, std::mt19937_64& rng) {
  const double p = space.p;
  const double q = space.dual_exponent();
  const std::size_t d = space.dim;
  for (Eigen::Index j = 0; j < v.rows(); ++j) {
    double nv = lp_norm(v.row(j), p);
    if (!(nv > 1e-14)) {
      v.row(j) = random_row(rng, d, space.field);
      nv = lp_norm(v.row(j), p);
    }
    v.row(j) /= nv;

    const double nf = lp_norm(f.row(j), q);
    if (!(nf > 1e-14)) {
      f.row(j) = norming_functional(v.row(j), p);
    } else {
      f.row(j) /= nf;
    }
    Complex c = (f.row(j).array() * v.row(j).array()).sum();
    int tries = 0;
    while (std::abs(c) <= kPairingGuard && tries < 8) {
      f.row(j) = random_row(rng, d, space.field);
      f.row(j) /= lp_norm(f.row(j), q);
      c = (f.row(j).array() * v.row(j).array()).sum();
      ++tries;
    }
    if (std::abs(c) <= kPairingGuard) {
      f.row(j) = norming_functional(v.row(j), p);
    } else {
      f.row(j) /= c;
    }
  }
}

// Projection onto the exactly feasible manifold: unit tau rows with their
// dual-norming functionals.
void project_norming(Matrix& v, Matrix& f, const LpSpace& space, std::mt19937_64& rng) {
  for (Eigen::Index j = 0; j < v.rows(); ++j) {
    double nv = lp_norm(v.row(j), space.p);
    if (!(nv > 1e-14)) {
      v.row(j) = random_row(rng, space.dim, space.field);
      nv = lp_norm(v.row(j), space.p);
    }
    v.row(j) /= nv;
    f.row(j) = norming_functional(v.row(j), space.p);
  }
}

double feasibility_dev(const Matrix& v, const Matrix& f, const LpSpace& space) {
  const double p = space.p;
  const double q = space.dual_exponent();
  double dev = 0.0;
  for (Eigen::Index j = 0; j < v.rows(); ++j) {
    dev = std::max(dev, std::abs(lp_norm(v.row(j), p) - 1.0));
    dev = std::max(dev, std::abs(lp_norm(f.row(j), q) - 1.0));
    const Complex c = (f.row(j).array() * v.row(j).array()).sum();
    dev = std::max(dev, std::abs(c - Complex(1.0, 0.0)));
  }
  return dev;
}

double true_objective(const Problem& pb, const Matrix& v, const Matrix& f, const Matrix& g) {
  switch (pb.kind) {
    case Objective::Correlation: {
      double corr = 0.0;
      for (Eigen::Index j = 0; j < g.rows(); ++j) {
        for (Eigen::Index k = 0; k < g.cols(); ++k) {
          if (j != k) corr = std::max(corr, std::abs(g(j, k)));
        }
      }
      return corr;
    }
    case Objective::Potential: {
      Complex sum{0.0, 0.0};
      for (Eigen::Index j = 0; j < g.rows(); ++j) {
        for (Eigen::Index k = 0; k < g.cols(); ++k) sum += g(j, k) * g(k, j);
      }
      return sum.real();
    }
    case Objective::Equiangular: {
      double res = 0.0;
      for (Eigen::Index j = 0; j < g.rows(); ++j) {
        for (Eigen::Index k = 0; k < g.cols(); ++k) {
          if (j == k) continue;
          const double dev = std::norm(g(j, k)) - pb.gamma_target;
          res += dev * dev;
        }
      }
      Matrix s = v.transpose() * f;
      s.diagonal().array() -= pb.lambda0;
      return res + s.squaredNorm();
    }
  }
  return 0.0;
}

double penalty_value(const Matrix& v, const Matrix& f, const Matrix& g, const LpSpace& space) {
  const double p = space.p;
  const double q = space.dual_exponent();
  double pen = 0.0;
  for (Eigen::Index j = 0; j < v.rows(); ++j) {
    const double rv = lp_norm(v.row(j), p) - 1.0;
    const double rf = lp_norm(f.row(j), q) - 1.0;
    pen += rv * rv + rf * rf + std::norm(g(j, j) - Complex(1.0, 0.0));
  }
  return pen;
}

// Wirtinger gradient of (||row||_p - 1)^2 accumulated into a strided row.
template <typename RowExpr>
void add_norm_penalty_grad(RowExpr grad, const Eigen::RowVectorXcd& row, double p,
                           double weight) {
  const double norm = lp_norm(row, p);
  if (!(norm > 1e-14)) return;
  const double resid = norm - 1.0;
  if (p == 2.0) {
    grad += (weight * resid / norm) * row;
    return;
  }
  const double scale = weight * resid * std::pow(norm, 1.0 - p);
  for (Eigen::Index i = 0; i < row.size(); ++i) {
    const double mag = std::abs(row(i));
    if (mag > 1e-300) grad(i) += scale * std::pow(mag, p - 2.0) * row(i);
  }
}

// Smoothed objective plus weighted constraint penalty; fills Wirtinger
// gradients with respect to conj(V) and conj(F) when requested.
double surrogate(const Problem& pb, double beta, double pen_w, const Matrix& v, const Matrix& f,
                 Matrix* grad_v, Matrix* grad_f) {
  const Matrix g = f * v.transpose();
  const Eigen::Index n = g.rows();
  if (grad_v) {
    grad_v->setZero(v.rows(), v.cols());
    grad_f->setZero(f.rows(), f.cols());
  }

  double value = 0.0;
  switch (pb.kind) {
    case Objective::Correlation: {
      double smax = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
          if (j != k) smax = std::max(smax, std::norm(g(j, k)));
        }
      }
      double z = 0.0;
      Matrix weights = Matrix::Zero(n, n);
      for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
          if (j == k) continue;
          const double e = std::exp(beta * (std::norm(g(j, k)) - smax));
          z += e;
          weights(j, k) = e;
        }
      }
      value = smax + std::log(z) / beta;
      if (grad_v) {
        const Matrix m = (weights / z).cwiseProduct(g);
        *grad_v += m.transpose() * f.conjugate();
        *grad_f += m * v.conjugate();
      }
      break;
    }
    case Objective::Potential: {
      Complex sum{0.0, 0.0};
      for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) sum += g(j, k) * g(k, j);
      }
      value = sum.real();
      if (grad_v) {
        *grad_v += (g * f).conjugate();
        *grad_f += (g.transpose() * v).conjugate();
      }
      break;
    }
    case Objective::Equiangular: {
      Matrix u = Matrix::Zero(n, n);
      for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
          if (j == k) continue;
          const double dev = std::norm(g(j, k)) - pb.gamma_target;
          value += dev * dev;
          u(j, k) = 2.0 * dev;
        }
      }
      Matrix s = v.transpose() * f;
      s.diagonal().array() -= pb.lambda0;
      value += s.squaredNorm();
      if (grad_v) {
        const Matrix ug = u.cwiseProduct(g);
        *grad_v += ug.transpose() * f.conjugate();
        *grad_f += ug * v.conjugate();
        *grad_v += f.conjugate() * s.transpose();
        *grad_f += v.conjugate() * s;
      }
      break;
    }
  }

  if (pen_w > 0.0) {
    value += pen_w * penalty_value(v, f, g, pb.space);
    if (grad_v) {
      const double q = pb.space.dual_exponent();
      for (Eigen::Index j = 0; j < v.rows(); ++j) {
        add_norm_penalty_grad(grad_v->row(j), v.row(j), pb.space.p, pen_w);
        add_norm_penalty_grad(grad_f->row(j), f.row(j), q, pen_w);
        const Complex h = g(j, j) - Complex(1.0, 0.0);
        grad_v->row(j) += pen_w * h * f.row(j).conjugate();
        grad_f->row(j) += pen_w * h * v.row(j).conjugate();
      }
    }
  }
  return value;
}

struct RestartOutcome {
  Matrix v, f;
  double objective = std::numeric_limits<double>::infinity();
  double feas = std::numeric_limits<double>::infinity();
  std::size_t iters = 0;
  bool plateau = false;
  bool has_feasible_snapshot = false;
};

RestartOutcome run_restart(const Problem& pb, const SearchConfig& cfg, std::size_t idx) {
  std::mt19937_64 rng(mix_seed(cfg.seed, idx));
  const std::size_t d = pb.space.dim;
  const bool smooth = !std::isinf(pb.space.p) && pb.space.p > 1.0;

  Matrix v(pb.n, d), f(pb.n, d);
  for (std::size_t j = 0; j < pb.n; ++j) {
    Eigen::RowVectorXcd row = random_row(rng, d, pb.space.field);
    row /= lp_norm(row, pb.space.p);
    v.row(j) = row;
    f.row(j) = norming_functional(row, pb.space.p);
  }

  RestartOutcome out;
  Matrix grad_v, grad_f;
  double best_true = std::numeric_limits<double>::infinity();
  std::size_t last_improve = 0;
  std::size_t total_iter = 0;

  // Snapshots are taken only on the exactly feasible manifold (polish
  // phase); penalized phase-1 iterates can undercut the true constrained
  // objective by the size of their feasibility slack.
  const auto observe = [&](bool snapshot_allowed) {
    const Matrix g = f * v.transpose();
    const double obj = true_objective(pb, v, f, g);
    const double feas = feasibility_dev(v, f, pb.space);
    if (snapshot_allowed && feas <= kFeasibleTol && obj < out.objective) {
      out.v = v;
      out.f = f;
      out.objective = obj;
      out.feas = feas;
      out.has_feasible_snapshot = true;
    }
    if (obj < best_true - cfg.tol) {
      best_true = obj;
      last_improve = total_iter;
    }
    if (cfg.on_iterate) {
      DualPair snapshot(pb.space, v, f);
      cfg.on_iterate(IterateInfo{idx, total_iter, obj, feas, snapshot});
    }
  };
  observe(false);

  std::uniform_int_distribution<std::size_t> pick_col(0, d - 1);
  std::normal_distribution<double> gauss;

  const auto gradient_step = [&](double& phi, double& step, double beta, double pen,
                                 bool norming_phase) {
    surrogate(pb, beta, pen, v, f, &grad_v, &grad_f);
    Matrix step_v;
    Matrix step_f;
    if (norming_phase && pb.space.p == 2.0) {
      // Total derivative through f = conj(tau).
      step_v = grad_v + grad_f.conjugate();
      step_f.setZero(f.rows(), f.cols());
    } else if (norming_phase) {
      step_v = grad_v;
      step_f.setZero(f.rows(), f.cols());
    } else {
      step_v = grad_v;
      step_f = grad_f;
    }
    const double gnorm = std::sqrt(step_v.squaredNorm() + step_f.squaredNorm());
    if (!(gnorm > 0.0)) return;
    const double scale = step / std::max(1.0, gnorm);
    Matrix vc = v - scale * step_v;
    Matrix fc = f - scale * step_f;
    if (norming_phase) {
      project_norming(vc, fc, pb.space, rng);
    } else {
      project_rows(vc, fc, pb.space, rng);
    }
    const double phic = surrogate(pb, beta, pen, vc, fc, nullptr, nullptr);
    if (phic <= phi) {
      v.swap(vc);
      f.swap(fc);
      phi = phic;
      step = std::min(step / cfg.step_decay, 10.0 * cfg.step_init);
    } else {
      step = std::max(step * cfg.step_decay * cfg.step_decay * cfg.step_decay, 1e-14);
    }
  };

  // Coordinate sweep for non-smooth exponents: one trial move per row.
  const auto coordinate_sweep = [&](double& phi, double& step, double beta, double pen,
                                    bool norming_phase) {
    for (std::size_t j = 0; j < pb.n; ++j) {
      Matrix vc = v;
      Matrix fc = f;
      const std::size_t i = pick_col(rng);
      const Complex delta = pb.space.field == Field::Complex
                                ? Complex(gauss(rng), gauss(rng)) * step
                                : Complex(gauss(rng), 0.0) * step;
      const bool move_f = !norming_phase && (rng() & 1u);
      if (move_f) {
        fc(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += delta;
      } else {
        vc(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += delta;
      }
      if (norming_phase) {
        project_norming(vc, fc, pb.space, rng);
      } else {
        project_rows(vc, fc, pb.space, rng);
      }
      const double phic = surrogate(pb, beta, pen, vc, fc, nullptr, nullptr);
      if (phic <= phi) {
        v.swap(vc);
        f.swap(fc);
        phi = phic;
        step = std::min(step / cfg.step_decay, 10.0 * cfg.step_init);
      } else {
        step = std::max(step * cfg.step_decay, 1e-14);
      }
    }
  };

  // Phase 1: joint (tau, f) penalized descent with the row projection.
  {
    double beta = kBetaInit;
    double pen = cfg.penalty_weight;
    double step = cfg.step_init;
    double phi = surrogate(pb, beta, pen, v, f, nullptr, nullptr);
    for (std::size_t iter = 1; iter <= cfg.max_iters; ++iter) {
      bool params_changed = false;
      if (iter % 500 == 0 && pen < kPenaltyCap) {
        pen = std::min(pen * 2.0, kPenaltyCap);
        params_changed = true;
      }
      if (pb.kind == Objective::Correlation && iter % 250 == 0 && beta < kBetaCap) {
        beta = std::min(beta * 2.0, kBetaCap);
        params_changed = true;
      }
      if (params_changed) {
        phi = surrogate(pb, beta, pen, v, f, nullptr, nullptr);
        last_improve = total_iter;  // annealing counts as activity
      }
      ++total_iter;
      if (smooth) {
        gradient_step(phi, step, beta, pen, false);
      } else {
        coordinate_sweep(phi, step, beta, pen, false);
      }
      observe(false);
      out.iters = total_iter;
      if (total_iter >= last_improve + kPlateauWindow) break;
    }
  }

  // Phase 2: exactly feasible polish, f pinned to the norming functional of
  // tau. Constraints hold to rounding error, so the penalty is dropped.
  {
    project_norming(v, f, pb.space, rng);
    double beta = kBetaCap;
    double step = cfg.step_init;
    double phi = surrogate(pb, beta, 0.0, v, f, nullptr, nullptr);
    best_true = std::numeric_limits<double>::infinity();
    last_improve = total_iter;
    observe(true);
    const std::size_t polish_iters = std::max<std::size_t>(cfg.max_iters / 2, 500);
    for (std::size_t iter = 1; iter <= polish_iters; ++iter) {
      ++total_iter;
      if (smooth) {
        gradient_step(phi, step, beta, 0.0, true);
      } else {
        coordinate_sweep(phi, step, beta, 0.0, true);
      }
      observe(true);
      out.iters = total_iter;
      if (total_iter >= last_improve + kPlateauWindow) {
        out.plateau = true;
        break;
      }
    }
    if (!out.plateau && total_iter >= last_improve + kPlateauWindow) out.plateau = true;
  }

  if (!out.has_feasible_snapshot) {
    const Matrix g = f * v.transpose();
    out.v = v;
    out.f = f;
    out.objective = true_objective(pb, v, f, g);
    out.feas = feasibility_dev(v, f, pb.space);
  }
  return out;
}

SearchResult run_search(const Problem& pb, const SearchConfig& cfg) {
  cfg.validate();
  std::vector<RestartOutcome> outcomes(cfg.restarts);

  std::size_t workers = std::max<std::size_t>(cfg.workers, 1);
  workers = std::min(workers, cfg.restarts);
  if (cfg.on_iterate) workers = 1;
  if (workers <= 1) {
    for (std::size_t idx = 0; idx < cfg.restarts; ++idx) {
      outcomes[idx] = run_restart(pb, cfg, idx);
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t]() {
        for (std::size_t idx = t; idx < cfg.restarts; idx += workers) {
          outcomes[idx] = run_restart(pb, cfg, idx);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // Best-of: feasible outcomes first, then objective, then feasibility,
  // then restart index (all deterministic).
  std::size_t best = 0;
  for (std::size_t idx = 1; idx < cfg.restarts; ++idx) {
    const auto& a = outcomes[idx];
    const auto& b = outcomes[best];
    const bool a_feas = a.feas <= kFeasibleTol;
    const bool b_feas = b.feas <= kFeasibleTol;
    if (a_feas != b_feas) {
      if (a_feas) best = idx;
      continue;
    }
    if (a.objective < b.objective || (a.objective == b.objective && a.feas < b.feas)) {
      best = idx;
    }
  }

  const RestartOutcome& chosen = outcomes[best];
  DualPair pair(pb.space, chosen.v, chosen.f);
  const NormalizationReport feas = normalization_report(pair);
  SearchResult result{std::move(pair),
                      chosen.objective,
                      nan_value(),
                      feas,
                      chosen.iters,
                      chosen.plateau && chosen.feas <= kFeasibleTol,
                      nan_value(),
                      nan_value()};

  if (pb.kind == Objective::Correlation && pb.n >= 2) {
    const double rhs = welch_rhs(pb.n, pb.space.dim, 1);
    if (rhs > 0.0) result.welch_gap = result.objective_value - std::sqrt(rhs);
  } else if (pb.kind == Objective::Potential) {
    const double floor =
        static_cast<double>(pb.n) * static_cast<double>(pb.n) / static_cast<double>(pb.space.dim);
    result.welch_gap = result.objective_value - floor;
  } else if (pb.kind == Objective::Equiangular) {
    const EtfResidual res = etf_residual(result.pair, pb.gamma_target);
    result.equiangular_max_dev = res.max_dev;
    result.tightness_residual = res.tightness_residual;
  }
  return result;
}

}  // namespace

void SearchConfig::validate() const {
  if (restarts < 1 || max_iters < 1) {
    throw ValidationError("SearchConfig: restarts and max_iters must be >= 1");
  }
  if (!(step_init > 0) || !(penalty_weight > 0) || !(tol > 0)) {
    throw ValidationError("SearchConfig: step_init, penalty_weight and tol must be > 0");
  }
  if (!(step_decay > 0.0) || !(step_decay < 1.0)) {
    throw ValidationError("SearchConfig: step_decay must lie in (0, 1)");
  }
}

double frame_correlation(const DualPair& pair) {
  if (pair.size() < 2) throw TooFewVectorsError("frame_correlation: requires n >= 2");
  const Matrix g = gram(pair);
  double corr = 0.0;
  for (Eigen::Index j = 0; j < g.rows(); ++j) {
    for (Eigen::Index k = 0; k < g.cols(); ++k) {
      if (j != k) corr = std::max(corr, std::abs(g(j, k)));
    }
  }
  return corr;
}

double rms_cross(const DualPair& pair, double norm_tol) {
  const std::size_t n = pair.size();
  if (n < 2) throw TooFewVectorsError("rms_cross: requires n >= 2");
  if (normalization_report(pair).max_pairing_dev > norm_tol) {
    throw NotNormalizedError("rms_cross: requires f_j(tau_j) = 1");
  }
  const Matrix g = gram(pair);
  Complex cross{0.0, 0.0};
  for (Eigen::Index j = 0; j < g.rows(); ++j) {
    for (Eigen::Index k = 0; k < g.cols(); ++k) {
      if (j != k) cross += g(j, k) * g(k, j);
    }
  }
  double radicand = cross.real() / (static_cast<double>(n) * static_cast<double>(n - 1));
  if (radicand < 0.0) {
    if (radicand < -1e-10) {
      throw NegativeRadicandError("rms_cross: cross sum is negative (hypothesis failure)");
    }
    radicand = 0.0;
  }
  return std::sqrt(radicand);
}

double pseudo_frame_potential(const DualPair& pair, double norm_tol) {
  if (normalization_report(pair).max_pairing_dev > norm_tol) {
    throw NotNormalizedError("pseudo_frame_potential: requires f_j(tau_j) = 1");
  }
  return trace_S2(pair).real();
}

Equiangularity equiangularity(const DualPair& pair, double tol) {
  const std::size_t n = pair.size();
  if (n < 2) throw TooFewVectorsError("equiangularity: requires n >= 2");
  const Matrix g = gram(pair);
  double sum = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (Eigen::Index j = 0; j < g.rows(); ++j) {
    for (Eigen::Index k = 0; k < g.cols(); ++k) {
      if (j == k) continue;
      const double sq = std::norm(g(j, k));
      sum += sq;
      lo = std::min(lo, sq);
      hi = std::max(hi, sq);
    }
  }
  Equiangularity out;
  out.gamma = sum / (static_cast<double>(n) * static_cast<double>(n - 1));
  out.max_dev = std::max(hi - out.gamma, out.gamma - lo);
  out.flag = out.max_dev <= tol;
  return out;
}

EtfResidual etf_residual(const DualPair& pair, double gamma_sq_target) {
  const Matrix g = gram(pair);
  EtfResidual res;
  for (Eigen::Index j = 0; j < g.rows(); ++j) {
    for (Eigen::Index k = 0; k < g.cols(); ++k) {
      if (j == k) continue;
      const double dev = std::norm(g(j, k)) - gamma_sq_target;
      res.equiangular_residual += dev * dev;
      res.max_dev = std::max(res.max_dev, std::abs(dev));
    }
  }
  Matrix s = frame_operator(pair);
  s.diagonal().array() -= static_cast<double>(pair.size()) / static_cast<double>(pair.dim());
  res.tightness_residual = s.squaredNorm();
  res.objective = res.equiangular_residual + res.tightness_residual;
  return res;
}

SearchResult grassmannian_search(const LpSpace& space, std::size_t n, const SearchConfig& cfg) {
  space.validate();
  if (n < 2) throw TooFewVectorsError("grassmannian_search: requires n >= 2");
  Problem pb{space, n, Objective::Correlation, 0.0, 0.0};
  return run_search(pb, cfg);
}

SearchResult etf_search(std::size_t d, const SearchConfig& cfg) {
  if (d < 2) throw ValidationError("etf_search: requires d >= 2");
  const LpSpace space{d, 2.0, Field::Complex};
  const std::size_t n = d * d;
  const double target =
      cfg.equiangular_target > 0.0 ? cfg.equiangular_target : 1.0 / (static_cast<double>(d) + 1.0);
  Problem pb{space, n, Objective::Equiangular, target,
             static_cast<double>(n) / static_cast<double>(d)};
  SearchResult result = run_search(pb, cfg);
  result.objective_value = etf_residual(result.pair, target).objective;
  return result;
}

SearchResult potential_minimize(const LpSpace& space, std::size_t n, const SearchConfig& cfg) {
  space.validate();
  if (n < space.dim) throw DegenerateCountError("potential_minimize: requires n >= d");
  Problem pb{space, n, Objective::Potential, 0.0, 0.0};
  return run_search(pb, cfg);
}

}  // namespace welch
