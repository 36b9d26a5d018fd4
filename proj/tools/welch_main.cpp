#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "welch/io.hpp"

namespace {

using namespace welch;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitInput = 3;
constexpr int kExitNotConverged = 4;

struct TolFlags {
  double eig_imag = 1e-9;
  double nonneg = 1e-9;
  double rank = 1e-10;
  double diag_cond = 1e8;
  double equality = 1e-8;

  CheckOptions check_options() const {
    CheckOptions opts;
    opts.tol = ToleranceConfig{eig_imag, nonneg, rank, diag_cond};
    opts.equality_tol = equality;
    return opts;
  }
};

void add_tol_flags(CLI::App* cmd, TolFlags& tol) {
  cmd->add_option("--tol-eig-imag", tol.eig_imag, "eigenvalue imaginary-part tolerance");
  cmd->add_option("--tol-nonneg", tol.nonneg, "eigenvalue non-negativity tolerance");
  cmd->add_option("--tol-rank", tol.rank, "numerical rank tolerance");
  cmd->add_option("--tol-diag-cond", tol.diag_cond, "diagonalizability condition ceiling");
  cmd->add_option("--tol-equality", tol.equality, "equality detection tolerance");
}

std::size_t workers_from_env() {
  const char* env = std::getenv("WELCH_THREADS");
  if (!env) return 1;
  const long parsed = std::strtol(env, nullptr, 10);
  return parsed >= 1 ? static_cast<std::size_t>(parsed) : 1;
}

bool is_hilbert_pair(const DualPair& pair) {
  if (pair.space().p != 2.0) return false;
  const NormalizationReport nr = normalization_report(pair);
  if (nr.max_vec_norm_dev > 1e-9) return false;
  return (pair.functionals() - pair.vectors().conjugate()).cwiseAbs().maxCoeff() <= 1e-9;
}

io::PairMetrics compute_metrics(const DualPair& pair) {
  io::PairMetrics metrics;
  if (pair.size() < 2) {
    metrics.note = "requires at least two vectors";
    return metrics;
  }
  metrics.correlation = frame_correlation(pair);
  metrics.equiangular = equiangularity(pair, 1e-8);
  if (normalization_report(pair).max_pairing_dev > 1e-6) {
    metrics.note = "rms/pfp require f_j(tau_j) = 1";
    return metrics;
  }
  metrics.rms = rms_cross(pair);
  metrics.pfp = pseudo_frame_potential(pair);
  metrics.available = true;
  return metrics;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    io::write_file(out_path, text);
  }
}

int run_gram(const std::string& input, const std::string& out) {
  const DualPair pair = io::load_pair(input);
  emit(io::matrix_to_csv(gram(pair)), out);
  return kExitOk;
}

int run_report(const std::string& input, const std::vector<unsigned>& orders,
               const std::vector<double>& p_list, const std::vector<double>& r_list,
               const std::string& json_out, const TolFlags& tol) {
  const DualPair pair = io::load_pair(input);
  ReportOptions opts;
  if (!orders.empty()) opts.orders = orders;
  opts.p_list = p_list;
  if (!r_list.empty()) opts.r_list = r_list;
  opts.check = tol.check_options();
  const BoundReport report = full_report(pair, opts);

  std::vector<ClassicalBound> classical;
  if (pair.size() >= 2) {
    classical = classical_bounds(pair.size(), pair.dim(), pair.space().field);
    if (!is_hilbert_pair(pair)) {
      for (auto& b : classical) {
        b.note = b.note.empty() ? "Hilbert reference" : b.note + "; Hilbert reference";
      }
    }
  }
  const io::PairMetrics metrics = compute_metrics(pair);

  std::cout << io::report_to_table(report, classical, &metrics);
  if (!json_out.empty()) {
    io::write_file(json_out, io::report_to_json(report, classical, &metrics));
  }
  return report.any_asserted_violation() ? kExitViolation : kExitOk;
}

int run_lift(const std::string& input, unsigned m, bool explicit_check, const std::string& out) {
  const DualPair pair = io::load_pair(input);
  const Matrix lifted = lifted_gram(gram(pair), m);
  emit(io::matrix_to_csv(lifted), out);
  if (explicit_check) {
    const Matrix direct = gram(explicit_lift(pair, m));
    const double scale = std::max(1.0, lifted.cwiseAbs().maxCoeff());
    const double dev = (direct - lifted).cwiseAbs().maxCoeff() / scale;
    std::cerr << "explicit-lift cross-check: max relative deviation " << io::fmt17(dev) << "\n";
    if (dev > 1e-8) {
      std::cerr << "explicit-lift cross-check FAILED\n";
      return kExitViolation;
    }
  }
  return kExitOk;
}

int run_continuous(const std::string& input, const std::vector<unsigned>& orders,
                   const std::vector<double>& p_list, const std::vector<double>& r_list,
                   const std::string& json_out, const TolFlags& tol) {
  const ContinuousASF casf = io::load_casf(input);
  const CheckOptions opts = tol.check_options();
  std::vector<BoundRecord> records;
  const std::vector<unsigned> use_orders = orders.empty() ? std::vector<unsigned>{1} : orders;
  for (unsigned m : use_orders) {
    for (auto& rec : cont_welch_check(casf, m, opts)) records.push_back(std::move(rec));
  }
  for (double r : r_list) {
    try {
      records.push_back(cont_trace_power_check(casf, r, opts));
    } catch (const NegativeSpectrumError& err) {
      BoundRecord rec;
      rec.name = "cont_trace_power_r" + std::to_string(r);
      rec.holds = true;
      rec.hypothesis_ok = false;
      rec.notes = std::string("not evaluated: ") + err.what();
      records.push_back(std::move(rec));
    }
  }
  for (double p : p_list) {
    try {
      records.push_back(cont_p_check(casf, p, opts));
    } catch (const Error& err) {
      BoundRecord rec;
      rec.name = "cont_p_p" + std::to_string(p);
      rec.holds = true;
      rec.hypothesis_ok = false;
      rec.notes = std::string("not evaluated: ") + err.what();
      records.push_back(std::move(rec));
    }
  }
  std::cout << "measure: atoms=" << casf.atom_count()
            << " total=" << io::fmt17(casf.measure.total_mass())
            << " diag=" << io::fmt17(casf.measure.diag_mass())
            << " offdiag=" << io::fmt17(casf.measure.offdiag_mass()) << "\n\n";
  std::cout << io::records_to_table(records);
  if (!json_out.empty()) io::write_file(json_out, io::records_to_json(records) + "\n");
  for (const auto& rec : records) {
    if (rec.hypothesis_ok && !rec.holds) return kExitViolation;
  }
  return kExitOk;
}

int run_search(const std::string& mode, std::size_t dim, std::size_t count, double p,
               const std::string& field_name, SearchConfig cfg, const std::string& out) {
  Field field;
  if (field_name == "real") {
    field = Field::Real;
  } else if (field_name == "complex") {
    field = Field::Complex;
  } else {
    throw ValidationError("--field must be real or complex");
  }
  const LpSpace space{dim, p, field};

  SearchResult result = [&]() {
    if (mode == "grassmannian") return grassmannian_search(space, count, cfg);
    if (mode == "potential") return potential_minimize(space, count, cfg);
    if (mode == "etf") return etf_search(dim, cfg);
    throw ValidationError("--mode must be grassmannian, etf or potential");
  }();

  std::cout << "mode:        " << mode << "\n";
  std::cout << "objective:   " << io::fmt17(result.objective_value) << "\n";
  if (std::isfinite(result.welch_gap)) {
    std::cout << "welch gap:   " << io::fmt17(result.welch_gap) << "\n";
  }
  if (std::isfinite(result.equiangular_max_dev)) {
    std::cout << "equi maxdev: " << io::fmt17(result.equiangular_max_dev) << "\n";
    std::cout << "tight resid: " << io::fmt17(result.tightness_residual) << "\n";
  }
  std::cout << "feasibility: " << io::fmt17(result.feasibility.max_dev()) << "\n";
  std::cout << "iterations:  " << result.iters_used << "\n";
  std::cout << "converged:   " << (result.converged ? "yes" : "no") << "\n";
  if (!out.empty()) io::write_file(out, io::result_to_json(result, mode, cfg.seed));
  return result.converged ? kExitOk : kExitNotConverged;
}

int run_metrics(const std::string& input) {
  const DualPair pair = io::load_pair(input);
  const io::PairMetrics metrics = compute_metrics(pair);
  if (pair.size() >= 2) {
    std::cout << "correlation  " << io::fmt17(metrics.correlation) << "\n";
    std::cout << "equiangular  " << (metrics.equiangular.flag ? "yes" : "no")
              << " gamma=" << io::fmt17(metrics.equiangular.gamma)
              << " max_dev=" << io::fmt17(metrics.equiangular.max_dev) << "\n";
  }
  if (metrics.available) {
    std::cout << "rms_cross    " << io::fmt17(metrics.rms) << "\n";
    std::cout << "pfp          " << io::fmt17(metrics.pfp) << "\n";
  } else {
    std::cout << "rms_cross    n/a (" << metrics.note << ")\n";
    std::cout << "pfp          n/a (" << metrics.note << ")\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Welch-bound toolkit for dual vector/functional families"};
  app.require_subcommand(1);

  TolFlags tol;

  auto* gram_cmd = app.add_subcommand("gram", "print or save the Gram matrix as CSV");
  std::string gram_input, gram_out;
  gram_cmd->add_option("--input", gram_input, "pair JSON file")->required();
  gram_cmd->add_option("--out", gram_out, "output CSV path (default stdout)");

  auto* report_cmd = app.add_subcommand("report", "run every bound check and print a table");
  std::string report_input, report_json;
  std::vector<unsigned> report_orders;
  std::vector<double> report_p, report_r;
  report_cmd->add_option("--input", report_input, "pair JSON file")->required();
  report_cmd->add_option("--orders", report_orders, "tensor orders m (default 1)")
      ->delimiter(',');
  report_cmd->add_option("--p", report_p, "p-sum exponents, each in (2, inf)")->delimiter(',');
  report_cmd->add_option("--r", report_r, "trace-power exponents (default 0.5,1,2)")
      ->delimiter(',');
  report_cmd->add_option("--json", report_json, "write the full report as JSON");
  add_tol_flags(report_cmd, tol);

  auto* lift_cmd = app.add_subcommand("lift", "emit the order-m lifted Gram matrix");
  std::string lift_input, lift_out;
  unsigned lift_m = 2;
  bool lift_explicit = false;
  lift_cmd->add_option("--input", lift_input, "pair JSON file")->required();
  lift_cmd->add_option("--m", lift_m, "tensor order")->required();
  lift_cmd->add_flag("--explicit", lift_explicit, "cross-check against the explicit lift");
  lift_cmd->add_option("--out", lift_out, "output CSV path (default stdout)");

  auto* cont_cmd = app.add_subcommand("continuous", "run weighted (atomic-measure) checks");
  std::string cont_input, cont_json;
  std::vector<unsigned> cont_orders;
  std::vector<double> cont_p, cont_r;
  cont_cmd->add_option("--input", cont_input, "continuous ASF JSON file")->required();
  cont_cmd->add_option("--orders", cont_orders, "tensor orders m (default 1)")->delimiter(',');
  cont_cmd->add_option("--p", cont_p, "p-power exponents, each in (2, inf)")->delimiter(',');
  cont_cmd->add_option("--r", cont_r, "trace-power exponents")->delimiter(',');
  cont_cmd->add_option("--json", cont_json, "write records as JSON");
  add_tol_flags(cont_cmd, tol);

  auto* search_cmd = app.add_subcommand("search", "search for extremal families");
  std::string search_mode, search_field = "complex", search_out;
  std::size_t search_dim = 2, search_count = 0;
  double search_p = 2.0;
  SearchConfig cfg;
  search_cmd->add_option("--mode", search_mode, "grassmannian | etf | potential")->required();
  search_cmd->add_option("--dim", search_dim, "ambient dimension d")->required();
  search_cmd->add_option("--count", search_count, "family size n (ignored for etf)");
  search_cmd->add_option("--p", search_p, "norm exponent (default 2)");
  search_cmd->add_option("--field", search_field, "real | complex (default complex)");
  search_cmd->add_option("--seed", cfg.seed, "deterministic seed");
  search_cmd->add_option("--restarts", cfg.restarts, "random restarts (default 32)");
  search_cmd->add_option("--iters", cfg.max_iters, "iterations per restart (default 5000)");
  search_cmd->add_option("--out", search_out, "write the result (pair + metadata) as JSON");

  auto* metrics_cmd =
      app.add_subcommand("metrics", "print correlation, rms, pfp, equiangularity");
  std::string metrics_input;
  metrics_cmd->add_option("--input", metrics_input, "pair JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (gram_cmd->parsed()) return run_gram(gram_input, gram_out);
    if (report_cmd->parsed()) {
      return run_report(report_input, report_orders, report_p, report_r, report_json, tol);
    }
    if (lift_cmd->parsed()) return run_lift(lift_input, lift_m, lift_explicit, lift_out);
    if (cont_cmd->parsed()) {
      return run_continuous(cont_input, cont_orders, cont_p, cont_r, cont_json, tol);
    }
    if (search_cmd->parsed()) {
      cfg.workers = workers_from_env();
      if (search_mode != "etf" && search_count == 0) {
        throw ValidationError("--count is required for this mode");
      }
      return run_search(search_mode, search_dim, search_count, search_p, search_field, cfg,
                        search_out);
    }
    if (metrics_cmd->parsed()) return run_metrics(metrics_input);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
