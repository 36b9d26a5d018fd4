#include "welch/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace welch::io {

namespace {

using nlohmann::json;

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// Number or null (JSON has no NaN/Inf).
std::string json_num(double v) {
  if (!std::isfinite(v)) return "null";
  return fmt17(v);
}

std::string json_bool(bool b) { return b ? "true" : "false"; }

std::string scalar_repr(const Complex& s, Field field) {
  if (field == Field::Real) return fmt17(s.real());
  return "[" + fmt17(s.real()) + ", " + fmt17(s.imag()) + "]";
}

std::string row_repr(const Eigen::RowVectorXcd& row, Field field) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += scalar_repr(row(i), field);
  }
  out += "]";
  return out;
}

std::string matrix_repr(const Matrix& m, Field field, const std::string& indent) {
  std::string out = "[\n";
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    out += indent + "  " + row_repr(m.row(j), field);
    out += (j + 1 < m.rows()) ? ",\n" : "\n";
  }
  out += indent + "]";
  return out;
}

Complex parse_scalar(const json& v) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return Complex(v[0].get<double>(), v[1].get<double>());
  }
  throw ValidationError("scalar must be a number or a [re, im] pair");
}

Matrix parse_matrix(const json& rows, std::size_t dim, const std::string& what) {
  if (!rows.is_array() || rows.empty()) {
    throw ValidationError(what + " must be a non-empty array of rows");
  }
  Matrix m(rows.size(), dim);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const json& row = rows[j];
    if (!row.is_array() || row.size() != dim) {
      throw ValidationError(what + ": row " + std::to_string(j) + " must have " +
                            std::to_string(dim) + " entries");
    }
    for (std::size_t i = 0; i < dim; ++i) {
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = parse_scalar(row[i]);
    }
  }
  return m;
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ValidationError("invalid JSON input");
  return j;
}

DualPair pair_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("pair JSON must be an object");
  if (!j.contains("field") || !j["field"].is_string()) {
    throw ValidationError("pair JSON: \"field\" must be \"real\" or \"complex\"");
  }
  const std::string field_s = j["field"].get<std::string>();
  Field field;
  if (field_s == "real") {
    field = Field::Real;
  } else if (field_s == "complex") {
    field = Field::Complex;
  } else {
    throw ValidationError("pair JSON: unknown field \"" + field_s + "\"");
  }
  if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() < 1) {
    throw ValidationError("pair JSON: \"dim\" must be a positive integer");
  }
  const std::size_t dim = j["dim"].get<std::size_t>();
  if (!j.contains("p")) throw ValidationError("pair JSON: missing \"p\"");
  double p;
  if (j["p"].is_string()) {
    if (j["p"].get<std::string>() != "inf") {
      throw ValidationError("pair JSON: \"p\" must be a number or \"inf\"");
    }
    p = std::numeric_limits<double>::infinity();
  } else if (j["p"].is_number()) {
    p = j["p"].get<double>();
  } else {
    throw ValidationError("pair JSON: \"p\" must be a number or \"inf\"");
  }
  if (!j.contains("vectors") || !j.contains("functionals")) {
    throw ValidationError("pair JSON: missing \"vectors\" or \"functionals\"");
  }
  Matrix vectors = parse_matrix(j["vectors"], dim, "vectors");
  Matrix functionals = parse_matrix(j["functionals"], dim, "functionals");
  if (vectors.rows() != functionals.rows()) {
    throw ValidationError("pair JSON: vectors and functionals row counts differ");
  }
  return DualPair(LpSpace{dim, p, field}, std::move(vectors), std::move(functionals));
}

FiniteMeasure measure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j.contains("weights") ||
      !j["atoms"].is_array() || !j["weights"].is_array()) {
    throw ValidationError("measure JSON must hold \"atoms\" and \"weights\" arrays");
  }
  FiniteMeasure measure;
  for (const auto& atom : j["atoms"]) {
    if (!atom.is_string()) throw ValidationError("measure JSON: atoms must be strings");
    measure.atoms.push_back(atom.get<std::string>());
  }
  const auto& weights = j["weights"];
  measure.weights.resize(static_cast<Eigen::Index>(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!weights[i].is_number()) throw ValidationError("measure JSON: weights must be numbers");
    measure.weights(static_cast<Eigen::Index>(i)) = weights[i].get<double>();
  }
  measure.validate();
  return measure;
}

std::string record_json(const BoundRecord& rec, const std::string& indent) {
  std::ostringstream os;
  os << indent << "{\"equality\": " << json_bool(rec.equality)
     << ", \"holds\": " << json_bool(rec.holds)
     << ", \"hypothesis_ok\": " << json_bool(rec.hypothesis_ok)
     << ", \"lhs\": " << json_num(rec.lhs) << ", \"name\": \"" << json_escape(rec.name)
     << "\", \"notes\": \"" << json_escape(rec.notes) << "\", \"rhs\": " << json_num(rec.rhs)
     << ", \"slack\": " << json_num(rec.slack) << "}";
  return os.str();
}

std::string fmt6(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string fmt17(double v) {
  if (v == 0.0) return "0";  // normalize the sign of zero
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

DualPair parse_pair(const std::string& text) { return pair_from_json(parse_json(text)); }

DualPair load_pair(const std::string& path) { return parse_pair(read_file(path)); }

std::string pair_to_json(const DualPair& pair) {
  const Field field = pair.space().field;
  std::ostringstream os;
  os << "{\n";
  os << "  \"dim\": " << pair.dim() << ",\n";
  os << "  \"field\": \"" << (field == Field::Real ? "real" : "complex") << "\",\n";
  os << "  \"functionals\": " << matrix_repr(pair.functionals(), field, "  ") << ",\n";
  os << "  \"p\": "
     << (std::isinf(pair.space().p) ? std::string("\"inf\"") : fmt17(pair.space().p)) << ",\n";
  os << "  \"vectors\": " << matrix_repr(pair.vectors(), field, "  ") << "\n";
  os << "}\n";
  return os.str();
}

void save_pair(const DualPair& pair, const std::string& path) {
  write_file(path, pair_to_json(pair));
}

FiniteMeasure parse_measure(const std::string& text) {
  return measure_from_json(parse_json(text));
}

std::string measure_to_json(const FiniteMeasure& measure) {
  std::ostringstream os;
  os << "{\n  \"atoms\": [";
  for (std::size_t i = 0; i < measure.atoms.size(); ++i) {
    if (i) os << ", ";
    os << "\"" << json_escape(measure.atoms[i]) << "\"";
  }
  os << "],\n  \"weights\": [";
  for (Eigen::Index i = 0; i < measure.weights.size(); ++i) {
    if (i) os << ", ";
    os << fmt17(measure.weights(i));
  }
  os << "]\n}\n";
  return os.str();
}

ContinuousASF parse_casf(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("measure") || !j.contains("pair")) {
    throw ValidationError("continuous ASF JSON must hold \"measure\" and \"pair\"");
  }
  ContinuousASF casf{measure_from_json(j["measure"]), pair_from_json(j["pair"])};
  casf.validate();
  return casf;
}

ContinuousASF load_casf(const std::string& path) { return parse_casf(read_file(path)); }

std::string casf_to_json(const ContinuousASF& casf) {
  std::string measure = measure_to_json(casf.measure);
  std::string pair = pair_to_json(casf.pair);
  // Indent the embedded documents by two spaces.
  const auto indent = [](std::string text) {
    std::string out;
    std::istringstream is(text);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
      if (!first) out += "\n  ";
      out += line;
      first = false;
    }
    return out;
  };
  std::ostringstream os;
  os << "{\n  \"measure\": " << indent(measure) << ",\n  \"pair\": " << indent(pair) << "\n}\n";
  return os.str();
}

void save_casf(const ContinuousASF& casf, const std::string& path) {
  write_file(path, casf_to_json(casf));
}

std::string matrix_to_csv(const Matrix& m) {
  std::ostringstream os;
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (k) os << ",";
      const double re = m(j, k).real();
      const double im = m(j, k).imag();
      os << fmt17(re) << (im < 0 || std::signbit(im) ? "-" : "+") << fmt17(std::abs(im)) << "j";
    }
    os << "\n";
  }
  return os.str();
}

std::string records_to_json(const std::vector<BoundRecord>& records) {
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    os << record_json(records[i], "  ");
    os << (i + 1 < records.size() ? ",\n" : "\n");
  }
  os << "]";
  return os.str();
}

std::string records_to_table(const std::vector<BoundRecord>& records) {
  std::size_t name_w = 4;
  for (const auto& rec : records) name_w = std::max(name_w, rec.name.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_w)) << "name" << "  " << std::setw(13)
     << "lhs" << std::setw(13) << "rhs" << std::setw(13) << "slack" << std::setw(7) << "holds"
     << std::setw(7) << "equal" << std::setw(5) << "hyp" << "notes\n";
  for (const auto& rec : records) {
    os << std::left << std::setw(static_cast<int>(name_w)) << rec.name << "  " << std::setw(13)
       << fmt6(rec.lhs) << std::setw(13) << fmt6(rec.rhs) << std::setw(13) << fmt6(rec.slack)
       << std::setw(7) << (rec.holds ? "yes" : "NO") << std::setw(7)
       << (rec.equality ? "yes" : "no") << std::setw(5) << (rec.hypothesis_ok ? "ok" : "FAIL")
       << rec.notes << "\n";
  }
  return os.str();
}

std::string report_to_json(const BoundReport& report,
                           const std::vector<ClassicalBound>& classical,
                           const PairMetrics* metrics) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"classical\": [\n";
  for (std::size_t i = 0; i < classical.size(); ++i) {
    const auto& b = classical[i];
    os << "    {\"applicable\": " << json_bool(b.applicable) << ", \"name\": \""
       << json_escape(b.name) << "\", \"note\": \"" << json_escape(b.note)
       << "\", \"rhs\": " << (b.applicable ? json_num(b.rhs) : "null") << "}";
    os << (i + 1 < classical.size() ? ",\n" : "\n");
  }
  os << "  ],\n";
  os << "  \"diagnostics\": [\n";
  for (std::size_t i = 0; i < report.diagnostics.size(); ++i) {
    const auto& diag = report.diagnostics[i];
    os << "    {\"diagonalizable\": " << json_bool(diag.diagonalizable)
       << ", \"eigenvalues\": [";
    for (std::size_t k = 0; k < diag.spectrum.eigenvalues.size(); ++k) {
      if (k) os << ", ";
      os << "[" << json_num(diag.spectrum.eigenvalues[k].real()) << ", "
         << json_num(diag.spectrum.eigenvalues[k].imag()) << "]";
    }
    os << "], \"eigvec_condition\": " << json_num(diag.spectrum.eigvec_condition)
       << ", \"max_imag\": " << json_num(diag.spectrum.max_imag)
       << ", \"nonneg\": " << json_bool(diag.nonneg) << ", \"order\": " << diag.order
       << ", \"zero_padding\": " << diag.zero_padding << "}";
    os << (i + 1 < report.diagnostics.size() ? ",\n" : "\n");
  }
  os << "  ],\n";
  os << "  \"metrics\": ";
  if (metrics && metrics->available) {
    os << "{\"correlation\": " << json_num(metrics->correlation)
       << ", \"equiangular\": {\"flag\": " << json_bool(metrics->equiangular.flag)
       << ", \"gamma\": " << json_num(metrics->equiangular.gamma)
       << ", \"max_dev\": " << json_num(metrics->equiangular.max_dev) << "}"
       << ", \"pfp\": " << json_num(metrics->pfp) << ", \"rms\": " << json_num(metrics->rms)
       << "}";
  } else {
    os << "null";
  }
  os << ",\n";
  os << "  \"records\": [\n";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    os << record_json(report.records[i], "    ");
    os << (i + 1 < report.records.size() ? ",\n" : "\n");
  }
  os << "  ],\n";
  const auto& s = report.summary;
  os << "  \"summary\": {\"dim\": " << s.dim << ", \"field\": \""
     << (s.field == Field::Real ? "real" : "complex") << "\", \"n\": " << s.n
     << ", \"normalized\": " << json_bool(s.normalized) << ", \"p\": "
     << (std::isinf(s.p) ? std::string("\"inf\"") : fmt17(s.p)) << "}\n";
  os << "}\n";
  return os.str();
}

std::string report_to_table(const BoundReport& report,
                            const std::vector<ClassicalBound>& classical,
                            const PairMetrics* metrics) {
  std::ostringstream os;
  const auto& s = report.summary;
  os << "pair: n=" << s.n << " d=" << s.dim << " p="
     << (std::isinf(s.p) ? std::string("inf") : fmt6(s.p))
     << " field=" << (s.field == Field::Real ? "real" : "complex")
     << " normalized=" << (s.normalized ? "yes" : "no") << "\n\n";
  os << records_to_table(report.records);
  if (!classical.empty()) {
    os << "\nclassical Hilbert floors (reference):\n";
    for (const auto& b : classical) {
      os << "  " << std::left << std::setw(12) << b.name;
      if (b.applicable) {
        os << fmt6(b.rhs);
      } else {
        os << "n/a (" << b.note << ")";
      }
      os << "\n";
    }
  }
  if (metrics) {
    os << "\nmetrics:\n";
    if (metrics->available) {
      os << "  correlation   " << fmt6(metrics->correlation) << "\n";
      os << "  rms_cross     " << fmt6(metrics->rms) << "\n";
      os << "  pfp           " << fmt6(metrics->pfp) << "\n";
      os << "  equiangular   " << (metrics->equiangular.flag ? "yes" : "no")
         << " (gamma=" << fmt6(metrics->equiangular.gamma)
         << ", max_dev=" << fmt6(metrics->equiangular.max_dev) << ")\n";
    } else {
      os << "  n/a (" << metrics->note << ")\n";
    }
  }
  return os.str();
}

std::string result_to_json(const SearchResult& result, const std::string& mode,
                           std::uint64_t seed) {
  std::string pair = pair_to_json(result.pair);
  std::string indented;
  {
    std::istringstream is(pair);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
      if (!first) indented += "\n  ";
      indented += line;
      first = false;
    }
  }
  std::ostringstream os;
  os << "{\n  \"pair\": " << indented << ",\n";
  os << "  \"search\": {\"converged\": " << json_bool(result.converged)
     << ", \"equiangular_max_dev\": " << json_num(result.equiangular_max_dev)
     << ", \"feasibility\": {\"max_fun_norm_dev\": " << json_num(result.feasibility.max_fun_norm_dev)
     << ", \"max_pairing_dev\": " << json_num(result.feasibility.max_pairing_dev)
     << ", \"max_vec_norm_dev\": " << json_num(result.feasibility.max_vec_norm_dev)
     << "}, \"iters\": " << result.iters_used << ", \"mode\": \"" << json_escape(mode)
     << "\", \"objective_value\": " << json_num(result.objective_value)
     << ", \"seed\": " << seed
     << ", \"tightness_residual\": " << json_num(result.tightness_residual)
     << ", \"welch_gap\": " << json_num(result.welch_gap) << "}\n}\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw ValidationError("failed while writing: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace welch::io
