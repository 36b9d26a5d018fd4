#pragma once

#include <string>
#include <vector>

#include "welch/bounds.hpp"
#include "welch/continuous.hpp"
#include "welch/optimize.hpp"

namespace welch::io {

/// Canonical number form used everywhere in JSON output: %.17g, which
/// round-trips doubles exactly, so save(load(x)) is byte-identical for
/// canonically formatted inputs.
std::string fmt17(double v);

DualPair parse_pair(const std::string& text);
DualPair load_pair(const std::string& path);
std::string pair_to_json(const DualPair& pair);
void save_pair(const DualPair& pair, const std::string& path);

FiniteMeasure parse_measure(const std::string& text);
std::string measure_to_json(const FiniteMeasure& measure);

ContinuousASF parse_casf(const std::string& text);
ContinuousASF load_casf(const std::string& path);
std::string casf_to_json(const ContinuousASF& casf);
void save_casf(const ContinuousASF& casf, const std::string& path);

/// Comma-separated values with complex entries in "re+imj" text form.
std::string matrix_to_csv(const Matrix& m);

/// Metrics block attached to report output when the pair admits them.
struct PairMetrics {
  bool available = false;
  std::string note;
  double correlation = 0.0;
  double rms = 0.0;
  double pfp = 0.0;
  Equiangularity equiangular;
};

std::string report_to_json(const BoundReport& report,
                           const std::vector<ClassicalBound>& classical,
                           const PairMetrics* metrics);
std::string report_to_table(const BoundReport& report,
                            const std::vector<ClassicalBound>& classical,
                            const PairMetrics* metrics);

std::string records_to_table(const std::vector<BoundRecord>& records);
std::string records_to_json(const std::vector<BoundRecord>& records);

std::string result_to_json(const SearchResult& result, const std::string& mode,
                           std::uint64_t seed);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace welch::io
