#pragma once

// Deterministic JSON and CSV renderings of certificates, oracle reports and
// cluster checks. Same input, same bytes.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "honeycomb/cluster.hpp"
#include "honeycomb/oracles.hpp"
#include "honeycomb/scan.hpp"

namespace honeycomb {

/// Config echo: key/value pairs in the order given.
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

struct ClusterSummary {
  std::string source;
  EulerReport euler;
  ConservationReport conservation;
  std::vector<RegionStats> stats;
  std::optional<HoneycombReport> honeycomb;
  std::vector<std::string> problems;  ///< invariant violations, in check order
  bool passed = false;
};

std::string certificates_json(const std::vector<Certificate>& certs, const ConfigEcho& config);
/// One row per certificate and per branch: path, method, min_margin, passed, witness.
std::string certificates_csv(const std::vector<Certificate>& certs);

std::string oracles_json(const std::vector<OracleReport>& reports, const ConfigEcho& config);
std::string oracles_csv(const std::vector<OracleReport>& reports);

std::string cluster_json(const ClusterSummary& summary, const ConfigEcho& config);
/// Per-face RegionStats rows.
std::string cluster_csv(const ClusterSummary& summary);

/// Header plus rows of numbers (17 significant digits) and strings, RFC 4180 quoting.
struct CsvCell {
  std::optional<double> number;
  std::string text;
  CsvCell(double v) : number(v) {}  // NOLINT
  CsvCell(std::string s) : text(std::move(s)) {}  // NOLINT
  CsvCell(const char* s) : text(s) {}  // NOLINT
};
std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<CsvCell>>& rows);
/// The same table as {"config", "columns", "rows"}.
std::string json_table(const std::vector<std::string>& header, const std::vector<std::vector<CsvCell>>& rows,
                       const ConfigEcho& config);

}  // namespace honeycomb
