#pragma once

// Batch front end: honeycomb verify | scan | cluster | tile | oracle.
// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error.

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>

namespace honeycomb {

enum class ReportFormat { Json, Csv };

struct RunConfig {
  std::string command;
  double step = 1e-3;
  double tol = 1e-9;
  int n_max = 12;
  std::uint64_t seed = 0;
  std::string out_path;  ///< empty: report goes to stdout
  ReportFormat format = ReportFormat::Json;

  // scan
  std::string diagram;
  double x_min = std::numeric_limits<double>::quiet_NaN();  ///< NaN: the diagram's default
  double x_max = std::numeric_limits<double>::quiet_NaN();
  // cluster
  std::string file;
  // tile
  std::string kind = "hexagon";
  int m = 3;
  int n = 3;
  // oracle
  int instances = 1000;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_cluster(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_tile(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace honeycomb
