#include "honeycomb/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "honeycomb/bounds.hpp"
#include "honeycomb/case_verifier.hpp"
#include "honeycomb/cluster_io.hpp"
#include "honeycomb/errors.hpp"
#include "honeycomb/numeric.hpp"
#include "honeycomb/oracles.hpp"
#include "honeycomb/report.hpp"
#include "honeycomb/tiling.hpp"

namespace honeycomb {

namespace {

std::string format_name(ReportFormat f) { return f == ReportFormat::Json ? "json" : "csv"; }

ConfigEcho base_echo(const RunConfig& cfg) {
  return {{"command", cfg.command},
          {"step", format_real(cfg.step)},
          {"tol", format_real(cfg.tol)},
          {"nmax", std::to_string(cfg.n_max)},
          {"seed", std::to_string(cfg.seed)},
          {"format", format_name(cfg.format)}};
}

ScanConfig scan_config(const RunConfig& cfg) {
  ScanConfig sc;
  sc.step = cfg.step;
  sc.tol = cfg.tol;
  sc.n_max = cfg.n_max;
  sc.seed = cfg.seed;
  sc.validate();
  return sc;
}

// Report to --out when given (stdout then gets `summary`), else to stdout.
int emit(const RunConfig& cfg, const std::string& report, const std::string& summary, std::ostream& out,
         std::ostream& err) {
  if (cfg.out_path.empty()) {
    out << report;
    return kExitPass;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    err << "honeycomb: cannot write " << cfg.out_path << "\n";
    return kExitUsage;
  }
  file << report;
  out << summary;
  return kExitPass;
}

// Path of the deepest failing branch along the first failing line.
std::string first_failure(const Certificate& c, const std::string& prefix = "") {
  const std::string path = prefix.empty() ? c.case_id : prefix + "/" + c.case_id;
  for (const Certificate& b : c.branches)
    if (!b.passed) return first_failure(b, path);
  return path;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<Certificate> certs = verify_all(scan_config(cfg));
  const std::string report =
      cfg.format == ReportFormat::Json ? certificates_json(certs, base_echo(cfg)) : certificates_csv(certs);
  std::string summary;
  const Certificate* failed = nullptr;
  for (const Certificate& c : certs) {
    summary += std::string(c.passed ? "PASS " : "FAIL ") + c.case_id + " min_margin=" + format_real(c.min_margin) + "\n";
    if (!c.passed && !failed) failed = &c;
  }
  const int rc = emit(cfg, report, summary, out, err);
  if (rc != kExitPass) return rc;
  if (failed) {
    err << "verify: FAIL first failing certificate: " << first_failure(*failed)
        << " (min_margin " << format_real(failed->min_margin) << ")\n";
    return kExitFail;
  }
  return kExitPass;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.step > 0.0)) throw PreconditionError("scan: step must be > 0");
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;
  auto range = [&](double lo, double hi) {
    const double a = std::isnan(cfg.x_min) ? lo : cfg.x_min;
    const double b = std::isnan(cfg.x_max) ? hi : cfg.x_max;
    if (!(a <= b)) throw PreconditionError("scan: xmin must not exceed xmax");
    return axis_points(a, b, cfg.step);
  };
  if (cfg.diagram == "4d") {
    header = {"X", "L_PX", "minus_eps", "L_prime"};
    for (double x : range(-0.3, 0.5))
      rows.push_back({x, px_region(x).length, -penalty(6, 1.0, x), chord_arc_bound(6, 1.0, x)});
  } else if (cfg.diagram == "8b" || cfg.diagram == "8c") {
    const int n = cfg.diagram == "8b" ? 6 : 7;
    header = {"X", "bound", "value"};
    for (double x : range(-0.5, 0.5)) {
      const BoundKind kind = select_bound(n, 1.0, x);
      rows.push_back({x, std::string(to_string(kind)), case_two_margin(kind, n, 1.0, x)});
    }
  } else {
    err << "scan: unknown diagram '" << cfg.diagram << "' (expected 4d, 8b or 8c)\n";
    return kExitUsage;
  }
  ConfigEcho echo = base_echo(cfg);
  echo.emplace_back("diagram", cfg.diagram);
  const std::string report = cfg.format == ReportFormat::Csv ? csv_table(header, rows) : json_table(header, rows, echo);
  return emit(cfg, report, "scan " + cfg.diagram + ": " + std::to_string(rows.size()) + " rows\n", out, err);
}

int cmd_cluster(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  // Lenient so that bulge defects reach conservation_checks and get named there.
  const Cluster cluster = load_cluster(cfg.file, Validation::Lenient);
  ClusterSummary s;
  s.source = cfg.file;
  s.euler = euler_defect(cluster);
  s.conservation = conservation_checks(cluster, cfg.tol);
  for (const Face& f : cluster.faces()) s.stats.push_back(region_stats(cluster, f.id));
  for (const BulgeViolation& v : s.conservation.violations)
    s.problems.push_back("bulges of half-edges " + std::to_string(v.edge) + " and " + std::to_string(v.twin) +
                         " do not cancel (sum " + format_real(v.sum) + ")");
  if (std::abs(s.conservation.bulge_sum) > cfg.tol)
    s.problems.push_back("total bulge " + format_real(s.conservation.bulge_sum) + " is not zero");
  if (std::abs(s.conservation.t_sum) > cfg.tol)
    s.problems.push_back("total truncated bulge " + format_real(s.conservation.t_sum) + " is not zero");
  if (cluster.domain().kind == DomainKind::Torus) {
    if (s.euler.cubic && !s.euler.identity_holds)
      s.problems.push_back("Euler identity fails: chi " + std::to_string(s.euler.chi) + " vs hex defect " +
                           format_real(s.euler.hex_defect));
    try {
      s.honeycomb = honeycomb_bound(cluster);
      if (s.honeycomb->margin < -cfg.tol)
        s.problems.push_back("perimeter below honeycomb bound by " + format_real(-s.honeycomb->margin));
    } catch (const PreconditionError& e) {
      s.problems.push_back(e.what());
    }
  }
  s.passed = s.problems.empty();
  ConfigEcho echo = base_echo(cfg);
  echo.emplace_back("file", cfg.file);
  const std::string report = cfg.format == ReportFormat::Json ? cluster_json(s, echo) : cluster_csv(s);
  std::string summary = std::string(s.passed ? "PASS" : "FAIL") + " " + cfg.file + " faces=" +
                        std::to_string(s.stats.size());
  if (s.honeycomb) summary += " margin=" + format_real(s.honeycomb->margin);
  summary += "\n";
  const int rc = emit(cfg, report, summary, out, err);
  if (rc != kExitPass) return rc;
  if (!s.passed) {
    err << "cluster: FAIL " << s.problems.front() << "\n";
    return kExitFail;
  }
  return kExitPass;
}

int cmd_tile(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto kind = parse_tiling_kind(cfg.kind);
  if (!kind) {
    err << "tile: unknown kind '" << cfg.kind << "' (expected hexagon, square or triangle)\n";
    return kExitUsage;
  }
  const Cluster c = generate_tiling(*kind, cfg.m, cfg.n);
  return emit(cfg, format_cluster(c),
              "tile " + cfg.kind + " " + std::to_string(cfg.m) + "x" + std::to_string(cfg.n) + ": " +
                  std::to_string(c.faces().size()) + " faces -> " + cfg.out_path + "\n",
              out, err);
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.instances < 1) {
    err << "oracle: instances must be >= 1\n";
    return kExitUsage;
  }
  const std::vector<OracleReport> reports = run_oracles(cfg.seed, cfg.instances);
  ConfigEcho echo = base_echo(cfg);
  echo.emplace_back("instances", std::to_string(cfg.instances));
  const std::string report = cfg.format == ReportFormat::Json ? oracles_json(reports, echo) : oracles_csv(reports);
  std::string summary;
  const OracleReport* failed = nullptr;
  for (const OracleReport& r : reports) {
    summary += std::string(r.passed ? "PASS " : "FAIL ") + r.name + " worst=" + format_real(r.worst_violation) + "\n";
    if (!r.passed && !failed) failed = &r;
  }
  const int rc = emit(cfg, report, summary, out, err);
  if (rc != kExitPass) return rc;
  if (failed) {
    err << "oracle: FAIL " << failed->name << " worst violation " << format_real(failed->worst_violation)
        << (failed->witness.empty() ? "" : " at " + failed->witness) << "\n";
    return kExitFail;
  }
  return kExitPass;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Case certificates and cluster checks for hexagonal perimeter bounds", "honeycomb"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--step", cfg.step, "grid spacing")->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "positivity tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--nmax", cfg.n_max, "largest N scanned exhaustively")->check(CLI::Range(8, 1000));
  app.add_option("--seed", cfg.seed, "RNG seed for oracles");
  app.add_option("--out", cfg.out_path, "write the report here");
  std::string format = "json";
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "run every case certificate");
  auto* scan = app.add_subcommand("scan", "emit diagram data");
  scan->add_option("--diagram", cfg.diagram, "4d, 8b or 8c")->required();
  scan->add_option("--xmin", cfg.x_min, "first X");
  scan->add_option("--xmax", cfg.x_max, "last X");
  auto* cluster = app.add_subcommand("cluster", "check a cluster file");
  cluster->add_option("file", cfg.file, "cluster file")->required();
  auto* tile = app.add_subcommand("tile", "write a periodic tiling as a cluster file");
  tile->add_option("--kind", cfg.kind, "hexagon, square or triangle");
  tile->add_option("--m", cfg.m, "cells along v1")->check(CLI::PositiveNumber);
  tile->add_option("--n", cfg.n, "cells along v2")->check(CLI::PositiveNumber);
  auto* oracle = app.add_subcommand("oracle", "run the brute-force oracles");
  oracle->add_option("--instances", cfg.instances, "random instances per oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "honeycomb: " << e.what() << "\n";
    return kExitUsage;
  }
  cfg.format = format == "csv" ? ReportFormat::Csv : ReportFormat::Json;

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (scan->parsed()) return cmd_scan(cfg, out, err);
    if (cluster->parsed()) return cmd_cluster(cfg, out, err);
    if (tile->parsed()) return cmd_tile(cfg, out, err);
    if (oracle->parsed()) return cmd_oracle(cfg, out, err);
  } catch (const ParseError& e) {
    err << "honeycomb: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ClusterError& e) {
    err << "honeycomb: malformed cluster: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "honeycomb: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "honeycomb: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace honeycomb
