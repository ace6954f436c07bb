#include "honeycomb/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "honeycomb/numeric.hpp"

namespace honeycomb {

namespace {

using nlohmann::ordered_json;

// JSON has no infinities; those go out as strings.
ordered_json num(double v) {
  if (std::isfinite(v)) return v;
  return format_real(v);
}

ordered_json config_json(const ConfigEcho& config) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : config) j[k] = v;
  return j;
}

ordered_json values_json(const std::vector<std::pair<std::string, double>>& values) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : values) j[k] = num(v);
  return j;
}

ordered_json cert_json(const Certificate& c) {
  ordered_json j;
  j["case_id"] = c.case_id;
  j["passed"] = c.passed;
  j["method"] = std::string(to_string(c.method));
  j["strict"] = c.strict;
  j["min_margin"] = num(c.min_margin);
  ordered_json box = ordered_json::array();
  for (const Range& r : c.box) box.push_back({{"name", r.name}, {"lo", num(r.lo)}, {"hi", num(r.hi)}});
  j["box"] = box;
  ordered_json w = ordered_json::object();
  for (const Coord& p : c.witness) w[p.name] = num(p.value);
  j["witness"] = w;
  if (!c.values.empty()) j["values"] = values_json(c.values);
  if (!c.notes.empty()) j["notes"] = c.notes;
  if (!c.branches.empty()) {
    ordered_json b = ordered_json::array();
    for (const Certificate& child : c.branches) b.push_back(cert_json(child));
    j["branches"] = b;
  }
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void cert_rows(const Certificate& c, const std::string& prefix, std::vector<std::vector<CsvCell>>& rows) {
  const std::string path = prefix.empty() ? c.case_id : prefix + "/" + c.case_id;
  std::string witness;
  for (const Coord& p : c.witness) witness += (witness.empty() ? "" : " ") + p.name + "=" + format_real(p.value);
  rows.push_back({path, std::string(to_string(c.method)), c.min_margin, c.passed ? "1" : "0", witness});
  for (const Certificate& child : c.branches) cert_rows(child, path, rows);
}

ordered_json stats_json(const RegionStats& s) {
  return {{"face", s.face},       {"n", s.n},         {"length", num(s.length)}, {"x", num(s.x)},
          {"t", num(s.t)},        {"area", num(s.area)}, {"alpha", num(s.alpha)},
          {"delta", num(s.delta)}};
}

}  // namespace

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<CsvCell>>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << quote(header[i]);
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << (row[i].number ? format_real(*row[i].number) : quote(row[i].text));
    }
    os << "\n";
  }
  return os.str();
}

std::string json_table(const std::vector<std::string>& header, const std::vector<std::vector<CsvCell>>& rows,
                       const ConfigEcho& config) {
  ordered_json j;
  j["config"] = config_json(config);
  j["columns"] = header;
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json r = ordered_json::array();
    for (const CsvCell& c : row) r.push_back(c.number ? num(*c.number) : ordered_json(c.text));
    arr.push_back(r);
  }
  j["rows"] = arr;
  return dump(j);
}

std::string certificates_json(const std::vector<Certificate>& certs, const ConfigEcho& config) {
  ordered_json j;
  j["config"] = config_json(config);
  bool all = true;
  ordered_json arr = ordered_json::array();
  for (const Certificate& c : certs) {
    all = all && c.passed;
    arr.push_back(cert_json(c));
  }
  j["passed"] = all;
  j["certificates"] = arr;
  return dump(j);
}

std::string certificates_csv(const std::vector<Certificate>& certs) {
  std::vector<std::vector<CsvCell>> rows;
  for (const Certificate& c : certs) cert_rows(c, "", rows);
  return csv_table({"case", "method", "min_margin", "passed", "witness"}, rows);
}

std::string oracles_json(const std::vector<OracleReport>& reports, const ConfigEcho& config) {
  ordered_json j;
  j["config"] = config_json(config);
  bool all = true;
  ordered_json arr = ordered_json::array();
  for (const OracleReport& r : reports) {
    all = all && r.passed;
    ordered_json o;
    o["name"] = r.name;
    o["passed"] = r.passed;
    o["instances"] = r.instances;
    o["worst_violation"] = num(r.worst_violation);
    o["tolerance"] = num(r.tolerance);
    o["witness"] = r.witness;
    o["values"] = values_json(r.values);
    arr.push_back(o);
  }
  j["passed"] = all;
  j["oracles"] = arr;
  return dump(j);
}

std::string oracles_csv(const std::vector<OracleReport>& reports) {
  std::vector<std::vector<CsvCell>> rows;
  for (const OracleReport& r : reports)
    rows.push_back({r.name, static_cast<double>(r.instances), r.worst_violation, r.tolerance,
                    r.passed ? "1" : "0", r.witness});
  return csv_table({"oracle", "instances", "worst_violation", "tolerance", "passed", "witness"}, rows);
}

std::string cluster_json(const ClusterSummary& s, const ConfigEcho& config) {
  ordered_json j;
  j["config"] = config_json(config);
  j["source"] = s.source;
  j["passed"] = s.passed;
  j["problems"] = s.problems;
  const EulerReport& e = s.euler;
  j["euler"] = {{"vertices", e.vertices}, {"edges", e.edges},       {"faces", e.faces},
                {"chi", e.chi},           {"hex_defect", num(e.hex_defect)}, {"cubic", e.cubic},
                {"identity_holds", e.identity_holds}};
  ordered_json viol = ordered_json::array();
  for (const BulgeViolation& v : s.conservation.violations)
    viol.push_back({{"edge", v.edge}, {"twin", v.twin}, {"sum", num(v.sum)}});
  j["conservation"] = {{"bulge_sum", num(s.conservation.bulge_sum)},
                       {"t_sum", num(s.conservation.t_sum)},
                       {"violations", viol},
                       {"passed", s.conservation.passed}};
  ordered_json faces = ordered_json::array();
  for (const RegionStats& r : s.stats) faces.push_back(stats_json(r));
  j["faces"] = faces;
  if (s.honeycomb) {
    const HoneycombReport& h = *s.honeycomb;
    j["honeycomb"] = {{"perimeter", num(h.perimeter)},
                      {"face_length_sum", num(h.face_length_sum)},
                      {"bound", num(h.bound)},
                      {"margin", num(h.margin)},
                      {"margin_per_face", num(h.stats.empty() ? 0.0 : h.margin / double(h.stats.size()))},
                      {"delta_sum", num(h.delta_sum)}};
  } else {
    j["honeycomb"] = nullptr;
  }
  return dump(j);
}

std::string cluster_csv(const ClusterSummary& s) {
  std::vector<std::vector<CsvCell>> rows;
  for (const RegionStats& r : s.stats)
    rows.push_back({static_cast<double>(r.face), static_cast<double>(r.n), r.length, r.x, r.t, r.area, r.alpha,
                    r.delta});
  return csv_table({"face", "n", "length", "x", "t", "area", "alpha", "delta"}, rows);
}

}  // namespace honeycomb
