// Acceptance run: one line per criterion, PASS or FAIL, with the numbers behind it.
//
//   acceptance            all criteria; exit 1 if any criterion outside kKnownFailures fails
//   acceptance --only K   criterion K alone; exit 1 if it fails

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "honeycomb/arc_geometry.hpp"
#include "honeycomb/bounds.hpp"
#include "honeycomb/case_verifier.hpp"
#include "honeycomb/cluster.hpp"
#include "honeycomb/numeric.hpp"
#include "honeycomb/oracles.hpp"
#include "honeycomb/tiling.hpp"

using namespace honeycomb;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Criteria that cannot be met as stated; see README. They still run and print FAIL.
const std::set<int> kKnownFailures{6};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

// Round to `digits` significant figures.
double round_sig(double v, int digits) {
  if (v == 0.0) return 0.0;
  const double scale = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(v)))));
  return std::round(v * scale) / scale;
}

Outcome c1_full_verify() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Certificate> certs = verify_all(ScanConfig{});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool all = certs.size() >= 6;
  std::string failing;
  for (const auto& c : certs)
    if (!c.passed) {
      all = false;
      failing += " " + c.case_id;
    }
  const double step = 1e-3 + 1e-12;
  const Certificate& main = certs[3];
  const Certificate& n6 = main.branch("case_two_main_N6");
  const Certificate& n7 = main.branch("case_two_main_N7");
  // Failing generic points must lie in the windows dilated by one step; the X edges
  // where the generic bound is tight must land within a step of the printed edges.
  const bool contained = n6.value("outside_failures") == 0 && n7.value("outside_failures") == 0 &&
                         n6.value("window_alpha_lo") >= 0.996 - step && n6.value("window_x_hi") <= 0.1 + step &&
                         n7.value("window_alpha_lo") >= 0.996 - step;
  const bool edges = std::abs(n6.value("window_x_lo") + 0.119) <= step &&
                     std::abs(n7.value("window_x_lo") + 0.082) <= step &&
                     std::abs(n7.value("window_x_hi") - 0.0684) <= step;
  const bool pass = all && secs < 60.0 && contained && edges;
  std::ostringstream d;
  d << certs.size() << " certificates" << (all ? " all positive" : ", failing:" + failing) << ", " << fmt(secs)
    << " s; N=6 failures in alpha [" << fmt(n6.value("window_alpha_lo")) << ", " << fmt(n6.value("window_alpha_hi"))
    << "] X [" << fmt(n6.value("window_x_lo")) << ", " << fmt(n6.value("window_x_hi")) << "]; N=7 X ["
    << fmt(n7.value("window_x_lo")) << ", " << fmt(n7.value("window_x_hi")) << "]";
  return {pass, d.str()};
}

Outcome c2_long_chord() {
  double worst = INFINITY;
  for (int k = 0; k <= 60; ++k) {
    const double a = 0.61 + 0.001 * k;
    worst = std::min(worst, long_chord_margin(6, a, 0.611 + 0.001 * k));
  }
  return {worst >= 0.02 - 1e-6, "61 cells, min g6 = " + fmt(worst) + " (need >= 0.02 - 1e-6)"};
}

Outcome c3_tight_constants() {
  const Certificate one = verify_case_one(ScanConfig{});
  const double high = one.branch("case_one_high_T").min_margin;
  const double mid = one.branch("case_one_mid_T").min_margin;
  const double high_direct = 2.0 * std::sqrt(std::numbers::pi) + penalty(3, 1.0, 0.177);
  const double mid_direct = reflected_bound(1.0, -0.323) + penalty(3, 1.0, -0.36);
  // The printed 4.224e-4 and 4.04e-3 are rounded; the 1e-9 comparison is against the
  // exact arithmetic they round.
  const bool pass = std::abs(high - high_direct) <= 1e-9 && std::abs(mid - mid_direct) <= 1e-9 &&
                    round_sig(high, 4) == 4.224e-4 && round_sig(mid, 3) == 4.04e-3;
  return {pass, "T>0.177 worst " + fmt(high) + " vs 2sqrt(pi)+eps " + fmt(high_direct) + "; middle worst " +
                    fmt(mid) + " vs direct " + fmt(mid_direct)};
}

Outcome c4_hexagon_equality() {
  const Cluster hex = generate_tiling(TilingKind::Hexagon, 1, 1);
  const double delta = region_stats(hex, hex.faces()[0].id).delta;
  const OracleReport px = px_family_check();
  const bool pass = std::abs(delta) <= 1e-9 && px.passed && px.worst_violation >= -1e-9 &&
                    std::abs(px.value("at_zero")) <= 1e-9 && px.value("min_off_zero") > 0.0 &&
                    px.value("slope_error") <= 1e-4;
  return {pass, "unit hexagon delta " + fmt(delta) + "; P_X min off 0 = " + fmt(px.value("min_off_zero")) +
                    ", at 0 = " + fmt(px.value("at_zero")) + ", slope " + fmt(px.value("slope_at_zero"))};
}

Outcome c5_torus() {
  const double c = fourth_root_12();
  double hex_err = 0.0, sq_err = 0.0;
  bool exact = true;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> bulge(-0.3, 0.3);
  for (int k : {1, 2, 3, 6, 12}) {
    const Cluster hx = generate_tiling(TilingKind::Hexagon, k, 2);
    const HoneycombReport h = honeycomb_bound(hx);
    hex_err = std::max(hex_err, std::abs(h.perimeter - 2 * k * c) / (2 * k));
    const HoneycombReport s = honeycomb_bound(generate_tiling(TilingKind::Square, k, 2));
    sq_err = std::max(sq_err, std::abs(s.margin - 2 * k * (2 - c)) / (2 * k));
    std::vector<double> vals(hx.half_edges().size() / 2);
    for (double& v : vals) v = bulge(rng);
    const Cluster b = with_pair_bulges(hx, vals);
    const EulerReport e = euler_defect(b);
    exact = exact && e.cubic && e.hex_defect == 0.0 && conservation_checks(b).t_sum == 0.0;
  }
  const bool pass = hex_err <= 1e-9 && sq_err <= 1e-9 && exact;
  return {pass, "hexagon |perimeter - k c|/k <= " + fmt(hex_err) + ", square |margin - k(2-c)|/k <= " + fmt(sq_err) +
                    (exact ? ", sum T = 0 and sum(1-N/6) = 0 exactly" : ", exact sums FAIL")};
}

Outcome c6_disk_ratio() {
  const double c = fourth_root_12();
  const double tri = std::sqrt(polygon_constant(3));
  const double h50 = disk_ratio(TilingKind::Hexagon, 50), h100 = disk_ratio(TilingKind::Hexagon, 100);
  const double s50 = disk_ratio(TilingKind::Square, 50), t50 = disk_ratio(TilingKind::Triangle, 50);
  const double eh = std::abs(h50 - c) / c, es = std::abs(s50 - 2.0) / 2.0, et = std::abs(t50 - tri) / tri;
  const bool pass = eh <= 0.01 && es <= 0.01 && et <= 0.01 && std::abs(h100 - c) < std::abs(h50 - c);
  return {pass, "r=50: hexagon " + fmt(h50) + " (" + fmt(100 * eh) + "%), square " + fmt(s50) + " (" +
                    fmt(100 * es) + "%), triangle " + fmt(t50) + " (" + fmt(100 * et) + "%); hexagon r=100 " +
                    fmt(h100) + " (" + fmt(100 * std::abs(h100 - c) / c) + "%)"};
}

Outcome c7_small_area() {
  const auto b398 = small_area_bound(std::vector<double>(398, 1.0));
  const auto b399 = small_area_bound(std::vector<double>(399, 1.0));
  return {b398.holds && !b399.holds, "398: lhs-rhs " + fmt(b398.lhs - b398.rhs) + "; 399: lhs-rhs " +
                                         fmt(b399.lhs - b399.rhs)};
}

Outcome c8_xi() {
  const OracleReport r = xi_random_check(0, 100);
  return {r.instances == 100 && r.worst_violation >= -1e-6,
          "100 systems, worst relative error " + fmt(-r.worst_violation)};
}

Outcome c9_counterexample() {
  const CounterexampleWitness w = untruncated_counterexample();
  return {w.untruncated < -0.1 && w.truncated >= 0.0,
          "chord " + fmt(w.chord) + ", X " + fmt(w.x_total) + ": untruncated " + fmt(w.untruncated) + ", truncated " +
              fmt(w.truncated)};
}

Outcome c10_prop61() {
  const OracleReport r = prop61_random_check(0, 1000);
  return {r.instances >= 1000 && r.worst_violation >= -1e-9,
          fmt(double(r.instances)) + " instances, worst violation " + fmt(r.worst_violation)};
}

Outcome c11_chain() {
  double wp = INFINITY, wq = INFINITY, ws = INFINITY;
  for (double t : axis_points(0.0, 0.5, 1e-4)) {
    wp = std::min(wp, 0.87 * t - shape_p(t));
    wq = std::min(wq, shape_q(t) - (1.0 + t * t / 6.0));
  }
  for (double x : axis_points(-0.06, 0.06, 1e-4)) ws = std::min(ws, std::sqrt(1.0 - x) - (1.0 - x / 2.0 - 0.22 * x * x));
  // Each side is O(1) and touches the other at 0, so allow a few ulps there.
  constexpr double ulps = 1e-15;
  return {wp >= -ulps && wq >= -ulps && ws >= -ulps,
          "min 0.87t - p = " + fmt(wp) + ", min q - 1 - t^2/6 = " + fmt(wq) + ", min sqrt gap = " + fmt(ws)};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--only") == 0) only = std::atoi(argv[2]);
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"full verify run", c1_full_verify},
      {"long-chord scan", c2_long_chord},
      {"tight constants", c3_tight_constants},
      {"hexagon equality and P_X", c4_hexagon_equality},
      {"torus checks", c5_torus},
      {"disk ratio", c6_disk_ratio},
      {"small-area threshold", c7_small_area},
      {"xi derivative", c8_xi},
      {"truncation counterexample", c9_counterexample},
      {"chord-arc oracle", c10_prop61},
      {"inequality chain", c11_chain},
  };
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "acceptance: no criterion %d\n", only);
    return 2;
  }
  int passed = 0, failed = 0, unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only && id != only) continue;
    const Outcome o = criteria[i].second();
    const bool known = kKnownFailures.count(id) > 0;
    std::printf("[%s] C%d %s: %s%s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.detail.c_str(),
                !o.pass && known ? " (known failure)" : "");
    std::fflush(stdout);
    if (o.pass) ++passed;
    else {
      ++failed;
      if (!known || only) ++unexpected;
    }
  }
  std::printf("%d passed, %d failed\n", passed, failed);
  return unexpected ? 1 : 0;
}
