#include "honeycomb/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "honeycomb/bounds.hpp"
#include "honeycomb/errors.hpp"
#include "honeycomb/numeric.hpp"
#include "honeycomb/scan.hpp"

namespace honeycomb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Radius rho' at which two minor arcs over u and v have total length `length`.
double radius_for_length(double u, double v, double length) {
  auto total = [&](double rho) { return 2.0 * rho * (std::asin(std::min(1.0, u / (2.0 * rho))) +
                                                     std::asin(std::min(1.0, v / (2.0 * rho)))); };
  const double lo = std::max(u, v) / 2.0;
  if (!(lo > 0.0)) throw InfeasibleError("two-chord system: both chords vanish");
  if (total(lo) < length) throw InfeasibleError("two-chord system: length needs an arc past a semicircle");
  if (!(length > u + v)) throw InfeasibleError("two-chord system: length must exceed u + v");
  double hi = 2.0 * lo;
  while (total(hi) > length) hi *= 2.0;
  return find_root([&](double rho) { return total(rho) - length; }, lo, hi, 0.0).x;
}

std::string describe(std::initializer_list<std::pair<const char*, double>> items) {
  std::string s;
  for (const auto& [k, v] : items) {
    if (!s.empty()) s += ' ';
    s += k;
    s += '=';
    s += format_real(v);
  }
  return s;
}

}  // namespace

double OracleReport::value(const std::string& key) const {
  for (const auto& [k, v] : values)
    if (k == key) return v;
  throw std::out_of_range("oracle " + name + " has no value " + key);
}

TwoChordSystem TwoChordSystem::from_radius(double u, double v, double rho) {
  if (!(u >= 0.0 && v >= 0.0 && rho > 0.0)) throw InfeasibleError("two-chord system: bad arguments");
  if (std::max(u, v) > 2.0 * rho) throw InfeasibleError("two-chord system: chord longer than the diameter");
  return {u, v, std::asin(u / (2.0 * rho)), std::asin(v / (2.0 * rho)), rho};
}

double TwoChordSystem::area() const {
  return 0.25 * (u * u * shape_p(theta_u) + v * v * shape_p(theta_v));
}

double TwoChordSystem::length() const { return 2.0 * rho * (theta_u + theta_v); }

XiDerivative xi_derivative_check(double u, double v, double rho, double h) {
  const TwoChordSystem base = TwoChordSystem::from_radius(u, v, rho);
  if (!(h > 0.0) || !(h < std::min(u, v))) throw InfeasibleError("xi_derivative_check: step too large");
  const double sum = u + v;
  const double length = base.length();
  auto xi = [&](double uu) {
    const double vv = sum - uu;
    return TwoChordSystem::from_radius(uu, vv, radius_for_length(uu, vv, length)).area();
  };
  XiDerivative out;
  out.analytic = rho * (std::cos(base.theta_v) - std::cos(base.theta_u));
  out.numeric = (xi(u + h) - xi(u - h)) / (2.0 * h);
  return out;
}

OracleReport equal_curvature_oracle(double l1, double l2, double x_total, int grid) {
  if (grid < 100) throw PreconditionError("equal_curvature_oracle: grid >= 100");
  OracleReport r;
  r.name = "equal_curvature";
  r.instances = 1;
  r.tolerance = 1e-9;
  const EqualCurvatureSplit split = equal_curvature_split(l1, l2, x_total);
  double best = kInf;
  double best_t = 0.0;
  for (int k = 0; k <= grid; ++k) {
    const double t = x_total * k / grid;
    const double len = arc_length(l1, t) + arc_length(l2, x_total - t);
    if (len < best) {
      best = len;
      best_t = t;
    }
  }
  r.worst_violation = best - split.total_length;
  r.witness = describe({{"l1", l1}, {"l2", l2}, {"x_total", x_total}});
  r.values = {{"split_x1", split.x1},
              {"split_x2", split.x2},
              {"split_length", split.total_length},
              {"grid_x1", best_t},
              {"grid_length", best},
              {"resolution", x_total / grid}};
  r.finish();
  return r;
}

PxRegion px_region(double x) {
  if (!(x < 1.0)) throw DomainError("px_region: X must be < 1");
  const double s = std::sqrt(2.0 * (1.0 - x) / (3.0 * std::numbers::sqrt3));
  ClusterBuilder b(Domain::plane());
  std::vector<ClusterBuilder::Corner> inner, outer;
  for (int k = 0; k < 6; ++k) {
    const double a = k * kPi / 3.0;
    inner.push_back({b.add_vertex({s * std::cos(a), s * std::sin(a)}), {0, 0}});
  }
  outer.assign(inner.rbegin(), inner.rend());
  const int face = b.add_face(inner);
  b.add_face(outer, true);
  // Inner half-edges come first, so they take the pair values directly.
  Cluster plain = b.build();
  PxRegion out{with_pair_bulges(plain, std::vector<double>(6, x / 6.0)), face, s, 0.0};
  out.length = region_stats(out.cluster, face).length;
  return out;
}

CounterexampleWitness untruncated_counterexample(const UntruncatedSearch& search) {
  if (search.samples < 2 || !(search.chord_lo < search.chord_hi))
    throw PreconditionError("untruncated_counterexample: bad search range");
  const double root3 = std::numbers::sqrt3;
  CounterexampleWitness best;
  best.untruncated = kInf;
  for (int k = 0; k < search.samples; ++k) {
    const double l = search.chord_lo + (search.chord_hi - search.chord_lo) * k / (search.samples - 1);
    // Area 1: (sqrt3/4) l^2 + 3 x = 1.
    const double x = (1.0 - root3 / 4.0 * l * l) / 3.0;
    const double theta = bulge_angle(l, x).theta;
    if (theta < search.theta_lo || theta > search.theta_hi) continue;
    CounterexampleWitness w;
    w.chord = l;
    w.theta = theta;
    w.bulge = x;
    w.x_total = 3.0 * x;
    w.length = 3.0 * l * shape_q(theta);
    w.untruncated = w.length + penalty(3, 1.0, w.x_total);
    w.truncated = w.length + penalty(3, 1.0, 3.0 * truncate_bulge(x));
    // Arcs leave each corner at angle theta from their chords; neighbours meet
    // tangentially once 2 theta fills the corner.
    w.simple = x < 0.0 ? theta <= kPi / 6.0 : theta <= 5.0 * kPi / 6.0;
    if (w.untruncated < best.untruncated) best = w;
  }
  if (!(best.untruncated < -0.1))
    throw SearchError("untruncated_counterexample: no configuration below -0.1 in the search range");
  return best;
}

OracleReport untruncated_report(const UntruncatedSearch& search) {
  OracleReport r;
  r.name = "untruncated_counterexample";
  r.instances = search.samples;
  r.tolerance = 0.0;
  const CounterexampleWitness w = untruncated_counterexample(search);
  // Onset of the violation along the family, and the best simple configuration.
  double onset = kInf;
  double simple_min = kInf;
  const double root3 = std::numbers::sqrt3;
  for (int k = 0; k < search.samples; ++k) {
    const double l = search.chord_lo + (search.chord_hi - search.chord_lo) * k / (search.samples - 1);
    const double x = (1.0 - root3 / 4.0 * l * l) / 3.0;
    const double theta = bulge_angle(l, x).theta;
    if (theta < search.theta_lo || theta > search.theta_hi) continue;
    const double value = 3.0 * l * shape_q(theta) + penalty(3, 1.0, 3.0 * x);
    if (value < 0.0 && l < onset) onset = l;
    const bool simple = x < 0.0 ? theta <= kPi / 6.0 : theta <= 5.0 * kPi / 6.0;
    if (simple) simple_min = std::min(simple_min, value);
  }
  r.worst_violation = w.truncated;
  r.witness = describe({{"chord", w.chord}, {"theta", w.theta}, {"bulge", w.bulge}});
  r.values = {{"untruncated", w.untruncated}, {"truncated", w.truncated}, {"X", w.x_total},
              {"onset_chord", onset},         {"simple_min", simple_min}, {"witness_simple", w.simple ? 1.0 : 0.0}};
  r.finish();
  r.passed = r.passed && w.untruncated < -0.1;
  return r;
}

double min_arc_length(std::span<const double> chords, double x) {
  std::vector<double> ls;
  for (double l : chords) {
    if (!(l >= 0.0)) throw DomainError("min_arc_length: chords must be >= 0");
    if (l > 0.0) ls.push_back(l);
  }
  if (ls.empty()) throw DomainError("min_arc_length: need a positive chord");
  const double ax = std::abs(x);
  double total = 0.0;
  for (double l : ls) total += l;
  if (ax == 0.0) return total;
  const std::size_t imax = static_cast<std::size_t>(std::max_element(ls.begin(), ls.end()) - ls.begin());
  const double lmax = ls[imax];
  auto angle = [&](std::size_t i, double theta) {
    return i == imax ? theta : std::asin(std::min(1.0, ls[i] / lmax * std::sin(theta)));
  };
  auto area = [&](double theta) {
    double a = 0.0;
    for (std::size_t i = 0; i < ls.size(); ++i) a += 0.25 * ls[i] * ls[i] * shape_p(angle(i, theta));
    return a;
  };
  if (area(kMaxBulgeAngle) < ax) throw InfeasibleError("min_arc_length: area exceeds every admissible arc");
  const double theta = find_root([&](double t) { return area(t) - ax; }, 0.0, kMaxBulgeAngle, 0.0).x;
  double len = 0.0;
  for (std::size_t i = 0; i < ls.size(); ++i) len += ls[i] * shape_q(angle(i, theta));
  return len;
}

double min_arc_length_transfer(std::span<const double> chords, double x, int sweeps) {
  const std::vector<double> ls(chords.begin(), chords.end());
  if (ls.empty()) throw DomainError("min_arc_length_transfer: no chords");
  const double ax = std::abs(x);
  double sq = 0.0;
  for (double l : ls) sq += l * l;
  if (!(sq > 0.0)) throw DomainError("min_arc_length_transfer: need a positive chord");
  std::vector<double> xs(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i) xs[i] = ax * ls[i] * ls[i] / sq;
  for (int s = 0; s < sweeps; ++s) {
    double moved = 0.0;
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        if (ls[i] == 0.0 && ls[j] == 0.0) continue;
        const EqualCurvatureSplit sp = equal_curvature_split(ls[i], ls[j], xs[i] + xs[j]);
        moved = std::max(moved, std::abs(sp.x1 - xs[i]));
        xs[i] = sp.x1;
        xs[j] = sp.x2;
      }
    if (moved < 1e-16) break;
  }
  double len = 0.0;
  for (std::size_t i = 0; i < ls.size(); ++i) len += arc_length(ls[i], xs[i]);
  return len;
}

double prop61_margin(std::span<const double> chords, double x, double s, std::span<const double> ells) {
  double sum = 0.0;
  for (double l : chords) {
    if (l > s) throw PreconditionError("prop61_margin: every chord must be <= s");
    sum += l;
  }
  const double L = min_arc_length(chords, x);
  double worst = kInf;
  for (double ell : ells) {
    if (!(ell > s && ell <= sum * (1.0 + 1e-15)))
      throw PreconditionError("prop61_margin: need s < ell <= sum of chords");
    worst = std::min(worst, L - ell * arc_length(s, std::abs(x) / ell));
  }
  return worst;
}

OracleReport prop61_random_check(std::uint64_t seed, int instances) {
  if (instances < 1) throw PreconditionError("prop61_random_check: instances >= 1");
  OracleReport r;
  r.name = "prop61";
  r.instances = instances;
  r.tolerance = 1e-9;
  r.worst_violation = kInf;
  constexpr double s = 1.0;
  const double x_cap = std::min(kChordArcMaxAbsX, kPi * s * s / 8.0);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> edges(3, kChordArcMaxEdges);
  std::uniform_real_distribution<double> chord(0.05, s);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < instances; ++k) {
    const int n = edges(rng);
    std::vector<double> ls;
    double sum = 0.0;
    while (sum <= s) {
      ls.assign(static_cast<std::size_t>(n), 0.0);
      sum = 0.0;
      for (double& l : ls) {
        l = chord(rng);
        sum += l;
      }
    }
    const double x = (unit(rng) < 0.5 ? -1.0 : 1.0) * x_cap * unit(rng);
    const double alpha = kChordArcMinAlpha + (1.0 - kChordArcMinAlpha) * unit(rng);
    std::vector<double> ells;
    for (int j = 1; j <= 16; ++j) ells.push_back(s + (sum - s) * j / 16.0);
    const double iso = polygon_iso_bound(n, alpha, x);
    if (iso > s && iso <= sum) ells.push_back(iso);
    const double m = prop61_margin(ls, x, s, ells);
    if (m < r.worst_violation) {
      r.worst_violation = m;
      std::string chords_text;
      for (double l : ls) chords_text += (chords_text.empty() ? "" : ",") + format_real(l);
      r.witness = "instance=" + std::to_string(k) + " X=" + format_real(x) + " chords=[" + chords_text + "]";
    }
  }
  // Hand-made near-tight case: six unit chords, ell = 6.
  const std::vector<double> six(6, 1.0);
  const double ell6[] = {6.0};
  r.values.emplace_back("tight_six_unit_chords", prop61_margin(six, 0.1, s, ell6));
  r.finish();
  return r;
}

OracleReport xi_random_check(std::uint64_t seed, int systems) {
  if (systems < 1) throw PreconditionError("xi_random_check: systems >= 1");
  OracleReport r;
  r.name = "xi_derivative";
  r.instances = systems;
  r.tolerance = 1e-6;
  r.worst_violation = kInf;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> chord(0.2, 1.5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < systems; ++k) {
    const double u = chord(rng);
    const double v = chord(rng);
    const double rho_lo = 0.55 * std::max(u, v);
    const double rho = rho_lo + (3.0 - rho_lo) * unit(rng);
    const XiDerivative d = xi_derivative_check(u, v, rho, 1e-5);
    const double rel = std::abs(d.analytic - d.numeric) / std::max(1.0, std::abs(d.analytic));
    if (-rel < r.worst_violation) {
      r.worst_violation = -rel;
      r.witness = describe({{"u", u}, {"v", v}, {"rho", rho}, {"analytic", d.analytic}, {"numeric", d.numeric}});
    }
  }
  r.finish();
  return r;
}

OracleReport px_family_check() {
  OracleReport r;
  r.name = "px_family";
  r.tolerance = 1e-9;
  r.worst_violation = kInf;
  double off_zero = kInf;
  double at_zero = kInf;
  for (double x : axis_points(-0.3, 0.5, 1e-3)) {
    const double v = px_region(x).length + penalty(6, 1.0, x);
    ++r.instances;
    if (v < r.worst_violation) {
      r.worst_violation = v;
      r.witness = describe({{"X", x}});
    }
    if (x == 0.0) at_zero = v;
    else off_zero = std::min(off_zero, v);
  }
  const double h = 1e-4;
  const double slope = (px_region(h).length - px_region(-h).length) / (2.0 * h);
  r.values = {{"at_zero", at_zero}, {"min_off_zero", off_zero}, {"slope_at_zero", slope},
              {"slope_error", std::abs(slope + fourth_root_12())}};
  r.finish();
  r.passed = r.passed && std::abs(at_zero) <= 1e-9 && off_zero > 1e-9 &&
             std::abs(slope + fourth_root_12()) <= 1e-4;
  return r;
}

OracleReport equal_curvature_random_check(std::uint64_t seed, int instances) {
  if (instances < 1) throw PreconditionError("equal_curvature_random_check: instances >= 1");
  OracleReport r;
  r.name = "equal_curvature";
  r.instances = instances;
  r.tolerance = 1e-9;
  r.worst_violation = kInf;
  std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dULL);
  std::uniform_real_distribution<double> chord(0.1, 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < instances; ++k) {
    const double l1 = chord(rng);
    const double l2 = chord(rng);
    const double x = 0.5 * unit(rng);
    const OracleReport one = equal_curvature_oracle(l1, l2, x, 2000);
    if (one.worst_violation < r.worst_violation) {
      r.worst_violation = one.worst_violation;
      r.witness = one.witness;
    }
  }
  r.finish();
  return r;
}

std::vector<OracleReport> run_oracles(std::uint64_t seed, int instances) {
  if (instances < 1) throw PreconditionError("run_oracles: instances >= 1");
  std::vector<OracleReport> out;
  out.push_back(xi_random_check(seed));
  out.push_back(equal_curvature_random_check(seed));
  out.push_back(px_family_check());
  out.push_back(untruncated_report());
  out.push_back(prop61_random_check(seed, instances));
  return out;
}

}  // namespace honeycomb
