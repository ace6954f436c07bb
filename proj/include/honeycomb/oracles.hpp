#pragma once

// Brute-force and finite-difference cross-checks of the two-chord calculus, the
// hexagon family P_X, the truncation counterexample and the chord-arc bound.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "honeycomb/arc_geometry.hpp"
#include "honeycomb/cluster.hpp"

namespace honeycomb {

struct OracleReport {
  std::string name;
  long long instances = 0;
  double worst_violation = 0.0;
  std::string witness;
  double tolerance = 0.0;
  bool passed = false;  ///< worst_violation >= -tolerance
  std::vector<std::pair<std::string, double>> values;

  double value(const std::string& key) const;
  void finish() { passed = worst_violation >= -tolerance; }
};

/// Two arcs of common radius rho over chords u and v (minor arcs).
struct TwoChordSystem {
  double u = 0.0;
  double v = 0.0;
  double theta_u = 0.0;
  double theta_v = 0.0;
  double rho = 0.0;

  /// Throws InfeasibleError unless max(u, v) <= 2 rho.
  static TwoChordSystem from_radius(double u, double v, double rho);
  double area() const;
  double length() const;
};

struct XiDerivative {
  double analytic = 0.0;
  double numeric = 0.0;
};

/// d(area)/du holding u + v, the total arc length and equal curvature fixed.
/// numeric is the central difference with step h; throws InfeasibleError when
/// u +- h leaves the feasible set.
XiDerivative xi_derivative_check(double u, double v, double rho, double h);

/// Grid minimum of arc(l1, t) + arc(l2, x_total - t) against equal_curvature_split.
/// worst_violation = grid minimum - split length. Throws PreconditionError for grid < 100.
OracleReport equal_curvature_oracle(double l1, double l2, double x_total, int grid);

struct PxRegion {
  Cluster cluster;  ///< planar: the hexagon and its outer face
  int face = 0;
  double side = 0.0;
  double length = 0.0;
};

/// Regular hexagon of area 1 - X with six arcs of bulge X/6 (inward when X < 0).
/// Throws DomainError for X >= 1.
PxRegion px_region(double x);

struct UntruncatedSearch {
  double chord_lo = 1.0;
  double chord_hi = 12.0;
  double theta_lo = 0.1;
  double theta_hi = 3.0;
  int samples = 11001;
};

struct CounterexampleWitness {
  double chord = 0.0;
  double theta = 0.0;
  double bulge = 0.0;  ///< per edge, signed
  double x_total = 0.0;
  double length = 0.0;
  double untruncated = 0.0;  ///< L + penalty(3, 1, X)
  double truncated = 0.0;    ///< L + penalty(3, 1, T)
  bool simple = false;       ///< the three arcs do not cross each other
};

/// Equilateral triangles of area 1 with three equal arcs; returns the most negative
/// untruncated value. Throws SearchError if no value below -0.1 is found.
CounterexampleWitness untruncated_counterexample(const UntruncatedSearch& search = {});
OracleReport untruncated_report(const UntruncatedSearch& search = {});

/// Least total arc length over same-sign bulges on the given chords summing to |x|,
/// from the common-curvature configuration. Throws InfeasibleError if even the
/// largest admissible arc cannot hold |x|.
double min_arc_length(std::span<const double> chords, double x);

/// The same minimum reached by repeated pairwise equal-curvature transfers.
double min_arc_length_transfer(std::span<const double> chords, double x, int sweeps = 200);

/// min over ells of [min_arc_length(chords, x) - ell * arc(s, |x| / ell)].
double prop61_margin(std::span<const double> chords, double x, double s, std::span<const double> ells);

/// Seeded random instances with chords <= 1 and |X| <= min(0.119, pi/8).
/// Throws PreconditionError for instances < 1.
OracleReport prop61_random_check(std::uint64_t seed, int instances);

/// 100 seeded random systems through xi_derivative_check.
OracleReport xi_random_check(std::uint64_t seed, int systems = 100);

/// L(P_X) + penalty(6, 1, X) on X in [-0.3, 0.5] and the tangency slope at X = 0.
OracleReport px_family_check();

/// Seeded random chord pairs through equal_curvature_oracle.
OracleReport equal_curvature_random_check(std::uint64_t seed, int instances = 50);

/// Every oracle in a fixed order.
std::vector<OracleReport> run_oracles(std::uint64_t seed, int instances);

}  // namespace honeycomb
