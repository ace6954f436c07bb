#include "honeycomb/arc_geometry.hpp"

#include <cmath>
#include <limits>

#include "honeycomb/errors.hpp"
#include "honeycomb/numeric.hpp"

namespace honeycomb {
namespace {

constexpr double kSeriesCrossover = 1e-4;
// Below this the numerator theta - sin(theta)cos(theta) = (2t - sin 2t)/2 is
// summed as a power series to avoid cancellation.
constexpr double kNumeratorSeriesLimit = 0.25;

void check_angle(double theta, const char* who) {
  if (!(theta >= 0.0 && theta < std::numbers::pi))
    throw DomainError(std::string(who) + ": theta must lie in [0, pi)");
}

double p_numerator_series(double theta) {
  // (2t - sin 2t)/2 = sum_{k>=1} (-1)^{k+1} (2t)^{2k+1} / (2 (2k+1)!)
  const double u = 2.0 * theta;
  const double u2 = u * u;
  double term = u * u2 / 6.0;
  double sum = 0.0;
  for (int k = 1; k < 30; ++k) {
    const double next = sum + term;
    if (next == sum) break;
    sum = next;
    term *= -u2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  return 0.5 * sum;
}

}  // namespace

double shape_p(double theta) {
  check_angle(theta, "shape_p");
  if (theta == 0.0) return 0.0;
  if (theta < kSeriesCrossover) {
    const double t2 = theta * theta;
    return theta * (2.0 / 3.0 + t2 * (4.0 / 45.0));
  }
  const double s = std::sin(theta);
  if (theta < kNumeratorSeriesLimit) return p_numerator_series(theta) / (s * s);
  return (theta - s * std::cos(theta)) / (s * s);
}

double shape_q(double theta) {
  check_angle(theta, "shape_q");
  if (theta < kSeriesCrossover) {
    const double t2 = theta * theta;
    return 1.0 + t2 * (1.0 / 6.0 + t2 * (7.0 / 360.0));
  }
  return theta / std::sin(theta);
}

BulgeAngle solve_bulge_angle(double c, double tol) {
  if (!(c >= 0.0)) throw DomainError("solve_bulge_angle: c must be >= 0");
  if (c == 0.0) return {0.0};
  static const double p_max = shape_p(kMaxBulgeAngle);
  if (c >= p_max) return {kMaxBulgeAngle};
  // p(theta) >= 2 theta / 3 on [0, pi), so the root lies below 1.5 c; the extra
  // factor keeps the sign change when rounding makes p(1.5 c) land on c.
  const double hi = std::min(kMaxBulgeAngle, 1.5 * c * (1.0 + 1e-6));
  const auto r = find_root([c](double t) { return shape_p(t) - c; }, 0.0, hi, tol);
  return {r.x};
}

BulgeAngle bulge_angle(double chord, double x) {
  if (!(chord >= 0.0)) throw DomainError("bulge_angle: chord must be >= 0");
  if (chord == 0.0 || x == 0.0) return {0.0};
  return solve_bulge_angle(4.0 * std::abs(x) / (chord * chord));
}

double arc_length(double chord, double x) {
  if (!(chord >= 0.0)) throw DomainError("arc_length: chord must be >= 0");
  const double ax = std::abs(x);
  if (ax == 0.0) return chord;
  if (chord == 0.0) return 2.0 * std::sqrt(std::numbers::pi * ax);
  const double c = 4.0 * ax / (chord * chord);
  static const double p_max = shape_p(kMaxBulgeAngle);
  // Past the angle cap the arc is a full circle to within 1e-9 relative.
  if (c >= p_max) return 2.0 * std::sqrt(std::numbers::pi * ax);
  return chord * shape_q(solve_bulge_angle(c).theta);
}

double dido_min_length(double x) { return std::sqrt(2.0 * std::numbers::pi * std::abs(x)); }

EqualCurvatureSplit equal_curvature_split(double l1, double l2, double x_total) {
  if (!(l1 >= 0.0 && l2 >= 0.0)) throw DomainError("equal_curvature_split: chords must be >= 0");
  if (l1 == 0.0 && l2 == 0.0)
    throw DomainError("equal_curvature_split: at least one chord must be positive");
  if (!(x_total >= 0.0)) throw DomainError("equal_curvature_split: x_total must be >= 0");

  const bool first_long = l1 >= l2;
  const double u = first_long ? l1 : l2;
  const double v = first_long ? l2 : l1;
  const double ratio = v / u;

  // The longer chord's half-angle parametrizes the family; the shorter arc shares
  // the radius, so sin(theta_v) = (v/u) sin(theta_u) on its minor branch.
  auto short_angle = [ratio](double tu) { return std::asin(std::min(1.0, ratio * std::sin(tu))); };
  auto area = [&](double tu) {
    return 0.25 * (u * u * shape_p(tu) + v * v * shape_p(short_angle(tu)));
  };

  EqualCurvatureSplit out;
  double tu = 0.0;
  if (x_total > 0.0) {
    const double cap_area = area(kMaxBulgeAngle);
    if (x_total > cap_area)
      throw InfeasibleError("equal_curvature_split: area exceeds the common-curvature family");
    tu = find_root([&](double t) { return area(t) - x_total; }, 0.0, kMaxBulgeAngle, 0.0).x;
  }
  const double tv = short_angle(tu);
  const double xu = 0.25 * u * u * shape_p(tu);
  const double xv = std::max(0.0, x_total - xu);
  out.theta1 = first_long ? tu : tv;
  out.theta2 = first_long ? tv : tu;
  out.x1 = first_long ? xu : xv;
  out.x2 = first_long ? xv : xu;
  out.total_length = arc_length(l1, out.x1) + arc_length(l2, out.x2);
  out.radius = tu > 0.0 ? u / (2.0 * std::sin(tu)) : std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace honeycomb
