#include "honeycomb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "honeycomb/arc_geometry.hpp"
#include "honeycomb/errors.hpp"
#include "honeycomb/numeric.hpp"

namespace honeycomb {

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::PolygonIso: return "PolygonIso";
    case BoundKind::Circle: return "Circle";
    case BoundKind::Reflected: return "Reflected";
    case BoundKind::Dido: return "Dido";
    case BoundKind::ChordArc: return "ChordArc";
  }
  return "?";
}

double truncate_bulge(double x) noexcept { return std::clamp(x, -kTruncation, kTruncation); }

double polygon_constant(int n) {
  if (n < 3) throw DomainError("polygon_constant: N must be >= 3, got " + std::to_string(n));
  return n * std::tan(std::numbers::pi / n);
}

double area_floor(int m) {
  if (m < 2) throw DomainError("area_floor: M must be >= 2, got " + std::to_string(m));
  const double v = 2.0 * std::numbers::pi * std::numbers::sqrt3 / (3.0 * m * m);
  return std::min(v, 1.0);
}

double penalty(int n, double alpha, double t) noexcept {
  const double c = fourth_root_12();
  return t * c + (n - 6) * kEdgePenalty - 2.0 * alpha * c;
}

double hex_deficit(double length, const RegionParams& params) noexcept {
  return length + penalty(params.n, params.alpha, params.t);
}

double polygon_iso_bound(int n, double alpha, double x) {
  return 2.0 * std::sqrt((alpha - x) * polygon_constant(n));
}

double circle_bound(double alpha) noexcept { return 2.0 * std::sqrt(std::numbers::pi * alpha); }

double reflected_bound(double alpha, double negative_part) noexcept {
  return 2.0 * std::sqrt((alpha - 2.0 * negative_part) * std::numbers::pi);
}

double dido_bound(double abs_sum) noexcept {
  return abs_sum * std::sqrt(2.0 * std::numbers::pi / kTruncation);
}

double chord_arc_bound(int n, double alpha, double x) {
  const double l = polygon_iso_bound(n, alpha, x);
  return l * arc_length(1.0, std::abs(x) / l);
}

double perimeter_lower_bound(BoundKind kind, const RegionParams& p) {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
  };
  switch (kind) {
    case BoundKind::PolygonIso:
      need(p.n >= 3, "PolygonIso: N >= 3");
      need(p.alpha - p.x >= 0.0, "PolygonIso: alpha - X >= 0");
      return polygon_iso_bound(p.n, p.alpha, p.x);
    case BoundKind::Circle:
      need(p.alpha >= 0.0, "Circle: alpha >= 0");
      return circle_bound(p.alpha);
    case BoundKind::Reflected: {
      const double neg = p.negative_part.value_or(std::min(p.x, 0.0));
      need(neg <= 0.0, "Reflected: negative part X_J <= 0");
      need(p.alpha - 2.0 * neg >= 0.0, "Reflected: alpha - 2 X_J >= 0");
      return reflected_bound(p.alpha, neg);
    }
    case BoundKind::Dido: {
      const double sum = p.abs_sum.value_or(std::abs(p.x));
      need(sum >= 0.0, "Dido: X_D >= 0");
      return dido_bound(sum);
    }
    case BoundKind::ChordArc:
      need(p.n >= 3, "ChordArc: N >= 3");
      need(p.n <= kChordArcMaxEdges, "ChordArc: N <= 7");
      need(std::abs(p.x) <= kChordArcMaxAbsX, "ChordArc: |X| <= 0.119");
      need(p.alpha >= kChordArcMinAlpha && p.alpha <= 1.0, "ChordArc: 0.996 <= alpha <= 1");
      return chord_arc_bound(p.n, p.alpha, p.x);
  }
  throw PreconditionError("perimeter_lower_bound: unknown bound kind");
}

}  // namespace honeycomb
