#pragma once

// Constants and perimeter lower bounds for a region P with N boundary edges,
// truncated area alpha = min(1, area), signed bulge total X and truncated total T.

#include <optional>
#include <string_view>

namespace honeycomb {

enum class BoundKind { PolygonIso, Circle, Reflected, Dido, ChordArc };

std::string_view to_string(BoundKind kind);

struct RegionParams {
  int n = 6;
  double alpha = 1.0;
  double x = 0.0;  ///< signed sum of bulges
  double t = 0.0;  ///< sum of truncated bulges
  /// Sum of the negative bulges. Defaults to min(x, 0), exact when all bulges share a sign.
  std::optional<double> negative_part;
  /// Sum of |bulge|. Defaults to |x|, exact when all bulges share a sign.
  std::optional<double> abs_sum;

  /// Same-sign bulges of magnitude at most 1/2, where T = X.
  static RegionParams same_sign(int n, double alpha, double x) { return {n, alpha, x, x, {}, {}}; }
};

/// Clamp to [-1/2, 1/2]; odd and 1-Lipschitz.
double truncate_bulge(double x) noexcept;

/// N tan(pi/N): perimeter^2 / (4 area) of the regular N-gon. Throws DomainError for N < 3.
double polygon_constant(int n);

/// min(2 pi sqrt(3) / (3 M^2), 1). Throws DomainError for M < 2.
double area_floor(int m);

/// T 12^{1/4} + (N - 6) 0.0505 - 2 alpha 12^{1/4}.
double penalty(int n, double alpha, double t) noexcept;

/// L + penalty(N, alpha, T). Nonnegative for every admissible region.
double hex_deficit(double length, const RegionParams& params) noexcept;

// Individual bounds without precondition checks, for inner loops.
double polygon_iso_bound(int n, double alpha, double x);
double circle_bound(double alpha) noexcept;
double reflected_bound(double alpha, double negative_part) noexcept;
double dido_bound(double abs_sum) noexcept;
/// L * arc(1, |X| / L) with L the PolygonIso value.
double chord_arc_bound(int n, double alpha, double x);

/// Checked dispatcher. Throws PreconditionError naming the violated constraint.
double perimeter_lower_bound(BoundKind kind, const RegionParams& params);

/// Preconditions under which the ChordArc bound is proved (chords at most 1 assumed).
inline constexpr double kChordArcMaxAbsX = 0.119;
inline constexpr double kChordArcMinAlpha = 0.996;
inline constexpr int kChordArcMaxEdges = 7;

}  // namespace honeycomb
