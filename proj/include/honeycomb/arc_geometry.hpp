#pragma once

// Scalar geometry of a circular arc standing on a straight chord.
//
// An arc over a chord of length l is described by its half-angle theta, the angle
// between the chord and the tangent at either endpoint. With radius rho:
//   l         = 2 rho sin(theta)
//   arc       = 2 rho theta        = l * shape_q(theta)
//   |bulge|   = rho^2 (theta - sin theta cos theta) = l^2 * shape_p(theta) / 4
// theta = pi/2 is the semicircle; theta -> pi approaches the full circle.

#include <numbers>

namespace honeycomb {

/// Half-angle of an arc over its chord, in [0, pi).
struct BulgeAngle {
  double theta = 0.0;
};

/// One boundary edge: chord length plus signed area between arc and chord.
/// The sign is carried for callers; geometry below always uses |bulge|.
struct ChordArc {
  double chord = 0.0;
  double bulge = 0.0;
};

/// Largest half-angle used when inverting shape_p.
inline constexpr double kMaxBulgeAngle = std::numbers::pi - 1e-9;

/// Default absolute tolerance on theta for solve_bulge_angle.
inline constexpr double kBulgeAngleTol = 1e-12;

/// (theta - sin theta cos theta) / sin^2 theta, with the limit 0 at theta = 0.
/// Throws DomainError outside [0, pi).
double shape_p(double theta);

/// theta / sin theta, with the limit 1 at theta = 0. Throws DomainError outside [0, pi).
double shape_q(double theta);

/// Inverse of shape_p: the theta with shape_p(theta) = c. Throws DomainError for c < 0.
/// Values of c beyond shape_p(kMaxBulgeAngle) saturate at kMaxBulgeAngle.
BulgeAngle solve_bulge_angle(double c, double tol = kBulgeAngleTol);

/// Length of the circular arc enclosing |x| against a chord of the given length.
/// A zero chord means a full circle of area |x|.
double arc_length(double chord, double x);
inline double arc_length(const ChordArc& e) { return arc_length(e.chord, e.bulge); }

/// Half-angle of the arc for a ChordArc (0 for a zero chord or zero bulge).
BulgeAngle bulge_angle(double chord, double x);

/// Semicircle length enclosing |x| against a line: sqrt(2 pi |x|).
double dido_min_length(double x);

struct EqualCurvatureSplit {
  double x1 = 0.0;
  double x2 = 0.0;
  double total_length = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double radius = 0.0;  ///< common radius of curvature; +inf when x_total = 0
};

/// Distributes x_total over two chords with arcs of common curvature, which
/// minimizes the combined arc length. An arc beyond a semicircle always sits on the
/// longer chord (l1 on ties).
EqualCurvatureSplit equal_curvature_split(double l1, double l2, double x_total);

}  // namespace honeycomb
