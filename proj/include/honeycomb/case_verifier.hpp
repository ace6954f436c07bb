#pragma once

// Branch-by-branch replay of the case analysis behind the hexagonal isoperimetric
// inequality. Each verify_* call returns one Certificate whose branches cover the
// sub-cases; all of them are deterministic functions of the ScanConfig.

#include <span>
#include <vector>

#include "honeycomb/bounds.hpp"
#include "honeycomb/scan.hpp"

namespace honeycomb {

struct Thresholds {
  double x_minus = 0.0;
  double x_plus = 0.0;
  /// |Circle(1) - PolygonIso(N,1,x_plus)|; 0 for N = 3 where x_plus is a fixed input.
  double plus_residual = 0.0;
  /// |Reflected(1,x_minus) - PolygonIso(N,1,x_minus)|.
  double minus_residual = 0.0;
};

/// Case-two switching points. Throws DomainError for N < 3.
Thresholds region_thresholds(int n);

/// Below this X the Dido bound exceeds the reflected bound: -1 - sqrt(1 + alpha).
double dido_crossover(double alpha);

/// One box where the generic bounds are too weak and the chord-arc bound takes over.
struct ExceptionalWindow {
  int n = 6;
  double alpha_lo = 0.996;
  double alpha_hi = 1.0;
  double x_lo = 0.0;
  double x_hi = 0.0;

  bool contains(int n_, double alpha, double x, double pad = 0.0) const noexcept {
    return n_ == n && alpha >= alpha_lo - pad && alpha <= alpha_hi + pad && x >= x_lo - pad &&
           x <= x_hi + pad;
  }
};

std::span<const ExceptionalWindow> exceptional_windows();
bool in_exceptional_window(int n, double alpha, double x, double pad = 0.0);

/// Piecewise rule without the windows: Circle above x_plus, PolygonIso in between,
/// Reflected below x_minus and Dido below the crossover.
BoundKind select_generic_bound(int n, double alpha, double x);

/// The generic rule with ChordArc inside the exceptional windows.
/// Throws PreconditionError for alpha < 1/4.
BoundKind select_bound(int n, double alpha, double x);

/// bound(kind) + penalty(N, alpha, X) for same-sign bulges (T = X).
double case_two_margin(BoundKind kind, int n, double alpha, double x);

Certificate verify_digon(const ScanConfig& cfg);
Certificate verify_case_one(const ScanConfig& cfg);
Certificate verify_case_two_low_area(const ScanConfig& cfg);
Certificate verify_case_two_main(const ScanConfig& cfg);
Certificate verify_taylor_window(const ScanConfig& cfg);

struct InscribedPolygon {
  double t = 0.0;  ///< common length of the N - 1 free edges
  double area = 0.0;
  double x = 0.0;  ///< 0.996 - area
};

/// Largest-area N-gon inscribed in a circle of radius r with one edge of length
/// max(1, t). Throws InfeasibleError if r < 1/2 (no chord of length 1 fits).
InscribedPolygon inscribed_polygon(int n, double r);

/// max(1, t(a)) + (N - 1) t(a) + penalty(N, 1, 0.996 - A_N(b)). Requires a <= b.
double long_chord_margin(int n, double a, double b);

Certificate verify_long_chord(const ScanConfig& cfg);

/// The six certificates in a fixed order.
std::vector<Certificate> verify_all(const ScanConfig& cfg);

}  // namespace honeycomb
