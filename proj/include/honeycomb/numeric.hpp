#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <string>

#include "honeycomb/errors.hpp"

namespace honeycomb {

/// 12^{1/4}; half the perimeter of the unit-area regular hexagon.
/// Every module reads this one value so all appearances agree bit-for-bit.
double fourth_root_12() noexcept;

/// Per-edge penalty weight in the hexagonal deficit, taken as exact.
inline constexpr double kEdgePenalty = 0.0505;

/// Truncation level for bulge areas.
inline constexpr double kTruncation = 0.5;

struct RootResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

/// Bracketed secant/bisection hybrid for a continuous f with a sign change on [lo, hi].
/// Stops when the bracket is no wider than xtol (xtol = 0 runs to machine resolution).
/// A secant step that fails to halve the bracket forces the next step to bisect, so
/// the iteration count is bounded by roughly twice that of pure bisection.
template <class F>
RootResult find_root(F&& f, double lo, double hi, double xtol, int max_iter = 400) {
  if (!(lo <= hi)) throw DomainError("find_root: empty bracket");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, flo, 0};
  if (fhi == 0.0) return {hi, fhi, 0};
  if (std::signbit(flo) == std::signbit(fhi))
    throw InfeasibleError("find_root: no sign change on bracket");

  bool force_bisect = false;
  int it = 0;
  for (; it < max_iter; ++it) {
    const double width = hi - lo;
    const double mid = lo + 0.5 * width;
    if (width <= xtol || mid <= lo || mid >= hi) break;
    double x = mid;
    if (!force_bisect) {
      const double s = hi - fhi * (hi - lo) / (fhi - flo);
      if (s > lo && s < hi) x = s;
    }
    const double fx = f(x);
    if (fx == 0.0) return {x, fx, it + 1};
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    force_bisect = (hi - lo) > 0.5 * width;
  }
  return std::abs(flo) <= std::abs(fhi) ? RootResult{lo, flo, it} : RootResult{hi, fhi, it};
}

/// Correctly rounded sum of doubles (Shewchuk partials). A set of values that
/// cancels exactly in real arithmetic sums to exactly 0.0.
double exact_sum(std::span<const double> values);

/// Locale-independent shortest-round-trip-safe rendering with 17 significant digits.
std::string format_real(double value);

}  // namespace honeycomb
