#include <doctest.h>

#include <cmath>
#include <numbers>

#include "honeycomb/arc_geometry.hpp"
#include "honeycomb/errors.hpp"

using namespace honeycomb;

TEST_SUITE("arc_geometry") {
  TEST_CASE("shape functions at the semicircle") {
    const double h = std::numbers::pi / 2;
    CHECK(shape_p(h) == doctest::Approx(h).epsilon(1e-15));
    CHECK(shape_q(h) == doctest::Approx(h).epsilon(1e-15));
    CHECK(shape_p(0.0) == 0.0);
    CHECK(shape_q(0.0) == 1.0);
  }

  TEST_CASE("series and direct forms agree near the switch") {
    // Both sides of the series cutoff should be smooth.
    for (double t : {0.2499, 0.25, 0.2501, 1e-4, 1.0001e-4}) {
      const double s = std::sin(t);
      const double direct = (t - s * std::cos(t)) / (s * s);
      CHECK(shape_p(t) == doctest::Approx(direct).epsilon(1e-9));
    }
    CHECK(shape_p(1e-6) == doctest::Approx(2e-6 / 3).epsilon(1e-9));
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(shape_p(-0.1), DomainError);
    CHECK_THROWS_AS(shape_q(std::numbers::pi), DomainError);
    CHECK_THROWS_AS(solve_bulge_angle(-1.0), DomainError);
    CHECK_THROWS_AS(arc_length(-1.0, 0.1), DomainError);
  }

  TEST_CASE("solve_bulge_angle inverts shape_p") {
    for (double c : {1e-12, 1e-8, 1e-3, 0.1, 0.5, 1.0, 1.5707, 3.0, 10.0}) {
      const double t = solve_bulge_angle(c).theta;
      CHECK(shape_p(t) == doctest::Approx(c).epsilon(1e-9));
    }
    CHECK(solve_bulge_angle(1e30).theta == kMaxBulgeAngle);
  }

  TEST_CASE("arc length limits") {
    CHECK(arc_length(1.0, 0.0) == 1.0);
    // semicircle on a unit chord: area pi/8, length pi/2
    CHECK(arc_length(1.0, std::numbers::pi / 8) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-10));
    CHECK(arc_length(0.0, 1.0) == doctest::Approx(2 * std::sqrt(std::numbers::pi)));
    CHECK(arc_length(2.0, 0.3) == arc_length(2.0, -0.3));
    CHECK(dido_min_length(std::numbers::pi / 8) == doctest::Approx(std::numbers::pi / 2));
  }

  TEST_CASE("arc length is increasing in |x|") {
    double prev = 1.0;
    for (int k = 1; k <= 200; ++k) {
      const double l = arc_length(1.0, 0.01 * k);
      CHECK(l > prev);
      prev = l;
    }
  }

  TEST_CASE("equal curvature split shares the radius") {
    const auto s = equal_curvature_split(1.0, 0.6, 0.2);
    CHECK(s.x1 + s.x2 == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(1.0 / (2 * std::sin(s.theta1)) == doctest::Approx(0.6 / (2 * std::sin(s.theta2))).epsilon(1e-9));
    CHECK(s.x1 > s.x2);
    const auto z = equal_curvature_split(1.0, 0.6, 0.0);
    CHECK(z.total_length == doctest::Approx(1.6));
    CHECK(std::isinf(z.radius));
    CHECK_THROWS_AS(equal_curvature_split(0.0, 0.0, 0.1), DomainError);
    CHECK_THROWS_AS(equal_curvature_split(1.0, 1.0, -0.1), DomainError);
  }
}
