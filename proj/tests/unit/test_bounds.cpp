#include <doctest.h>

#include <cmath>
#include <numbers>

#include "honeycomb/bounds.hpp"
#include "honeycomb/errors.hpp"
#include "honeycomb/numeric.hpp"

using namespace honeycomb;

TEST_SUITE("bounds") {
  TEST_CASE("constants") {
    CHECK(fourth_root_12() == doctest::Approx(1.8612097182041991).epsilon(1e-15));
    CHECK(polygon_constant(6) == doctest::Approx(2 * std::sqrt(3.0)));
    CHECK(polygon_constant(4) == doctest::Approx(4.0));
    CHECK_THROWS_AS(polygon_constant(2), DomainError);
    CHECK(area_floor(2) == doctest::Approx(2 * std::numbers::pi * std::sqrt(3.0) / 12));
    CHECK(area_floor(6) == doctest::Approx(2 * std::numbers::pi * std::sqrt(3.0) / 108));
    CHECK_THROWS_AS(area_floor(1), DomainError);
  }

  TEST_CASE("truncation is odd and clamps") {
    CHECK(truncate_bulge(0.7) == 0.5);
    CHECK(truncate_bulge(-0.7) == -0.5);
    CHECK(truncate_bulge(0.3) == 0.3);
    CHECK(truncate_bulge(-0.3) == -truncate_bulge(0.3));
  }

  TEST_CASE("the unit hexagon has zero deficit") {
    const double c = fourth_root_12();
    const RegionParams hex = RegionParams::same_sign(6, 1.0, 0.0);
    CHECK(std::abs(hex_deficit(2 * c, hex)) <= 1e-15);
    CHECK(polygon_iso_bound(6, 1.0, 0.0) == doctest::Approx(2 * c).epsilon(1e-15));
    CHECK(penalty(6, 1.0, 0.0) == doctest::Approx(-2 * c));
  }

  TEST_CASE("bound values") {
    CHECK(circle_bound(1.0) == doctest::Approx(2 * std::sqrt(std::numbers::pi)));
    CHECK(reflected_bound(1.0, -0.5) == doctest::Approx(2 * std::sqrt(2 * std::numbers::pi)));
    CHECK(dido_bound(2.0) == doctest::Approx(2 * std::sqrt(4 * std::numbers::pi)));
    // ChordArc reduces to PolygonIso at X = 0 and grows with |X|.
    CHECK(chord_arc_bound(6, 1.0, 0.0) == doctest::Approx(polygon_iso_bound(6, 1.0, 0.0)));
    CHECK(chord_arc_bound(6, 1.0, 0.05) > polygon_iso_bound(6, 1.0, 0.05));
  }

  TEST_CASE("dispatcher preconditions") {
    RegionParams p = RegionParams::same_sign(6, 0.1, 0.5);
    CHECK_THROWS_AS(perimeter_lower_bound(BoundKind::PolygonIso, p), PreconditionError);
    RegionParams q = RegionParams::same_sign(6, 1.0, -0.2);
    q.negative_part = 0.1;
    CHECK_THROWS_AS(perimeter_lower_bound(BoundKind::Reflected, q), PreconditionError);
    CHECK(perimeter_lower_bound(BoundKind::Circle, RegionParams::same_sign(6, 1.0, 0.0)) ==
          circle_bound(1.0));
  }
}
