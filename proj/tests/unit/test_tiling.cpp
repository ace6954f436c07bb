#include <doctest.h>

#include <cmath>
#include <vector>

#include "honeycomb/errors.hpp"
#include "honeycomb/numeric.hpp"
#include "honeycomb/tiling.hpp"

using namespace honeycomb;

TEST_SUITE("tiling") {
  TEST_CASE("combinatorics") {
    const Cluster h = generate_tiling(TilingKind::Hexagon, 2, 2);
    const EulerReport e = euler_defect(h);
    CHECK(e.faces == 4);
    CHECK(e.vertices == 8);
    CHECK(e.edges == 12);
    const Cluster t = generate_tiling(TilingKind::Triangle, 2, 3);
    CHECK(t.faces().size() == 12);
    for (const Face& f : t.faces()) CHECK(f.cycle.size() == 3);
    CHECK_THROWS_AS(generate_tiling(TilingKind::Square, 0, 2), PreconditionError);
  }

  TEST_CASE("unit areas") {
    for (TilingKind k : {TilingKind::Hexagon, TilingKind::Square, TilingKind::Triangle}) {
      const Cluster c = generate_tiling(k, 3, 3);
      for (const Face& f : c.faces()) CHECK(std::abs(region_area(c, f.id) - 1.0) <= 1e-12);
    }
  }

  TEST_CASE("torus margins") {
    const double c = fourth_root_12();
    for (int k : {1, 4, 9}) {
      const HoneycombReport hex = honeycomb_bound(generate_tiling(TilingKind::Hexagon, k, 1));
      CHECK(std::abs(hex.perimeter - k * c) <= 1e-9 * k);
      const HoneycombReport sq = honeycomb_bound(generate_tiling(TilingKind::Square, k, 1));
      CHECK(std::abs(sq.margin - k * (2 - c)) <= 1e-9 * k);
    }
  }

  TEST_CASE("disk ratio converges like 1/r") {
    const double c = fourth_root_12();
    const double e50 = std::abs(disk_ratio(TilingKind::Hexagon, 50) - c);
    const double e100 = std::abs(disk_ratio(TilingKind::Hexagon, 100) - c);
    CHECK(e100 < e50);
    CHECK(e50 / e100 > 1.8);
    CHECK(disk_ratio(TilingKind::Square, 100) > 2.0);
    CHECK_THROWS_AS(disk_ratio(TilingKind::Square, 1.0), PreconditionError);
  }

  TEST_CASE("small area threshold") {
    std::vector<double> a398(398, 1.0), a399(399, 1.0);
    CHECK(small_area_bound(a398).holds);
    CHECK_FALSE(small_area_bound(a399).holds);
    CHECK_THROWS_AS(small_area_bound(std::vector<double>{}), PreconditionError);
    CHECK_THROWS_AS(small_area_bound(std::vector<double>{1.5}), PreconditionError);
  }

  TEST_CASE("kind names") {
    CHECK(parse_tiling_kind("square") == TilingKind::Square);
    CHECK_FALSE(parse_tiling_kind("pentagon"));
    CHECK(to_string(TilingKind::Triangle) == "triangle");
  }
}
