#include <doctest.h>

#include <cmath>

#include "honeycomb/cluster.hpp"
#include "honeycomb/errors.hpp"
#include "honeycomb/numeric.hpp"
#include "honeycomb/tiling.hpp"

using namespace honeycomb;

namespace {

// Unit square with its outer face.
Cluster planar_square() {
  ClusterBuilder b(Domain::plane());
  const int v0 = b.add_vertex({0, 0}), v1 = b.add_vertex({1, 0}), v2 = b.add_vertex({1, 1}), v3 = b.add_vertex({0, 1});
  b.add_face({{v0}, {v1}, {v2}, {v3}});
  b.add_face({{v0}, {v3}, {v2}, {v1}}, true);
  return b.build();
}

}  // namespace

TEST_SUITE("cluster") {
  TEST_CASE("builder matches twins") {
    const Cluster c = planar_square();
    CHECK(c.half_edges().size() == 8);
    for (const HalfEdge& e : c.half_edges()) {
      const HalfEdge& t = c.half_edge(e.twin);
      CHECK(t.twin == e.id);
      CHECK(c.chord(e.id).x == -c.chord(t.id).x);
      CHECK(c.chord(e.id).y == -c.chord(t.id).y);
    }
    CHECK(chord_polygon_area(c, 0) == doctest::Approx(1.0));
    CHECK(chord_polygon_area(c, 1) == doctest::Approx(-1.0));
  }

  TEST_CASE("bulges change area and length") {
    const Cluster c = planar_square();
    std::vector<double> vals{0.1, 0.0, 0.0, 0.0};
    const Cluster b = with_pair_bulges(c, vals);
    CHECK(region_area(b, 0) + region_area(b, 1) == doctest::Approx(0.0).epsilon(1e-15));
    const RegionStats s = region_stats(b, 0);
    CHECK(s.n == 4);
    CHECK(std::abs(s.x) == doctest::Approx(0.1));
    CHECK(s.length > 4.0);
  }

  TEST_CASE("strict validation rejects unbalanced bulges") {
    const Cluster c = planar_square();
    CHECK_NOTHROW(with_bulge(c, c.half_edges()[0].id, 0.2));
    std::vector<HalfEdge> edges = c.half_edges();
    edges[0].bulge = 0.2;
    CHECK_THROWS_AS(Cluster::build(c.domain(), c.vertices(), edges, c.faces(), Validation::Strict), ClusterError);
    const Cluster lenient = Cluster::build(c.domain(), c.vertices(), edges, c.faces(), Validation::Lenient);
    const ConservationReport r = conservation_checks(lenient);
    CHECK_FALSE(r.passed);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].sum == 0.2);
  }

  TEST_CASE("structural errors") {
    const Cluster c = planar_square();
    auto edges = c.half_edges();
    edges[0].twin = edges[0].id;
    CHECK_THROWS_AS(Cluster::build(c.domain(), c.vertices(), edges, c.faces()), ClusterError);
    auto faces = c.faces();
    faces[0].cycle.pop_back();
    CHECK_THROWS_AS(Cluster::build(c.domain(), c.vertices(), c.half_edges(), faces), ClusterError);
    auto verts = c.vertices();
    verts[1].id = verts[0].id;
    CHECK_THROWS_AS(Cluster::build(c.domain(), verts, c.half_edges(), c.faces()), ClusterError);
  }

  TEST_CASE("torus identities exact") {
    for (TilingKind k : {TilingKind::Hexagon, TilingKind::Square, TilingKind::Triangle}) {
      CAPTURE(to_string(k));
      const Cluster c = generate_tiling(k, 3, 4);
      const EulerReport e = euler_defect(c);
      CHECK(e.chi == 0);
      if (k == TilingKind::Hexagon) {
        CHECK(e.cubic);
        CHECK(e.identity_holds);
        CHECK(e.hex_defect == 0.0);
      } else {
        CHECK_FALSE(e.cubic);
      }
      const ConservationReport r = conservation_checks(c);
      CHECK(r.passed);
      CHECK(r.t_sum == 0.0);
    }
  }

  TEST_CASE("honeycomb bound with bulges keeps the margin sum") {
    const Cluster hex = generate_tiling(TilingKind::Hexagon, 2, 2);
    std::vector<double> vals;
    for (std::size_t i = 0; i < hex.half_edges().size() / 2; ++i) vals.push_back(0.01 * ((i % 3) - 1.0));
    const Cluster b = with_pair_bulges(hex, vals);
    CHECK(conservation_checks(b).t_sum == 0.0);
    const HoneycombReport r = honeycomb_bound(b);
    CHECK(r.face_length_sum == doctest::Approx(2 * r.perimeter).epsilon(1e-14));
    CHECK(r.margin == doctest::Approx(r.delta_sum / 2).epsilon(1e-9));
    CHECK(r.margin >= -1e-9);
  }

  TEST_CASE("planar clusters have no honeycomb bound") {
    CHECK_THROWS_AS(honeycomb_bound(planar_square()), PreconditionError);
  }
}
