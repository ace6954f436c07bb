#pragma once

// Half-edge model of a partition of the plane or of a flat torus into regions
// bounded by circular arcs.
//
// A half-edge runs from `origin` to the copy of `target` shifted by
// wrap[0] * v1 + wrap[1] * v2 (always (0, 0) on the plane). Its chord is that
// straight segment; `bulge` is the signed area between arc and chord, positive
// when the arc bows out of the face the half-edge bounds.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <unordered_map>
#include <vector>

#include "honeycomb/bounds.hpp"

namespace honeycomb {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

using Wrap = std::array<int, 2>;

struct Vertex {
  int id = 0;
  Vec2 pos;
};

struct HalfEdge {
  int id = 0;
  int origin = 0;
  int target = 0;
  double bulge = 0.0;
  int twin = 0;
  Wrap wrap{0, 0};
};

struct Face {
  int id = 0;
  std::vector<int> cycle;  ///< half-edge ids in boundary order
  bool outer = false;      ///< unbounded face of a planar cluster
};

enum class DomainKind { Plane, Torus };

struct Domain {
  DomainKind kind = DomainKind::Plane;
  Vec2 v1;  ///< torus lattice vectors (unused on the plane)
  Vec2 v2;

  static Domain plane() { return {}; }
  static Domain torus(Vec2 a, Vec2 b) { return {DomainKind::Torus, a, b}; }
  double cell_area() const noexcept { return v1.x * v2.y - v1.y * v2.x; }
};

enum class Validation {
  Strict,   ///< also require bulge(e) + bulge(twin(e)) = 0
  Lenient,  ///< structure only; bulge defects are left to conservation_checks
};

struct RegionStats {
  int face = 0;
  int n = 0;
  double length = 0.0;
  double x = 0.0;
  double t = 0.0;
  double area = 0.0;
  double alpha = 0.0;
  double delta = 0.0;
};

/// Immutable once built. Ids are arbitrary distinct integers; containers keep input order.
class Cluster {
 public:
  /// Validates the structure and throws ClusterError naming the first defect.
  static Cluster build(Domain domain, std::vector<Vertex> vertices, std::vector<HalfEdge> half_edges,
                       std::vector<Face> faces, Validation mode = Validation::Strict);

  const Domain& domain() const noexcept { return domain_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<HalfEdge>& half_edges() const noexcept { return half_edges_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }

  const Vertex& vertex(int id) const;
  const HalfEdge& half_edge(int id) const;
  const Face& face(int id) const;

  /// Straight segment of the half-edge; exactly the negation of its twin's.
  Vec2 chord(int half_edge_id) const;
  double chord_length(int half_edge_id) const;
  /// Arc length of the half-edge; identical for both halves of a pair.
  double arc_length(int half_edge_id) const;

 private:
  Domain domain_;
  std::vector<Vertex> vertices_;
  std::vector<HalfEdge> half_edges_;
  std::vector<Face> faces_;
  std::unordered_map<int, std::size_t> vertex_index_;
  std::unordered_map<int, std::size_t> edge_index_;
  std::unordered_map<int, std::size_t> face_index_;
  std::vector<Vec2> chords_;  ///< by edge index
};

/// Assembles clusters from face cycles given as lifted vertices. Each corner is a
/// vertex id plus the lattice cell of the copy used. Half-edges and their twins are
/// matched automatically; an unmatched half-edge makes build() throw.
class ClusterBuilder {
 public:
  explicit ClusterBuilder(Domain domain) : domain_(domain) {}

  int add_vertex(Vec2 pos);
  struct Corner {
    int vertex = 0;
    Wrap cell{0, 0};
  };
  /// Returns the face id.
  int add_face(const std::vector<Corner>& corners, bool outer = false);
  Cluster build(Validation mode = Validation::Strict) const;

 private:
  Domain domain_;
  std::vector<Vertex> vertices_;
  std::vector<HalfEdge> half_edges_;
  std::vector<Face> faces_;
  std::map<std::tuple<int, int, int, int>, int> by_key_;  ///< (origin, target, wrap) -> edge id
};

/// Copy of `cluster` with one bulge replaced (twin untouched), built leniently.
Cluster with_bulge(const Cluster& cluster, int half_edge_id, double bulge);

/// Copy with bulges assigned per pair: bulge(e) = value, bulge(twin) = -value, for
/// every e with id < twin id, taking values in half-edge order from `values`.
Cluster with_pair_bulges(const Cluster& cluster, const std::vector<double>& values);

/// Shoelace area of the chord polygon, lifted through the wraps.
double chord_polygon_area(const Cluster& cluster, int face_id);

/// Chord polygon area plus the bulges around the cycle.
double region_area(const Cluster& cluster, int face_id);

RegionStats region_stats(const Cluster& cluster, int face_id);

/// region_area >= area_floor(N); false for N < 2.
bool check_area_floor(const Cluster& cluster, int face_id);

struct EulerReport {
  long long vertices = 0;
  long long edges = 0;
  long long faces = 0;
  long long chi = 0;
  double hex_defect = 0.0;  ///< sum over faces of 1 - N/6, exact for integer N
  bool cubic = false;
  /// chi == hex_defect; only meaningful (and only asserted) when cubic.
  bool identity_holds = false;
};

EulerReport euler_defect(const Cluster& cluster);

struct BulgeViolation {
  int edge = 0;
  int twin = 0;
  double sum = 0.0;
};

struct ConservationReport {
  double bulge_sum = 0.0;  ///< over all half-edges, correctly rounded
  double t_sum = 0.0;      ///< sum of T(P) over faces, correctly rounded
  std::vector<BulgeViolation> violations;
  bool passed = false;
};

/// Sums are exact (correctly rounded); passes when both are within tol of 0 and
/// every twin pair cancels to within tol.
ConservationReport conservation_checks(const Cluster& cluster, double tol = 0.0);

struct HoneycombReport {
  double perimeter = 0.0;  ///< each arc counted once
  double face_length_sum = 0.0;
  double bound = 0.0;  ///< 12^{1/4} * sum of alpha
  double margin = 0.0;
  std::vector<RegionStats> stats;
  double delta_sum = 0.0;
};

/// Torus cluster whose faces all pass check_area_floor; PreconditionError otherwise,
/// naming the offending face.
HoneycombReport honeycomb_bound(const Cluster& cluster);

}  // namespace honeycomb
