#include "honeycomb/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "honeycomb/arc_geometry.hpp"
#include "honeycomb/errors.hpp"
#include "honeycomb/numeric.hpp"

namespace honeycomb {

namespace {

std::string edge_name(int id) { return "half-edge " + std::to_string(id); }
std::string face_name(int id) { return "face " + std::to_string(id); }

template <class T>
std::unordered_map<int, std::size_t> index_ids(const std::vector<T>& items, const char* what) {
  std::unordered_map<int, std::size_t> index;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (!index.emplace(items[i].id, i).second)
      throw ClusterError(std::string("duplicate ") + what + " id " + std::to_string(items[i].id));
  return index;
}

}  // namespace

Cluster Cluster::build(Domain domain, std::vector<Vertex> vertices, std::vector<HalfEdge> half_edges,
                       std::vector<Face> faces, Validation mode) {
  Cluster c;
  c.domain_ = domain;
  c.vertex_index_ = index_ids(vertices, "vertex");
  c.edge_index_ = index_ids(half_edges, "half-edge");
  c.face_index_ = index_ids(faces, "face");
  c.vertices_ = std::move(vertices);
  c.half_edges_ = std::move(half_edges);
  c.faces_ = std::move(faces);

  const bool torus = domain.kind == DomainKind::Torus;
  if (torus) {
    const double area = std::abs(domain.cell_area());
    if (!(area >= 1.0 - 1e-12))
      throw ClusterError("torus lattice vectors must span a cell of area >= 1, got " + format_real(area));
  }
  for (const auto& v : c.vertices_)
    if (!std::isfinite(v.pos.x) || !std::isfinite(v.pos.y))
      throw ClusterError("vertex " + std::to_string(v.id) + " has a non-finite position");

  for (const auto& e : c.half_edges_) {
    if (!c.vertex_index_.count(e.origin) || !c.vertex_index_.count(e.target))
      throw ClusterError(edge_name(e.id) + " references a missing vertex");
    if (!std::isfinite(e.bulge)) throw ClusterError(edge_name(e.id) + " has a non-finite bulge");
    if (!torus && (e.wrap[0] != 0 || e.wrap[1] != 0))
      throw ClusterError(edge_name(e.id) + " has a wrap on a planar cluster");
    auto it = c.edge_index_.find(e.twin);
    if (it == c.edge_index_.end() || e.twin == e.id)
      throw ClusterError(edge_name(e.id) + " has no valid twin");
    const HalfEdge& t = c.half_edges_[it->second];
    if (t.twin != e.id) throw ClusterError(edge_name(e.id) + ": twin(twin(e)) != e");
    if (t.origin != e.target || t.target != e.origin)
      throw ClusterError(edge_name(e.id) + ": twin does not reverse the endpoints");
    if (t.wrap[0] != -e.wrap[0] || t.wrap[1] != -e.wrap[1])
      throw ClusterError(edge_name(e.id) + ": twin wrap is not the negation");
    if (mode == Validation::Strict && e.bulge + t.bulge != 0.0)
      throw ClusterError(edge_name(e.id) + " and its twin " + edge_name(t.id) +
                         ": bulges do not cancel (sum " + format_real(e.bulge + t.bulge) + ")");
  }

  std::vector<int> owner(c.half_edges_.size(), -1);
  for (const auto& f : c.faces_) {
    if (f.cycle.empty()) throw ClusterError(face_name(f.id) + " has an empty cycle");
    if (f.outer && torus) throw ClusterError(face_name(f.id) + ": outer faces exist only on the plane");
    Wrap total{0, 0};
    for (std::size_t k = 0; k < f.cycle.size(); ++k) {
      auto it = c.edge_index_.find(f.cycle[k]);
      if (it == c.edge_index_.end())
        throw ClusterError(face_name(f.id) + " references missing " + edge_name(f.cycle[k]));
      if (owner[it->second] != -1)
        throw ClusterError(edge_name(f.cycle[k]) + " lies on more than one face cycle");
      owner[it->second] = f.id;
      const HalfEdge& e = c.half_edges_[it->second];
      const HalfEdge& next = c.half_edge(f.cycle[(k + 1) % f.cycle.size()]);
      if (e.target != next.origin)
        throw ClusterError(face_name(f.id) + " cycle is not closed after " + edge_name(e.id));
      total[0] += e.wrap[0];
      total[1] += e.wrap[1];
    }
    if (total[0] != 0 || total[1] != 0)
      throw ClusterError(face_name(f.id) + " wraps around the torus (non-contractible cycle)");
  }
  for (std::size_t i = 0; i < owner.size(); ++i)
    if (owner[i] == -1) throw ClusterError(edge_name(c.half_edges_[i].id) + " lies on no face cycle");

  // Chords: each pair computes one vector, the higher id takes its negation.
  c.chords_.resize(c.half_edges_.size());
  for (std::size_t i = 0; i < c.half_edges_.size(); ++i) {
    const HalfEdge& e = c.half_edges_[i];
    if (e.id > e.twin) continue;
    const Vec2 a = c.vertex(e.origin).pos;
    const Vec2 b = c.vertex(e.target).pos;
    const Vec2 shift{e.wrap[0] * domain.v1.x + e.wrap[1] * domain.v2.x,
                     e.wrap[0] * domain.v1.y + e.wrap[1] * domain.v2.y};
    const Vec2 d{(b.x + shift.x) - a.x, (b.y + shift.y) - a.y};
    c.chords_[i] = d;
    c.chords_[c.edge_index_.at(e.twin)] = {-d.x, -d.y};
  }
  return c;
}

const Vertex& Cluster::vertex(int id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw ClusterError("no vertex " + std::to_string(id));
  return vertices_[it->second];
}

const HalfEdge& Cluster::half_edge(int id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw ClusterError("no " + edge_name(id));
  return half_edges_[it->second];
}

const Face& Cluster::face(int id) const {
  auto it = face_index_.find(id);
  if (it == face_index_.end()) throw ClusterError("no " + face_name(id));
  return faces_[it->second];
}

Vec2 Cluster::chord(int half_edge_id) const {
  auto it = edge_index_.find(half_edge_id);
  if (it == edge_index_.end()) throw ClusterError("no " + edge_name(half_edge_id));
  return chords_[it->second];
}

double Cluster::chord_length(int half_edge_id) const {
  const Vec2 d = chord(half_edge_id);
  return std::hypot(d.x, d.y);
}

double Cluster::arc_length(int half_edge_id) const {
  return honeycomb::arc_length(chord_length(half_edge_id), half_edge(half_edge_id).bulge);
}

int ClusterBuilder::add_vertex(Vec2 pos) {
  const int id = static_cast<int>(vertices_.size());
  vertices_.push_back({id, pos});
  return id;
}

int ClusterBuilder::add_face(const std::vector<Corner>& corners, bool outer) {
  if (corners.empty()) throw ClusterError("add_face: no corners");
  Face f;
  f.id = static_cast<int>(faces_.size());
  f.outer = outer;
  for (std::size_t k = 0; k < corners.size(); ++k) {
    const Corner& a = corners[k];
    const Corner& b = corners[(k + 1) % corners.size()];
    if (a.vertex < 0 || a.vertex >= static_cast<int>(vertices_.size()))
      throw ClusterError("add_face: unknown vertex " + std::to_string(a.vertex));
    HalfEdge e;
    e.id = static_cast<int>(half_edges_.size());
    e.origin = a.vertex;
    e.target = b.vertex;
    e.wrap = {b.cell[0] - a.cell[0], b.cell[1] - a.cell[1]};
    e.twin = -1;
    const auto key = std::make_tuple(e.origin, e.target, e.wrap[0], e.wrap[1]);
    if (!by_key_.emplace(key, e.id).second)
      throw ClusterError("add_face: half-edge " + std::to_string(e.origin) + "->" + std::to_string(e.target) +
                         " used twice");
    half_edges_.push_back(e);
    f.cycle.push_back(e.id);
  }
  faces_.push_back(std::move(f));
  return faces_.back().id;
}

Cluster ClusterBuilder::build(Validation mode) const {
  std::vector<HalfEdge> edges = half_edges_;
  for (auto& e : edges) {
    auto it = by_key_.find(std::make_tuple(e.target, e.origin, -e.wrap[0], -e.wrap[1]));
    if (it == by_key_.end())
      throw ClusterError("half-edge " + std::to_string(e.origin) + "->" + std::to_string(e.target) +
                         " has no matching reverse");
    e.twin = it->second;
  }
  return Cluster::build(domain_, vertices_, std::move(edges), faces_, mode);
}

Cluster with_bulge(const Cluster& cluster, int half_edge_id, double bulge) {
  std::vector<HalfEdge> edges = cluster.half_edges();
  bool found = false;
  for (auto& e : edges)
    if (e.id == half_edge_id) {
      e.bulge = bulge;
      found = true;
    }
  if (!found) throw ClusterError("no " + edge_name(half_edge_id));
  return Cluster::build(cluster.domain(), cluster.vertices(), std::move(edges), cluster.faces(),
                        Validation::Lenient);
}

Cluster with_pair_bulges(const Cluster& cluster, const std::vector<double>& values) {
  std::vector<HalfEdge> edges = cluster.half_edges();
  std::unordered_map<int, std::size_t> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i].id] = i;
  std::size_t next = 0;
  for (auto& e : edges) {
    if (e.id > e.twin) continue;
    if (next >= values.size()) throw PreconditionError("with_pair_bulges: too few values");
    e.bulge = values[next];
    edges[index.at(e.twin)].bulge = -values[next];
    ++next;
  }
  return Cluster::build(cluster.domain(), cluster.vertices(), std::move(edges), cluster.faces(),
                        Validation::Strict);
}

double chord_polygon_area(const Cluster& cluster, int face_id) {
  const Face& f = cluster.face(face_id);
  std::vector<double> terms;
  terms.reserve(f.cycle.size());
  Vec2 p{0.0, 0.0};
  for (int id : f.cycle) {
    const Vec2 d = cluster.chord(id);
    const Vec2 q{p.x + d.x, p.y + d.y};
    terms.push_back(p.x * q.y);
    terms.push_back(-q.x * p.y);
    p = q;
  }
  return 0.5 * exact_sum(terms);
}

double region_area(const Cluster& cluster, int face_id) {
  const Face& f = cluster.face(face_id);
  std::vector<double> terms;
  terms.push_back(chord_polygon_area(cluster, face_id));
  for (int id : f.cycle) terms.push_back(cluster.half_edge(id).bulge);
  return exact_sum(terms);
}

RegionStats region_stats(const Cluster& cluster, int face_id) {
  const Face& f = cluster.face(face_id);
  RegionStats s;
  s.face = face_id;
  s.n = static_cast<int>(f.cycle.size());
  std::vector<double> lengths, xs, ts;
  for (int id : f.cycle) {
    const double b = cluster.half_edge(id).bulge;
    lengths.push_back(cluster.arc_length(id));
    xs.push_back(b);
    ts.push_back(truncate_bulge(b));
  }
  s.length = exact_sum(lengths);
  s.x = exact_sum(xs);
  s.t = exact_sum(ts);
  s.area = region_area(cluster, face_id);
  s.alpha = std::min(1.0, s.area);
  s.delta = hex_deficit(s.length, RegionParams{s.n, s.alpha, s.x, s.t, {}, {}});
  return s;
}

bool check_area_floor(const Cluster& cluster, int face_id) {
  const int n = static_cast<int>(cluster.face(face_id).cycle.size());
  if (n < 2) return false;
  return region_area(cluster, face_id) >= area_floor(n);
}

EulerReport euler_defect(const Cluster& cluster) {
  EulerReport r;
  r.vertices = static_cast<long long>(cluster.vertices().size());
  r.edges = static_cast<long long>(cluster.half_edges().size() / 2);
  r.faces = static_cast<long long>(cluster.faces().size());
  r.chi = r.vertices - r.edges + r.faces;
  long long total_n = 0;
  for (const auto& f : cluster.faces()) total_n += static_cast<long long>(f.cycle.size());
  r.hex_defect = static_cast<double>(6 * r.faces - total_n) / 6.0;
  std::unordered_map<int, int> degree;
  for (const auto& v : cluster.vertices()) degree[v.id] = 0;
  for (const auto& e : cluster.half_edges()) ++degree[e.origin];
  r.cubic = std::all_of(degree.begin(), degree.end(), [](const auto& kv) { return kv.second == 3; });
  r.identity_holds = static_cast<double>(r.chi) == r.hex_defect;
  return r;
}

ConservationReport conservation_checks(const Cluster& cluster, double tol) {
  ConservationReport r;
  std::vector<double> bulges, ts;
  for (const auto& e : cluster.half_edges()) {
    bulges.push_back(e.bulge);
    if (e.id < e.twin) {
      const double sum = e.bulge + cluster.half_edge(e.twin).bulge;
      if (std::abs(sum) > tol) r.violations.push_back({e.id, e.twin, sum});
    }
  }
  for (const auto& f : cluster.faces())
    for (int id : f.cycle) ts.push_back(truncate_bulge(cluster.half_edge(id).bulge));
  r.bulge_sum = exact_sum(bulges);
  r.t_sum = exact_sum(ts);
  r.passed = r.violations.empty() && std::abs(r.bulge_sum) <= tol && std::abs(r.t_sum) <= tol;
  return r;
}

HoneycombReport honeycomb_bound(const Cluster& cluster) {
  if (cluster.domain().kind != DomainKind::Torus)
    throw PreconditionError("honeycomb_bound: torus domain required");
  HoneycombReport r;
  std::vector<double> lengths, alphas, deltas, arcs;
  for (const auto& f : cluster.faces()) {
    if (!check_area_floor(cluster, f.id))
      throw PreconditionError("honeycomb_bound: " + face_name(f.id) + " is below the area floor a(N)");
    RegionStats s = region_stats(cluster, f.id);
    lengths.push_back(s.length);
    alphas.push_back(s.alpha);
    deltas.push_back(s.delta);
    r.stats.push_back(s);
  }
  for (const auto& e : cluster.half_edges())
    if (e.id < e.twin) arcs.push_back(cluster.arc_length(e.id));
  r.perimeter = exact_sum(arcs);
  r.face_length_sum = exact_sum(lengths);
  r.bound = fourth_root_12() * exact_sum(alphas);
  r.margin = r.perimeter - r.bound;
  r.delta_sum = exact_sum(deltas);
  return r;
}

}  // namespace honeycomb
