#include "honeycomb/tiling.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <tuple>
#include <vector>

#include "honeycomb/errors.hpp"
#include "honeycomb/numeric.hpp"

namespace honeycomb {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

double hex_side() { return std::sqrt(2.0 / (3.0 * kSqrt3)); }
double triangle_side() { return std::sqrt(4.0 / kSqrt3); }

// Floor division and remainder for lattice indices.
int wrap_index(int i, int m, int& cell) {
  cell = (i >= 0 ? i / m : -((-i + m - 1) / m));
  return i - cell * m;
}

// Lattice geometry shared by the torus and disk builders. A corner is a vertex
// label (type, i, j) on the infinite tiling.
struct Label {
  int type = 0;
  int i = 0;
  int j = 0;
  auto tie() const { return std::tie(type, i, j); }
  bool operator<(const Label& o) const { return tie() < o.tie(); }
};

struct Lattice {
  Vec2 a;
  Vec2 b;
  int types = 1;  ///< vertices per cell
  int tiles = 1;  ///< tiles per cell

  Vec2 at(int i, int j, Vec2 offset) const {
    return {i * a.x + j * b.x + offset.x, i * a.y + j * b.y + offset.y};
  }
};

Lattice lattice_for(TilingKind kind) {
  switch (kind) {
    case TilingKind::Hexagon: {
      const double s = hex_side();
      return {{kSqrt3 * s, 0.0}, {kSqrt3 * s / 2.0, 1.5 * s}, 2, 1};
    }
    case TilingKind::Square: return {{1.0, 0.0}, {0.0, 1.0}, 1, 1};
    case TilingKind::Triangle: {
      const double s = triangle_side();
      return {{s, 0.0}, {s / 2.0, s * kSqrt3 / 2.0}, 1, 2};
    }
  }
  throw PreconditionError("unknown tiling kind");
}

Vec2 vertex_offset(TilingKind kind, int type) {
  if (kind == TilingKind::Hexagon) {
    const double s = hex_side();
    return type == 0 ? Vec2{kSqrt3 * s / 2.0, s / 2.0} : Vec2{0.0, s};
  }
  return {0.0, 0.0};
}

// Counterclockwise corners of tile `t` in cell (i, j).
std::vector<Label> tile_corners(TilingKind kind, int i, int j, int t) {
  switch (kind) {
    case TilingKind::Hexagon:
      return {{0, i, j}, {1, i, j}, {0, i - 1, j}, {1, i, j - 1}, {0, i, j - 1}, {1, i + 1, j - 1}};
    case TilingKind::Square: return {{0, i, j}, {0, i + 1, j}, {0, i + 1, j + 1}, {0, i, j + 1}};
    case TilingKind::Triangle:
      if (t == 0) return {{0, i, j}, {0, i + 1, j}, {0, i, j + 1}};
      return {{0, i + 1, j}, {0, i + 1, j + 1}, {0, i, j + 1}};
  }
  return {};
}

Vec2 position(TilingKind kind, const Lattice& lat, const Label& v) {
  return lat.at(v.i, v.j, vertex_offset(kind, v.type));
}

}  // namespace

std::string_view to_string(TilingKind kind) {
  switch (kind) {
    case TilingKind::Hexagon: return "hexagon";
    case TilingKind::Square: return "square";
    case TilingKind::Triangle: return "triangle";
  }
  return "?";
}

std::optional<TilingKind> parse_tiling_kind(std::string_view name) {
  if (name == "hexagon") return TilingKind::Hexagon;
  if (name == "square") return TilingKind::Square;
  if (name == "triangle") return TilingKind::Triangle;
  return std::nullopt;
}

Cluster generate_tiling(TilingKind kind, int m, int n) {
  if (m < 1 || n < 1) throw PreconditionError("generate_tiling: m, n >= 1");
  const Lattice lat = lattice_for(kind);
  const Vec2 v1{m * lat.a.x, m * lat.a.y};
  const Vec2 v2{n * lat.b.x, n * lat.b.y};
  ClusterBuilder builder(Domain::torus(v1, v2));
  // Vertex (type, i, j) for 0 <= i < m, 0 <= j < n.
  std::vector<int> ids(static_cast<std::size_t>(lat.types * m * n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      for (int t = 0; t < lat.types; ++t)
        ids[static_cast<std::size_t>((j * m + i) * lat.types + t)] =
            builder.add_vertex(position(kind, lat, {t, i, j}));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      for (int t = 0; t < lat.tiles; ++t) {
        std::vector<ClusterBuilder::Corner> corners;
        for (const Label& v : tile_corners(kind, i, j, t)) {
          int ci = 0, cj = 0;
          const int ii = wrap_index(v.i, m, ci);
          const int jj = wrap_index(v.j, n, cj);
          corners.push_back({ids[static_cast<std::size_t>((jj * m + ii) * lat.types + v.type)], {ci, cj}});
        }
        builder.add_face(corners);
      }
  return builder.build();
}

double tile_diameter(TilingKind kind) {
  switch (kind) {
    case TilingKind::Hexagon: return 2.0 * hex_side();
    case TilingKind::Square: return std::numbers::sqrt2;
    case TilingKind::Triangle: return triangle_side();
  }
  return 0.0;
}

double disk_ratio(TilingKind kind, double r) {
  if (!(r > tile_diameter(kind))) throw PreconditionError("disk_ratio: r must exceed the tile diameter");
  const Lattice lat = lattice_for(kind);
  // Cells whose index stays within reach of the disk; the basis is never shorter
  // than 1/2 in the direction needed, so this bound is generous.
  const double reach = r / std::min({std::hypot(lat.a.x, lat.a.y), std::hypot(lat.b.x, lat.b.y), 1.0});
  const int k = static_cast<int>(std::ceil(2.0 * reach)) + 2;
  const double r2 = r * r;
  std::set<std::pair<Label, Label>> edges;
  long long tiles = 0;
  for (int j = -k; j <= k; ++j)
    for (int i = -k; i <= k; ++i)
      for (int t = 0; t < lat.tiles; ++t) {
        const std::vector<Label> corners = tile_corners(kind, i, j, t);
        bool inside = true;
        for (const Label& v : corners) {
          const Vec2 p = position(kind, lat, v);
          if (p.x * p.x + p.y * p.y > r2) {
            inside = false;
            break;
          }
        }
        if (!inside) continue;
        ++tiles;
        for (std::size_t c = 0; c < corners.size(); ++c) {
          Label u = corners[c];
          Label w = corners[(c + 1) % corners.size()];
          if (w < u) std::swap(u, w);
          edges.insert({u, w});
        }
      }
  if (tiles == 0) throw PreconditionError("disk_ratio: no tile fits in the disk");
  std::vector<double> lengths;
  lengths.reserve(edges.size());
  for (const auto& [u, w] : edges) {
    const Vec2 p = position(kind, lat, u);
    const Vec2 q = position(kind, lat, w);
    lengths.push_back(std::hypot(q.x - p.x, q.y - p.y));
  }
  return exact_sum(lengths) / static_cast<double>(tiles);
}

SmallAreaBound small_area_bound(std::span<const double> alphas) {
  if (alphas.empty()) throw PreconditionError("small_area_bound: empty list");
  std::vector<double> roots;
  roots.reserve(alphas.size());
  for (double a : alphas) {
    if (!(a > 0.0 && a <= 1.0)) throw PreconditionError("small_area_bound: each alpha must lie in (0, 1]");
    roots.push_back(2.0 * std::sqrt(std::numbers::pi * a));
  }
  const double total = exact_sum(alphas);
  SmallAreaBound out;
  out.lhs = (exact_sum(roots) + 2.0 * std::sqrt(std::numbers::pi * total)) / 2.0;
  out.rhs = total * fourth_root_12();
  out.holds = out.lhs > out.rhs;
  return out;
}

}  // namespace honeycomb
