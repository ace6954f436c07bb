#pragma once

// The three regular tilings by unit-area tiles, on a torus or truncated to a disk.

#include <optional>
#include <span>
#include <string_view>

#include "honeycomb/cluster.hpp"

namespace honeycomb {

enum class TilingKind { Hexagon, Square, Triangle };

std::string_view to_string(TilingKind kind);
std::optional<TilingKind> parse_tiling_kind(std::string_view name);

/// m x n fundamental cells of the tiling on the torus they span; all bulges 0.
/// A hexagon or square cell holds one tile, a triangle cell two.
/// Throws PreconditionError unless m, n >= 1.
Cluster generate_tiling(TilingKind kind, int m, int n);

/// Length of the union of tile boundaries (shared edges once) over total area, for
/// the tiles lying wholly inside the disk of radius r about the origin.
/// Throws PreconditionError if r does not exceed the tile diameter.
double disk_ratio(TilingKind kind, double r);

/// Diameter of one unit-area tile.
double tile_diameter(TilingKind kind);

struct SmallAreaBound {
  double lhs = 0.0;  ///< (sum 2 sqrt(pi alpha_i) + 2 sqrt(pi A)) / 2
  double rhs = 0.0;  ///< A 12^{1/4}
  bool holds = false;
};

/// Elementary perimeter bound for a cluster of small total area A = sum alpha_i.
/// Throws PreconditionError for an empty list or alpha outside (0, 1].
SmallAreaBound small_area_bound(std::span<const double> alphas);

}  // namespace honeycomb
