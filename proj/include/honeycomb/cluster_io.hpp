#pragma once

// Cluster files: one JSON object, one entity per line.
//
// {"domain": {"type": "torus", "v1": [x, y], "v2": [x, y]},
//  "vertices": [{"id": 0, "x": 0, "y": 0}, ...],
//  "half_edges": [{"id": 0, "origin": 0, "target": 1, "bulge": 0, "twin": 1, "wrap": [0, 0]}, ...],
//  "faces": [{"id": 0, "cycle": [0, 1, 2], "outer": false}, ...]}
//
// "type" is "plane" or "torus"; v1, v2 are omitted on the plane. "wrap" defaults to
// [0, 0] and "outer" to false.

#include <iosfwd>
#include <string>
#include <string_view>

#include "honeycomb/cluster.hpp"

namespace honeycomb {

/// Throws ParseError (with the 1-based line where known) for malformed text and
/// ClusterError for structurally invalid clusters.
Cluster parse_cluster(std::string_view text, Validation mode = Validation::Strict);
Cluster load_cluster(const std::string& path, Validation mode = Validation::Strict);

std::string format_cluster(const Cluster& cluster);
void save_cluster(const std::string& path, const Cluster& cluster);

}  // namespace honeycomb
