#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hudn/hypergraph.hpp"

namespace hudn {

/// Channel-assignment coloring problem: color the hypergraph's vertices with
/// K colors so that no hyperedge of size >= 2 is monochromatic. Hard pairs
/// must receive different colors even when other violations are tolerated;
/// every hard pair must also be present as a 2-vertex hyperedge.
struct ColoringInstance {
  Hypergraph hypergraph;
  int num_colors = 1;
  std::vector<std::pair<VertexId, VertexId>> hard_pairs;

  bool operator==(const ColoringInstance&) const = default;
};

/// Validates the hard-pair invariant and K >= 1; throws on violation.
ColoringInstance make_coloring_instance(Hypergraph h, int num_colors,
                                        std::vector<std::pair<VertexId, VertexId>> hard_pairs);

/// Total assignment vertex -> color in [0, K).
using Coloring = std::vector<int>;

struct ViolationReport {
  std::vector<int> monochromatic_edges;  // ascending edge ids, size >= 2 only
  std::vector<std::pair<VertexId, VertexId>> hard_pair_violations;

  bool clean() const { return monochromatic_edges.empty() && hard_pair_violations.empty(); }
  int total() const {
    return static_cast<int>(monochromatic_edges.size() + hard_pair_violations.size());
  }
};

/// Exact violation accounting. Throws if the coloring is not total or uses a
/// color outside [0, K).
ViolationReport check_coloring(const ColoringInstance& inst, const Coloring& coloring);

/// Most-constrained-first greedy: vertices in descending hyperedge-degree
/// order (ties toward the lower id); each takes the color that completes the
/// fewest monochromatic edges, with hard-pair conflicts treated as infinitely
/// costly and ties broken toward the lowest color index. Deterministic; the
/// seed is reserved for randomized variants and does not affect the result.
std::pair<Coloring, ViolationReport> greedy_color(const ColoringInstance& inst,
                                                  std::uint64_t seed);

}  // namespace hudn
