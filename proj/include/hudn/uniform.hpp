#pragma once

#include <cstdint>
#include <vector>

#include "hudn/hypergraph.hpp"

namespace hudn {

/// Hyperedge of an r-partitioned hypergraph: one vertex id per part (local to
/// that part) plus a non-negative weight.
struct UniformEdge {
  std::vector<int> vertices;
  double weight = 0.0;

  bool operator==(const UniformEdge&) const = default;
};

/// r-uniform weighted hypergraph: vertices split into r parts, every edge
/// takes exactly one vertex per part. The matching substrate.
class UniformWeightedHypergraph {
 public:
  UniformWeightedHypergraph() = default;

  /// Validates r >= 2, coordinates in range, weights finite and >= 0.
  UniformWeightedHypergraph(std::vector<int> part_sizes, std::vector<UniformEdge> edges);

  int rank() const { return static_cast<int>(part_sizes_.size()); }
  const std::vector<int>& part_sizes() const { return part_sizes_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const UniformEdge& edge(int id) const { return edges_[id]; }
  const std::vector<UniformEdge>& edges() const { return edges_; }
  double weight(int id) const { return edges_[id].weight; }

  /// Plain-hypergraph view: global vertex id = part offset + local id.
  Hypergraph to_hypergraph() const;
  int global_vertex(int part, int local) const { return offsets_[part] + local; }

  bool operator==(const UniformWeightedHypergraph&) const = default;

 private:
  std::vector<int> part_sizes_;
  std::vector<int> offsets_;
  std::vector<UniformEdge> edges_;
};

/// Seeded generator for solver test suites: m edges with coordinates uniform
/// in each part and weights uniform in [w_lo, w_hi].
UniformWeightedHypergraph random_uniform_instance(std::uint64_t seed,
                                                  const std::vector<int>& part_sizes, int m,
                                                  double w_lo, double w_hi);

}  // namespace hudn
