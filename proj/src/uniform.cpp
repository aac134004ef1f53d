#include "hudn/uniform.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hudn/rng.hpp"

namespace hudn {

UniformWeightedHypergraph::UniformWeightedHypergraph(std::vector<int> part_sizes,
                                                     std::vector<UniformEdge> edges)
    : part_sizes_(std::move(part_sizes)), edges_(std::move(edges)) {
  const int r = rank();
  if (r < 2) {
    throw std::invalid_argument("uniform hypergraph: rank must be >= 2");
  }
  offsets_.assign(r, 0);
  for (int p = 0; p < r; ++p) {
    if (part_sizes_[p] < 0) {
      throw std::invalid_argument("uniform hypergraph: negative part size");
    }
    if (p > 0) offsets_[p] = offsets_[p - 1] + part_sizes_[p - 1];
  }
  for (size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (static_cast<int>(e.vertices.size()) != r) {
      throw std::invalid_argument("uniform hypergraph: edge " + std::to_string(i) +
                                  " does not have one vertex per part");
    }
    for (int p = 0; p < r; ++p) {
      if (e.vertices[p] < 0 || e.vertices[p] >= part_sizes_[p]) {
        throw std::invalid_argument("uniform hypergraph: edge " + std::to_string(i) +
                                    ": vertex " + std::to_string(e.vertices[p]) +
                                    " out of range in part " + std::to_string(p));
      }
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw std::invalid_argument("uniform hypergraph: edge " + std::to_string(i) +
                                  " has invalid weight");
    }
  }
}

Hypergraph UniformWeightedHypergraph::to_hypergraph() const {
  int n = std::accumulate(part_sizes_.begin(), part_sizes_.end(), 0);
  std::vector<std::vector<VertexId>> family;
  family.reserve(edges_.size());
  for (const auto& e : edges_) {
    std::vector<VertexId> members(rank());
    for (int p = 0; p < rank(); ++p) members[p] = global_vertex(p, e.vertices[p]);
    family.push_back(std::move(members));
  }
  return Hypergraph(n, std::move(family));
}

UniformWeightedHypergraph random_uniform_instance(std::uint64_t seed,
                                                  const std::vector<int>& part_sizes, int m,
                                                  double w_lo, double w_hi) {
  std::mt19937_64 rng(seed);
  std::vector<UniformEdge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    UniformEdge e;
    e.vertices.resize(part_sizes.size());
    for (size_t p = 0; p < part_sizes.size(); ++p) {
      e.vertices[p] = uniform_int(rng, part_sizes[p]);
    }
    e.weight = uniform_range(rng, w_lo, w_hi);
    edges.push_back(std::move(e));
  }
  return UniformWeightedHypergraph(std::vector<int>(part_sizes), std::move(edges));
}

}  // namespace hudn
