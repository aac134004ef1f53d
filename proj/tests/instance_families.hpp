#pragma once

// Seeded instance families shared between the unit suites and the acceptance
// suite. Kept in test code: these define the distributions the acceptance
// criteria are evaluated on.

#include <algorithm>
#include <vector>

#include "hudn/coloring.hpp"
#include "hudn/rng.hpp"
#include "hudn/uniform.hpp"

namespace hudn::families {

/// Caching-shaped matching instance: 2..4 users, each with its own pool of
/// feasible providers (disjoint across users, as with distinct requested
/// contents), per-provider transmission time replicated across both channels.
/// At most 10 hyperedges. Provider pools are kept disjoint because the
/// distributed policy may reuse one provider on several channels, which no
/// matching can do; sharing cheap providers would make the centralized-vs-
/// distributed comparison depend on that modeling asymmetry instead of on
/// solver quality.
inline UniformWeightedHypergraph caching_comparison_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 1001 + 17);
  const int users = 2 + uniform_int(rng, 3);
  const int channels = 2;
  const int providers = 8;
  std::vector<UniformEdge> edges;
  std::vector<int> pool(providers);
  for (int i = 0; i < providers; ++i) pool[i] = i;
  shuffle_vec(pool, rng);
  size_t next = 0;
  const int budget = 10;
  for (int u = 0; u < users; ++u) {
    int f = 1 + uniform_int(rng, 2);
    while (static_cast<int>(edges.size()) + f * channels > budget && f > 1) --f;
    if (static_cast<int>(edges.size()) + f * channels > budget) break;
    for (int i = 0; i < f && next < pool.size(); ++i) {
      int p = pool[next++];
      double w = uniform_range(rng, 0.5, 10.0);
      for (int k = 0; k < channels; ++k) edges.push_back({{u, p, k}, w});
    }
  }
  return UniformWeightedHypergraph({users, providers, channels}, std::move(edges));
}

/// Interference-shaped coloring instance: mostly pairwise conflict edges plus
/// an occasional cumulative triple, like the dual-connectivity builder
/// produces. Guaranteed at least one edge.
inline ColoringInstance pairwise_coloring_instance(std::uint64_t seed, int num_colors) {
  std::mt19937_64 rng(seed * 11 + 5);
  int n = 4 + uniform_int(rng, 9);
  std::vector<std::vector<VertexId>> edges;
  int pairs = n + uniform_int(rng, n);
  for (int j = 0; j < pairs; ++j) {
    int a = uniform_int(rng, n), b = uniform_int(rng, n);
    if (a != b) edges.push_back({a, b});
  }
  int triples = uniform_int(rng, 3);
  for (int j = 0; j < triples; ++j) {
    int a = uniform_int(rng, n), b = uniform_int(rng, n), c = uniform_int(rng, n);
    if (a != b && b != c && a != c) edges.push_back({a, b, c});
  }
  if (edges.empty()) edges.push_back({0, 1});
  return make_coloring_instance(Hypergraph(n, std::move(edges)), num_colors, {});
}

/// Largest pairwise-conflict degree: distinct partners over 2-vertex edges.
inline int max_pairwise_degree(const Hypergraph& h) {
  std::vector<std::vector<int>> neigh(h.vertex_count());
  for (const auto& e : h.edges()) {
    if (e.size() != 2) continue;
    if (std::find(neigh[e[0]].begin(), neigh[e[0]].end(), e[1]) == neigh[e[0]].end()) {
      neigh[e[0]].push_back(e[1]);
      neigh[e[1]].push_back(e[0]);
    }
  }
  size_t best = 0;
  for (const auto& v : neigh) best = std::max(best, v.size());
  return static_cast<int>(best);
}

}  // namespace hudn::families
