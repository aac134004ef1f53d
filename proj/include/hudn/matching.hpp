#pragma once

#include <vector>

#include "hudn/uniform.hpp"

namespace hudn {

/// Pairwise-disjoint hyperedge subset. total_weight is the sum of member
/// weights accumulated in ascending edge-id order.
struct Matching {
  std::vector<int> edge_ids;  // ascending
  double total_weight = 0.0;

  bool operator==(const Matching&) const = default;
};

/// True iff the ids select pairwise coordinate-disjoint edges. Throws on an
/// invalid id.
bool is_valid_matching(const UniformWeightedHypergraph& g, const std::vector<int>& edge_ids);

/// Recomputes the weight of an id set in ascending-id order.
double matching_weight(const UniformWeightedHypergraph& g, const std::vector<int>& edge_ids);

/// Maximal matching by descending weight (ties broken toward the lower edge
/// id), skipping conflicting edges.
Matching greedy_matching(const UniformWeightedHypergraph& g);

struct LocalSearchOptions {
  double epsilon = 1e-9;          // strict improvement margin for swap moves
  bool best_improvement = false;  // default: first improvement in scan order
};

/// Claw-based local improvement over an initial matching. Moves:
///   k=1: add any edge disjoint from the matching (keeps the result maximal);
///   k in [2, k_max]: pick k pairwise-disjoint unmatched edges that all
///   intersect a common edge (the claw center), add them and evict every
///   matched edge they conflict with, when that raises the total weight by
///   more than epsilon.
/// On return no such move exists. Output weight >= input weight. Requires
/// 1 <= k_max <= rank. Throws if `init` is not a valid matching of g.
Matching local_search_matching(const UniformWeightedHypergraph& g, const Matching& init,
                               int k_max, const LocalSearchOptions& options = {});

inline constexpr int kDefaultExactCap = 20;

/// Globally optimal matching by branch and bound; exponential, intended as a
/// test oracle. Ties broken toward the lexicographically smallest edge-id
/// set. Refuses instances with more than max_edges edges.
Matching exact_matching(const UniformWeightedHypergraph& g, int max_edges = kDefaultExactCap);

}  // namespace hudn
