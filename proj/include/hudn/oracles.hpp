#pragma once

#include <vector>

#include "hudn/coloring.hpp"
#include "hudn/game.hpp"
#include "hudn/hungarian.hpp"
#include "hudn/hypergraph.hpp"
#include "hudn/matching.hpp"
#include "hudn/uniform.hpp"

// Naive reference implementations kept deliberately independent of the solver
// code paths they cross-check. Exponential or quadratic on purpose; only run
// them on small instances.
namespace hudn::oracle {

/// Full subset enumeration over all 2^m edge subsets. Ties broken toward the
/// lexicographically smallest edge-id set, like exact_matching.
Matching max_weight_matching_bruteforce(const UniformWeightedHypergraph& g);

/// All n! permutations.
AssignmentResult assignment_bruteforce(const std::vector<std::vector<double>>& cost,
                                       AssignSense sense);

/// Adjacency by scanning every edge pair against a plain membership test.
std::vector<VertexId> adjacent_vertices_naive(const Hypergraph& h, VertexId v);

/// Pairwise hyperedge intersection with nested loops.
bool edges_intersect_naive(const Hypergraph& h, int a, int b);

/// Disjointness check over all pairs of selected edges.
bool is_matching_naive(const Hypergraph& h, const std::vector<int>& edge_ids);

/// Monochromatic-edge and hard-pair scan, one edge at a time.
ViolationReport check_coloring_naive(const ColoringInstance& inst, const Coloring& coloring);

/// Potential by full double loop over vertex pairs.
long long potential_naive(const ChannelGameState& state);

/// Talons neighbor the center and are pairwise non-adjacent.
bool claw_is_valid(const RepresentativeGraph& l, const Claw& claw, int k);

/// Exhaustive subsets of size <= max_size, explicit proper-subset minimality.
std::vector<std::vector<int>> minimal_oversum_sets_naive(const std::vector<double>& contributions,
                                                         double threshold, int max_size);

}  // namespace hudn::oracle
