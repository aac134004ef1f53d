#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hudn/coloring.hpp"
#include "hudn/game.hpp"
#include "hudn/matching.hpp"
#include "hudn/scenarios.hpp"

namespace hudn {

struct Assignment {
  int provider = -1;  // RRH or caching provider
  int channel = -1;
  int iteration = 0;  // 1-based round the assignment was made in

  bool operator==(const Assignment&) const = default;
};

/// Per-user assignment record. Within one iteration each channel is used at
/// most once; RRHs likewise unless the producing pipeline relaxed that
/// (rrh_disjoint_per_iteration = false). Across iterations both may repeat.
struct Allocation {
  std::vector<std::optional<Assignment>> users;
  int iterations = 0;
  bool rrh_disjoint_per_iteration = true;

  int assigned_count() const;

  bool operator==(const Allocation&) const = default;
};

struct SumRateReport {
  double total_bps = 0.0;
  std::vector<double> per_user_bps;  // per user (CRAN, caching) or per link
  double solver_time_s = 0.0;
  int iterations = 0;
};

struct CranOptions {
  int k_max = 2;
  double epsilon = 1e-9;
  bool best_improvement = false;
  /// Constrain only channels within an iteration's matching, letting one RRH
  /// serve several users in the same round.
  bool channel_only_disjoint = false;
};

struct CranResult {
  Allocation allocation;
  SumRateReport report;
  /// Recomputed sum rate of the partial allocation after each iteration;
  /// non-decreasing because only non-negative marginal edges survive.
  std::vector<double> sum_rate_by_iteration;
};

/// Iterative hypergraph matching: start from standalone-rate weights, match
/// by claw local search, fix the matched users, reweight remaining edges by
/// their exact marginal sum-rate impact against the allocation so far, drop
/// negative-impact edges, and repeat until the edge set empties.
CranResult cran_iterative_matching(const CranInstance& inst, const CranOptions& options = {});

/// Nearest-RRH association with channel assignment by repeated Hungarian
/// rounds over marginal rates; non-negative assignments are kept, one user
/// per RRH and channel per round.
CranResult cran_bipartite_baseline(const CranInstance& inst);

/// Ground-truth evaluation: every assigned user's rate under the full final
/// co-channel interference pattern. Throws on an inconsistent allocation.
SumRateReport recompute_sum_rate(const Allocation& alloc, const CranInstance& inst);

struct DualconnResult {
  Coloring coloring;
  ViolationReport violations;
  SumRateReport report;  // per-link rates under the coloring
};

DualconnResult dualconn_allocate(const DualconnBuild& build, const RadioParams& params,
                                 std::uint64_t seed);

/// Per-link rates when the links transmit on the given channels.
SumRateReport dualconn_sum_rate(const DualconnBuild& build, const RadioParams& params,
                                const Coloring& coloring);

struct D2dResult {
  ChannelGameState state;
  PotentialTrace trace;
  SumRateReport report;
  int rounds = 0;
};

D2dResult d2d_allocate(const Hypergraph& interference, const NetworkGeometry& geometry,
                       const RadioParams& params, int num_channels, GameMode mode,
                       int max_rounds, double beta, std::uint64_t seed);

enum class CachingPolicy { Distributed, Centralized };

struct CachingResult {
  Allocation allocation;
  double total_time_s = 0.0;  // sum of selected transmission times
  int assigned = 0;
  SumRateReport report;
};

/// Distributed: users in seeded random order claim their cheapest hyperedge
/// whose (provider, channel) slot is still free. Centralized: maximum-weight
/// claw local search on shift-negated weights, which minimizes total
/// transmission time while preferring to serve more users.
CachingResult caching_allocate(const UniformWeightedHypergraph& g, CachingPolicy policy,
                               std::uint64_t seed);

/// Context-aware variant that also recomputes per-user rates under the final
/// co-channel interference.
CachingResult caching_allocate(const CachingBuild& build, const NetworkGeometry& geometry,
                               const RadioParams& params, CachingPolicy policy,
                               std::uint64_t seed);

SumRateReport caching_sum_rate(const Allocation& alloc, const CachingBuild& build,
                               const NetworkGeometry& geometry, const RadioParams& params);

}  // namespace hudn
