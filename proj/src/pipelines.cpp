#include "hudn/pipelines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "hudn/hungarian.hpp"
#include "hudn/rng.hpp"

namespace hudn {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Solver-side link budget cache: linear received power of every RRH at every
/// user, plus marginal-rate queries against a channel occupancy list.
struct CranLinkBudget {
  const CranInstance& inst;
  double noise_mw;
  std::vector<std::vector<double>> power_mw;  // [user][rrh]

  explicit CranLinkBudget(const CranInstance& instance)
      : inst(instance), noise_mw(dbm_to_mw(instance.params.noise_dbm)) {
    power_mw.assign(inst.num_users, std::vector<double>(inst.num_rrhs, 0.0));
    for (int u = 0; u < inst.num_users; ++u) {
      for (int r = 0; r < inst.num_rrhs; ++r) {
        power_mw[u][r] = dbm_to_mw(inst.rx_power_dbm(u, r));
      }
    }
  }

  double rate(int user, int rrh, const std::vector<std::pair<int, int>>& cochannel,
              int skip_user = -1, int extra_rrh = -1) const {
    double denom = noise_mw;
    for (auto [cu, cr] : cochannel) {
      if (cu == skip_user) continue;
      denom += power_mw[user][cr];
    }
    if (extra_rrh >= 0) denom += power_mw[user][extra_rrh];
    return rate_bps(power_mw[user][rrh] / denom, inst.params.bandwidth_hz);
  }

  /// Exact sum-rate change from adding (user, rrh) to channel occupancy A:
  /// the newcomer's own rate plus the rate deltas inflicted on the users
  /// already on the channel.
  double marginal_gain(int user, int rrh, const std::vector<std::pair<int, int>>& a) const {
    double delta = rate(user, rrh, a);
    for (auto [cu, cr] : a) {
      double old_rate = rate(cu, cr, a, cu);
      double new_rate = rate(cu, cr, a, cu, rrh);
      delta += new_rate - old_rate;
    }
    return delta;
  }
};

struct CranEdge {
  int user;
  int rrh;
  int channel;
  double weight;
};

void record_assignments(Allocation& alloc,
                        std::vector<std::vector<std::pair<int, int>>>& by_channel,
                        const std::vector<CranEdge>& edges, const std::vector<int>& picked_ids,
                        int iteration) {
  for (int id : picked_ids) {
    const CranEdge& e = edges[id];
    alloc.users[e.user] = Assignment{e.rrh, e.channel, iteration};
    by_channel[e.channel].emplace_back(e.user, e.rrh);
  }
}

}  // namespace

int Allocation::assigned_count() const {
  int n = 0;
  for (const auto& a : users) n += a.has_value() ? 1 : 0;
  return n;
}

CranResult cran_iterative_matching(const CranInstance& inst, const CranOptions& options) {
  auto start = Clock::now();
  CranLinkBudget budget(inst);

  std::vector<CranEdge> edges;
  for (int u = 0; u < inst.num_users; ++u) {
    for (int r = 0; r < inst.num_rrhs; ++r) {
      if (!inst.admissible[u][r]) continue;
      double rate = budget.rate(u, r, {});
      for (int k = 0; k < inst.num_channels; ++k) edges.push_back({u, r, k, rate});
    }
  }

  CranResult result;
  result.allocation.users.assign(inst.num_users, std::nullopt);
  result.allocation.rrh_disjoint_per_iteration = !options.channel_only_disjoint;
  std::vector<std::vector<std::pair<int, int>>> by_channel(inst.num_channels);

  LocalSearchOptions ls;
  ls.epsilon = options.epsilon;
  ls.best_improvement = options.best_improvement;

  int iteration = 0;
  while (!edges.empty()) {
    ++iteration;

    Matching matched;
    if (options.channel_only_disjoint) {
      std::vector<UniformEdge> ue;
      ue.reserve(edges.size());
      for (const auto& e : edges) ue.push_back({{e.user, e.channel}, e.weight});
      UniformWeightedHypergraph g({inst.num_users, inst.num_channels}, std::move(ue));
      matched = local_search_matching(g, greedy_matching(g), std::min(options.k_max, 2), ls);
    } else {
      std::vector<UniformEdge> ue;
      ue.reserve(edges.size());
      for (const auto& e : edges) ue.push_back({{e.user, e.rrh, e.channel}, e.weight});
      UniformWeightedHypergraph g({inst.num_users, inst.num_rrhs, inst.num_channels},
                                  std::move(ue));
      matched = local_search_matching(g, greedy_matching(g), options.k_max, ls);
    }

    record_assignments(result.allocation, by_channel, edges, matched.edge_ids, iteration);

    // Matched users leave the hypergraph; survivors are reweighted by their
    // marginal impact and dropped when that impact turns negative.
    std::vector<CranEdge> next;
    next.reserve(edges.size());
    for (const auto& e : edges) {
      if (result.allocation.users[e.user].has_value()) continue;
      double gain = budget.marginal_gain(e.user, e.rrh, by_channel[e.channel]);
      if (gain < 0.0) continue;
      next.push_back({e.user, e.rrh, e.channel, gain});
    }
    edges = std::move(next);
  }

  result.allocation.iterations = iteration;
  double solver_time = seconds_since(start);
  result.report = recompute_sum_rate(result.allocation, inst);
  result.report.solver_time_s = solver_time;
  result.report.iterations = iteration;
  for (int t = 1; t <= iteration; ++t) {
    Allocation partial;
    partial.users.assign(inst.num_users, std::nullopt);
    partial.rrh_disjoint_per_iteration = result.allocation.rrh_disjoint_per_iteration;
    for (int u = 0; u < inst.num_users; ++u) {
      if (result.allocation.users[u] && result.allocation.users[u]->iteration <= t) {
        partial.users[u] = result.allocation.users[u];
      }
    }
    result.sum_rate_by_iteration.push_back(recompute_sum_rate(partial, inst).total_bps);
  }
  return result;
}

CranResult cran_bipartite_baseline(const CranInstance& inst) {
  auto start = Clock::now();
  CranLinkBudget budget(inst);

  std::vector<int> nearest(inst.num_users, 0);
  for (int u = 0; u < inst.num_users; ++u) {
    double best = distance_m(inst.geometry.users[u], inst.geometry.saps[0]);
    for (int r = 1; r < inst.num_rrhs; ++r) {
      double d = distance_m(inst.geometry.users[u], inst.geometry.saps[r]);
      if (d < best) {
        best = d;
        nearest[u] = r;
      }
    }
  }

  CranResult result;
  result.allocation.users.assign(inst.num_users, std::nullopt);
  std::vector<std::vector<std::pair<int, int>>> by_channel(inst.num_channels);

  std::vector<int> unassigned(inst.num_users);
  std::iota(unassigned.begin(), unassigned.end(), 0);

  int round = 0;
  while (!unassigned.empty()) {
    const int k = inst.num_channels;
    const int size = std::max(static_cast<int>(unassigned.size()), k);
    std::vector<std::vector<double>> cost(size, std::vector<double>(size, 0.0));
    for (size_t i = 0; i < unassigned.size(); ++i) {
      int u = unassigned[i];
      for (int c = 0; c < k; ++c) {
        cost[i][c] = budget.marginal_gain(u, nearest[u], by_channel[c]);
      }
    }
    auto assignment = hungarian_assignment(cost, AssignSense::Maximize);

    struct Pick {
      int user;
      int channel;
      double gain;
    };
    std::vector<Pick> picks;
    for (size_t i = 0; i < unassigned.size(); ++i) {
      int c = assignment.row_to_col[i];
      if (c >= k) continue;  // padded channel column
      if (cost[i][c] < 0.0) continue;
      picks.push_back({unassigned[i], c, cost[i][c]});
    }
    // One user per RRH per round: keep the best pick, defer the rest.
    std::vector<Pick> kept;
    for (const auto& p : picks) {
      bool superseded = false;
      for (auto& q : kept) {
        if (nearest[q.user] == nearest[p.user]) {
          superseded = true;
          if (p.gain > q.gain) q = p;
          break;
        }
      }
      if (!superseded) kept.push_back(p);
    }
    if (kept.empty()) break;

    ++round;
    for (const auto& p : kept) {
      result.allocation.users[p.user] = Assignment{nearest[p.user], p.channel, round};
      by_channel[p.channel].emplace_back(p.user, nearest[p.user]);
    }
    std::erase_if(unassigned,
                  [&](int u) { return result.allocation.users[u].has_value(); });
  }

  result.allocation.iterations = round;
  double solver_time = seconds_since(start);
  result.report = recompute_sum_rate(result.allocation, inst);
  result.report.solver_time_s = solver_time;
  result.report.iterations = round;
  return result;
}

SumRateReport recompute_sum_rate(const Allocation& alloc, const CranInstance& inst) {
  if (static_cast<int>(alloc.users.size()) != inst.num_users) {
    throw std::invalid_argument("sum rate: allocation size does not match instance");
  }
  // Per-iteration disjointness of channels (and RRHs unless relaxed).
  std::set<std::tuple<int, int>> channel_use, rrh_use;
  for (int u = 0; u < inst.num_users; ++u) {
    if (!alloc.users[u]) continue;
    const auto& a = *alloc.users[u];
    if (a.provider < 0 || a.provider >= inst.num_rrhs || a.channel < 0 ||
        a.channel >= inst.num_channels || a.iteration < 1) {
      throw std::invalid_argument("sum rate: assignment out of range for user " +
                                  std::to_string(u));
    }
    if (!channel_use.insert({a.iteration, a.channel}).second) {
      throw std::invalid_argument("sum rate: channel " + std::to_string(a.channel) +
                                  " used twice in iteration " + std::to_string(a.iteration));
    }
    if (alloc.rrh_disjoint_per_iteration &&
        !rrh_use.insert({a.iteration, a.provider}).second) {
      throw std::invalid_argument("sum rate: RRH " + std::to_string(a.provider) +
                                  " used twice in iteration " + std::to_string(a.iteration));
    }
  }

  SumRateReport report;
  report.per_user_bps.assign(inst.num_users, 0.0);
  double noise_mw = dbm_to_mw(inst.params.noise_dbm);
  for (int u = 0; u < inst.num_users; ++u) {
    if (!alloc.users[u]) continue;
    const auto& a = *alloc.users[u];
    double denom = noise_mw;
    for (int v = 0; v < inst.num_users; ++v) {
      if (v == u || !alloc.users[v] || alloc.users[v]->channel != a.channel) continue;
      denom += dbm_to_mw(inst.rx_power_dbm(u, alloc.users[v]->provider));
    }
    double signal = dbm_to_mw(inst.rx_power_dbm(u, a.provider));
    report.per_user_bps[u] = rate_bps(signal / denom, inst.params.bandwidth_hz);
    report.total_bps += report.per_user_bps[u];
  }
  return report;
}

SumRateReport dualconn_sum_rate(const DualconnBuild& build, const RadioParams& params,
                                const Coloring& coloring) {
  const int num_links = static_cast<int>(build.link_tx.size());
  if (static_cast<int>(coloring.size()) != num_links) {
    throw std::invalid_argument("dualconn sum rate: coloring is not total");
  }
  SumRateReport report;
  report.per_user_bps.assign(num_links, 0.0);
  double noise_mw = dbm_to_mw(params.noise_dbm);
  for (int l = 0; l < num_links; ++l) {
    double denom = noise_mw;
    for (int o = 0; o < num_links; ++o) {
      if (o == l || coloring[o] != coloring[l]) continue;
      denom += dbm_to_mw(received_power_dbm(params, build.link_tx[o].power_dbm,
                                            distance_m(build.link_tx[o].pos, build.link_rx[l])));
    }
    double signal = dbm_to_mw(received_power_dbm(
        params, build.link_tx[l].power_dbm, distance_m(build.link_tx[l].pos, build.link_rx[l])));
    report.per_user_bps[l] = rate_bps(signal / denom, params.bandwidth_hz);
    report.total_bps += report.per_user_bps[l];
  }
  return report;
}

DualconnResult dualconn_allocate(const DualconnBuild& build, const RadioParams& params,
                                 std::uint64_t seed) {
  auto start = Clock::now();
  auto [coloring, violations] = greedy_color(build.instance, seed);
  double solver_time = seconds_since(start);

  DualconnResult result;
  result.coloring = coloring;
  result.violations = violations;
  result.report = dualconn_sum_rate(build, params, coloring);
  result.report.solver_time_s = solver_time;
  result.report.iterations = 1;
  return result;
}

D2dResult d2d_allocate(const Hypergraph& interference, const NetworkGeometry& geometry,
                       const RadioParams& params, int num_channels, GameMode mode,
                       int max_rounds, double beta, std::uint64_t seed) {
  auto start = Clock::now();
  auto state = make_game_state(interference, num_channels, seed);
  auto run = run_to_convergence(std::move(state), mode, max_rounds, beta);
  double solver_time = seconds_since(start);

  D2dResult result;
  result.trace = std::move(run.trace);
  result.rounds = run.rounds;

  const auto& profile = run.state.profile;
  const int num_links = static_cast<int>(geometry.d2d_pairs.size());
  result.report.per_user_bps.assign(num_links, 0.0);
  double noise_mw = dbm_to_mw(params.noise_dbm);
  for (int l = 0; l < num_links; ++l) {
    Point rx = geometry.d2d_pairs[l].second;
    double denom = noise_mw;
    for (int o = 0; o < num_links; ++o) {
      if (o == l || profile[o] != profile[l]) continue;
      denom += dbm_to_mw(received_power_dbm(params, params.d2d_power_dbm,
                                            distance_m(geometry.d2d_pairs[o].first, rx)));
    }
    double signal = dbm_to_mw(received_power_dbm(
        params, params.d2d_power_dbm, distance_m(geometry.d2d_pairs[l].first, rx)));
    result.report.per_user_bps[l] = rate_bps(signal / denom, params.bandwidth_hz);
    result.report.total_bps += result.report.per_user_bps[l];
  }
  result.report.solver_time_s = solver_time;
  result.report.iterations = run.rounds;
  result.state = std::move(run.state);
  return result;
}

namespace {

constexpr int kCentralizedTripleLimit = 600;  // claw size 3 below, 2 above

}  // namespace

CachingResult caching_allocate(const UniformWeightedHypergraph& g, CachingPolicy policy,
                               std::uint64_t seed) {
  if (g.rank() != 3) {
    throw std::invalid_argument("caching: expected a 3-uniform instance");
  }
  auto start = Clock::now();
  const int num_users = g.part_sizes()[0];
  const int num_providers = g.part_sizes()[1];
  const int num_channels = g.part_sizes()[2];

  CachingResult result;
  result.allocation.users.assign(num_users, std::nullopt);
  result.allocation.iterations = 1;

  if (policy == CachingPolicy::Distributed) {
    std::vector<std::vector<int>> edges_of(num_users);
    for (int e = 0; e < g.edge_count(); ++e) {
      edges_of[g.edge(e).vertices[0]].push_back(e);
    }
    std::vector<int> order(num_users);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    shuffle_vec(order, rng);

    std::vector<char> slot_taken(static_cast<size_t>(num_providers) * num_channels, 0);
    for (int u : order) {
      int pick = -1;
      for (int e : edges_of[u]) {
        const auto& v = g.edge(e).vertices;
        if (slot_taken[static_cast<size_t>(v[1]) * num_channels + v[2]]) continue;
        if (pick < 0 || g.weight(e) < g.weight(pick)) pick = e;
      }
      if (pick < 0) continue;
      const auto& v = g.edge(pick).vertices;
      slot_taken[static_cast<size_t>(v[1]) * num_channels + v[2]] = 1;
      result.allocation.users[u] = Assignment{v[1], v[2], 1};
      result.total_time_s += g.weight(pick);
      result.assigned++;
    }
  } else {
    // Shift-negate so that maximizing the matching weight minimizes the total
    // transmission time; the shift of (max + 1) keeps every edge worth
    // picking without letting cardinality swamp the time objective.
    double max_w = 0.0;
    for (int e = 0; e < g.edge_count(); ++e) max_w = std::max(max_w, g.weight(e));
    const double shift = max_w + 1.0;
    std::vector<UniformEdge> shifted;
    shifted.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      shifted.push_back({g.edge(e).vertices, shift - g.weight(e)});
    }
    UniformWeightedHypergraph flipped(g.part_sizes(), std::move(shifted));
    int k_max = g.edge_count() <= kCentralizedTripleLimit ? 3 : 2;
    Matching matched = local_search_matching(flipped, greedy_matching(flipped), k_max);
    for (int e : matched.edge_ids) {
      const auto& v = g.edge(e).vertices;
      result.allocation.users[v[0]] = Assignment{v[1], v[2], 1};
      result.total_time_s += g.weight(e);
      result.assigned++;
    }
  }
  result.report.solver_time_s = seconds_since(start);
  result.report.iterations = 1;
  return result;
}

CachingResult caching_allocate(const CachingBuild& build, const NetworkGeometry& geometry,
                               const RadioParams& params, CachingPolicy policy,
                               std::uint64_t seed) {
  CachingResult result = caching_allocate(build.hypergraph, policy, seed);
  double solver_time = result.report.solver_time_s;
  int iterations = result.report.iterations;
  result.report = caching_sum_rate(result.allocation, build, geometry, params);
  result.report.solver_time_s = solver_time;
  result.report.iterations = iterations;
  return result;
}

SumRateReport caching_sum_rate(const Allocation& alloc, const CachingBuild& build,
                               const NetworkGeometry& geometry, const RadioParams& params) {
  const int num_users = static_cast<int>(alloc.users.size());
  const int num_providers = static_cast<int>(build.provider_tx.size());
  std::set<std::pair<int, int>> slots;
  for (int u = 0; u < num_users; ++u) {
    if (!alloc.users[u]) continue;
    const auto& a = *alloc.users[u];
    if (a.provider < 0 || a.provider >= num_providers) {
      throw std::invalid_argument("caching sum rate: provider out of range");
    }
    if (!slots.insert({a.provider, a.channel}).second) {
      throw std::invalid_argument("caching sum rate: provider-channel slot used twice");
    }
  }
  SumRateReport report;
  report.per_user_bps.assign(num_users, 0.0);
  double noise_mw = dbm_to_mw(params.noise_dbm);
  for (int u = 0; u < num_users; ++u) {
    if (!alloc.users[u]) continue;
    const auto& a = *alloc.users[u];
    Point rx = geometry.users[u];
    double denom = noise_mw;
    for (int v = 0; v < num_users; ++v) {
      if (v == u || !alloc.users[v] || alloc.users[v]->channel != a.channel) continue;
      const auto& tx = build.provider_tx[alloc.users[v]->provider];
      denom += dbm_to_mw(received_power_dbm(params, tx.power_dbm, distance_m(tx.pos, rx)));
    }
    const auto& tx = build.provider_tx[a.provider];
    double signal = dbm_to_mw(received_power_dbm(params, tx.power_dbm, distance_m(tx.pos, rx)));
    report.per_user_bps[u] = rate_bps(signal / denom, params.bandwidth_hz);
    report.total_bps += report.per_user_bps[u];
  }
  return report;
}

}  // namespace hudn
