#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "hudn/oracles.hpp"
#include "hudn/pipelines.hpp"
#include "hudn/rng.hpp"

using namespace hudn;

namespace {

NetworkGeometry small_geometry(std::uint64_t seed, int users, int rrhs, double area = 500.0) {
  GeometryConfig cfg;
  cfg.area_m = area;
  cfg.num_users = users;
  cfg.num_saps = rrhs;
  return make_geometry(cfg, seed);
}

void check_allocation_invariants(const Allocation& alloc, int num_rrhs, int num_channels) {
  std::set<std::pair<int, int>> channels, rrhs;
  for (const auto& entry : alloc.users) {
    if (!entry) continue;
    CHECK(entry->provider >= 0);
    CHECK(entry->provider < num_rrhs);
    CHECK(entry->channel >= 0);
    CHECK(entry->channel < num_channels);
    CHECK(entry->iteration >= 1);
    CHECK(channels.insert({entry->iteration, entry->channel}).second);
    if (alloc.rrh_disjoint_per_iteration) {
      CHECK(rrhs.insert({entry->iteration, entry->provider}).second);
    }
  }
}

}  // namespace

TEST_CASE("cran iterative matching: single viable triple") {
  NetworkGeometry geo;
  geo.area_m = 500.0;
  geo.macro = {250.0, 250.0};
  geo.users = {{100.0, 100.0}};
  geo.saps = {{120.0, 100.0}};
  RadioParams params;
  auto build = build_cran_instance(geo, params, 1);
  auto result = cran_iterative_matching(build.instance);

  REQUIRE(result.allocation.users[0].has_value());
  CHECK(result.allocation.users[0]->iteration == 1);
  CHECK(result.report.total_bps ==
        doctest::Approx(build.instance.standalone_rate(0, 0)).epsilon(1e-12));
  CHECK(result.report.iterations >= 1);
}

TEST_CASE("cran iterative matching: destructive co-channel pair assigns one user") {
  // two users squeezed together with one channel: the second assignment would
  // wreck the first, so its marginal goes negative and the edge is pruned
  NetworkGeometry geo;
  geo.area_m = 500.0;
  geo.macro = {250.0, 250.0};
  geo.users = {{100.0, 100.0}, {110.0, 100.0}};
  geo.saps = {{101.0, 100.0}, {111.0, 100.0}};
  RadioParams params;
  auto build = build_cran_instance(geo, params, 1);
  auto result = cran_iterative_matching(build.instance);

  CHECK(result.allocation.assigned_count() == 1);

  // direct comparison: serving both on the channel is worse than one alone
  Allocation both;
  both.users = {Assignment{0, 0, 1}, Assignment{1, 0, 2}};
  double both_rate = recompute_sum_rate(both, build.instance).total_bps;
  CHECK(result.report.total_bps > both_rate);
}

TEST_CASE("cran iterative matching: invariants on random instances") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto geo = small_geometry(seed, 6, 4);
    RadioParams params;
    auto build = build_cran_instance(geo, params, 3);
    auto result = cran_iterative_matching(build.instance);

    check_allocation_invariants(result.allocation, 4, 3);
    // sum-rate monotone across iterations
    for (size_t t = 1; t < result.sum_rate_by_iteration.size(); ++t) {
      CHECK(result.sum_rate_by_iteration[t] >=
            result.sum_rate_by_iteration[t - 1] * (1.0 - 1e-6));
    }
    if (!result.sum_rate_by_iteration.empty()) {
      CHECK(result.sum_rate_by_iteration.back() ==
            doctest::Approx(result.report.total_bps).epsilon(1e-9));
    }

    // deterministic rerun
    auto rerun = cran_iterative_matching(build.instance);
    CHECK(rerun.allocation.users == result.allocation.users);
    CHECK(rerun.report.total_bps == result.report.total_bps);
  }
}

TEST_CASE("cran iterative matching: channel-only disjointness lets RRHs repeat") {
  // both users nearest to the same strong RRH; channel-only mode may serve
  // them from it in one iteration on different channels
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto geo = small_geometry(seed + 40, 5, 3);
    RadioParams params;
    auto build = build_cran_instance(geo, params, 3);
    CranOptions options;
    options.channel_only_disjoint = true;
    auto result = cran_iterative_matching(build.instance, options);
    CHECK_FALSE(result.allocation.rrh_disjoint_per_iteration);
    check_allocation_invariants(result.allocation, 3, 3);  // channel uniqueness still holds
  }
}

TEST_CASE("cran baseline: single user takes the nearest RRH and best channel") {
  NetworkGeometry geo;
  geo.area_m = 500.0;
  geo.macro = {250.0, 250.0};
  geo.users = {{100.0, 100.0}};
  geo.saps = {{200.0, 200.0}, {120.0, 100.0}};
  RadioParams params;
  auto build = build_cran_instance(geo, params, 2);
  auto result = cran_bipartite_baseline(build.instance);

  REQUIRE(result.allocation.users[0].has_value());
  CHECK(result.allocation.users[0]->provider == 1);  // nearest
  CHECK(result.report.iterations == 1);
  CHECK(result.report.total_bps ==
        doctest::Approx(build.instance.standalone_rate(0, 1)).epsilon(1e-12));
}

TEST_CASE("cran baseline: M <= K users with distinct nearest RRHs finish in one round") {
  NetworkGeometry geo;
  geo.area_m = 900.0;
  geo.macro = {450.0, 450.0};
  geo.users = {{100.0, 100.0}, {500.0, 500.0}, {800.0, 200.0}};
  geo.saps = {{110.0, 100.0}, {510.0, 500.0}, {810.0, 200.0}};
  RadioParams params;
  auto build = build_cran_instance(geo, params, 5);
  auto result = cran_bipartite_baseline(build.instance);
  CHECK(result.allocation.assigned_count() == 3);
  CHECK(result.report.iterations == 1);
  check_allocation_invariants(result.allocation, 3, 5);
}

TEST_CASE("cran baseline: invariants and determinism on random instances") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto geo = small_geometry(seed + 100, 7, 4);
    RadioParams params;
    auto build = build_cran_instance(geo, params, 3);
    auto result = cran_bipartite_baseline(build.instance);
    check_allocation_invariants(result.allocation, 4, 3);
    // every assigned user sits on its nearest RRH
    for (int u = 0; u < 7; ++u) {
      if (!result.allocation.users[u]) continue;
      int nearest = 0;
      double best = distance_m(geo.users[u], geo.saps[0]);
      for (int r = 1; r < 4; ++r) {
        double d = distance_m(geo.users[u], geo.saps[r]);
        if (d < best) {
          best = d;
          nearest = r;
        }
      }
      CHECK(result.allocation.users[u]->provider == nearest);
    }
    auto rerun = cran_bipartite_baseline(build.instance);
    CHECK(rerun.allocation.users == result.allocation.users);
  }
}

TEST_CASE("recompute_sum_rate: manual three-node check and error paths") {
  NetworkGeometry geo;
  geo.area_m = 1000.0;
  geo.macro = {500.0, 500.0};
  geo.users = {{0.0, 0.0}, {300.0, 0.0}};
  geo.saps = {{10.0, 0.0}, {310.0, 0.0}};
  RadioParams params;
  auto build = build_cran_instance(geo, params, 2);

  SUBCASE("single assignment equals standalone") {
    Allocation alloc;
    alloc.users = {Assignment{0, 0, 1}, std::nullopt};
    auto report = recompute_sum_rate(alloc, build.instance);
    CHECK(report.total_bps ==
          doctest::Approx(build.instance.standalone_rate(0, 0)).epsilon(1e-12));
  }
  SUBCASE("co-channel pair: both strictly below standalone, manual formula") {
    Allocation alloc;
    alloc.users = {Assignment{0, 0, 1}, Assignment{1, 0, 2}};
    auto report = recompute_sum_rate(alloc, build.instance);
    CHECK(report.per_user_bps[0] < build.instance.standalone_rate(0, 0));
    CHECK(report.per_user_bps[1] < build.instance.standalone_rate(1, 1));

    auto manual = [&](int u, int own, int other) {
      double signal = std::pow(10.0, build.instance.rx_power_dbm(u, own) / 10.0);
      double interf = std::pow(10.0, build.instance.rx_power_dbm(u, other) / 10.0);
      double noise = std::pow(10.0, params.noise_dbm / 10.0);
      return params.bandwidth_hz * std::log2(1.0 + signal / (noise + interf));
    };
    CHECK(report.per_user_bps[0] == doctest::Approx(manual(0, 0, 1)).epsilon(1e-9));
    CHECK(report.per_user_bps[1] == doctest::Approx(manual(1, 1, 0)).epsilon(1e-9));
  }
  SUBCASE("inconsistent allocations are rejected") {
    Allocation same_channel;
    same_channel.users = {Assignment{0, 1, 1}, Assignment{1, 1, 1}};
    CHECK_THROWS_AS(recompute_sum_rate(same_channel, build.instance), std::invalid_argument);
    Allocation same_rrh;
    same_rrh.users = {Assignment{0, 0, 1}, Assignment{0, 1, 1}};
    CHECK_THROWS_AS(recompute_sum_rate(same_rrh, build.instance), std::invalid_argument);
    Allocation bad_range;
    bad_range.users = {Assignment{7, 0, 1}, std::nullopt};
    CHECK_THROWS_AS(recompute_sum_rate(bad_range, build.instance), std::invalid_argument);
  }
}

TEST_CASE("dualconn pipeline") {
  RadioParams params;
  SUBCASE("one user, two channels: hard pair always split") {
    auto geo = small_geometry(5, 1, 2);
    auto build = build_dualconn_instance(geo, params, 2);
    auto result = dualconn_allocate(build, params, 3);
    CHECK(result.coloring[0] != result.coloring[1]);
    CHECK(result.violations.hard_pair_violations.empty());
  }
  SUBCASE("clean coloring has no monochromatic edge; violations cost sum rate") {
    auto geo = small_geometry(8, 3, 3);
    auto build = build_dualconn_instance(geo, params, 6);
    auto result = dualconn_allocate(build, params, 1);
    auto recheck = check_coloring(build.instance, result.coloring);
    CHECK(result.violations.monochromatic_edges == recheck.monochromatic_edges);

    // force everything onto one channel and compare
    Coloring all_same(build.instance.hypergraph.vertex_count(), 0);
    auto clean_rate = dualconn_sum_rate(build, params, result.coloring);
    auto jammed_rate = dualconn_sum_rate(build, params, all_same);
    if (result.violations.clean()) {
      CHECK(clean_rate.total_bps > jammed_rate.total_bps);
    }
  }
  SUBCASE("determinism") {
    auto geo = small_geometry(11, 4, 3);
    auto build = build_dualconn_instance(geo, params, 4);
    auto a = dualconn_allocate(build, params, 9);
    auto b = dualconn_allocate(build, params, 9);
    CHECK(a.coloring == b.coloring);
    CHECK(a.report.total_bps == b.report.total_bps);
  }
}

TEST_CASE("d2d pipeline") {
  RadioParams params;
  GeometryConfig cfg;
  cfg.area_m = 500.0;
  cfg.num_d2d_pairs = 10;

  SUBCASE("best response: potential never rises, reproducible") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      auto geo = make_geometry(cfg, seed);
      auto h = build_d2d_instance(geo, params);
      auto result = d2d_allocate(h, geo, params, 3, GameMode::BestResponse, 200, 1.0, seed);
      CHECK(result.trace.points.back().second <= result.trace.points.front().second);
      CHECK(is_nash_equilibrium(result.state));

      auto rerun = d2d_allocate(h, geo, params, 3, GameMode::BestResponse, 200, 1.0, seed);
      CHECK(rerun.state.profile == result.state.profile);
      CHECK(rerun.report.total_bps == result.report.total_bps);
    }
  }
  SUBCASE("enough channels drive the potential to zero") {
    auto geo = make_geometry(cfg, 77);
    auto h = build_d2d_instance(geo, params);
    size_t max_degree = 0;
    for (int v = 0; v < h.vertex_count(); ++v) {
      max_degree = std::max(max_degree, adjacent_vertices(h, v).size());
    }
    auto result = d2d_allocate(h, geo, params, static_cast<int>(max_degree) + 1,
                               GameMode::BestResponse, 500, 1.0, 77);
    CHECK(potential(result.state) == 0);
  }
  SUBCASE("stochastic mode reports the best seen profile") {
    auto geo = make_geometry(cfg, 13);
    auto h = build_d2d_instance(geo, params);
    auto result = d2d_allocate(h, geo, params, 3, GameMode::Stochastic, 60, 1.0, 13);
    long long best = result.trace.points.front().second;
    for (auto [round, phi] : result.trace.points) best = std::min(best, phi);
    CHECK(potential(result.state) == best);
  }
}

TEST_CASE("caching pipeline") {
  SUBCASE("slot contention: exactly one of two rivals wins") {
    // two users, one provider, one channel
    UniformWeightedHypergraph g({2, 1, 1}, {{{0, 0, 0}, 2.0}, {{1, 0, 0}, 3.0}});
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      auto result = caching_allocate(g, CachingPolicy::Distributed, seed);
      CHECK(result.assigned == 1);
    }
  }
  SUBCASE("loser takes its next-best feasible edge") {
    // user 0 prefers slot (0,0); user 1 only has (0,0); user 0 also has (1,0)
    UniformWeightedHypergraph g({2, 2, 1},
                                {{{0, 0, 0}, 1.0}, {{0, 1, 0}, 5.0}, {{1, 0, 0}, 2.0}});
    int both = 0;
    for (std::uint64_t seed = 1; seed <= 16; ++seed) {
      auto result = caching_allocate(g, CachingPolicy::Distributed, seed);
      if (result.assigned == 2) {
        ++both;
        // user 1 must hold (0,0), user 0 the fallback (1,0)
        CHECK(result.allocation.users[1]->provider == 0);
        CHECK(result.allocation.users[0]->provider == 1);
      } else {
        // user 0 grabbed its cheap slot first and user 1 went without
        CHECK(result.allocation.users[0]->provider == 0);
        CHECK_FALSE(result.allocation.users[1].has_value());
      }
    }
    CHECK(both > 0);  // user-1-first orders occur across seeds
  }
  SUBCASE("distributed picks the cheapest free edge per user") {
    UniformWeightedHypergraph g({1, 2, 2},
                                {{{0, 0, 0}, 4.0}, {{0, 1, 0}, 2.0}, {{0, 1, 1}, 7.0}});
    auto result = caching_allocate(g, CachingPolicy::Distributed, 1);
    REQUIRE(result.assigned == 1);
    CHECK(result.allocation.users[0]->provider == 1);
    CHECK(result.allocation.users[0]->channel == 0);
    CHECK(result.total_time_s == 2.0);
  }
  SUBCASE("centralized matches the shift-negated exact oracle on small instances") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      auto g = families::caching_comparison_instance(seed);
      if (g.edge_count() == 0) continue;
      auto central = caching_allocate(g, CachingPolicy::Centralized, seed);

      double max_w = 0.0;
      for (int e = 0; e < g.edge_count(); ++e) max_w = std::max(max_w, g.weight(e));
      std::vector<UniformEdge> shifted;
      for (int e = 0; e < g.edge_count(); ++e) {
        shifted.push_back({g.edge(e).vertices, max_w + 1.0 - g.weight(e)});
      }
      UniformWeightedHypergraph flipped(g.part_sizes(), shifted);
      auto oracle_best = oracle::max_weight_matching_bruteforce(flipped);
      double oracle_time = 0.0;
      for (int e : oracle_best.edge_ids) oracle_time += g.weight(e);

      CHECK(central.total_time_s == doctest::Approx(oracle_time).epsilon(1e-9));

      auto distributed = caching_allocate(g, CachingPolicy::Distributed, seed);
      CHECK(central.total_time_s <= distributed.total_time_s + 1e-9);
    }
  }
  SUBCASE("rejects non-3-uniform instances") {
    UniformWeightedHypergraph g2({2, 2}, {{{0, 0}, 1.0}});
    CHECK_THROWS_AS(caching_allocate(g2, CachingPolicy::Distributed, 1), std::invalid_argument);
  }
}

TEST_CASE("caching pipeline with context: rates and D2D-forced mode") {
  GeometryConfig cfg;
  cfg.num_users = 4;
  cfg.num_saps = 2;
  auto geo = make_geometry(cfg, 19);
  RadioParams params;
  ContentCatalog cat;
  cat.contents = {{1e7, 0.0}, {2e7, 0.0}};
  cat.sap_cache = {{0}, {0}};
  cat.user_cache = {{}, {1}, {}, {}};
  cat.requests = {0, 0, 1, 0};  // user 2 needs content 1: only user 1 has it
  auto build = build_caching_instance(geo, params, cat, 2);

  auto result = caching_allocate(build, geo, params, CachingPolicy::Distributed, 3);
  if (result.allocation.users[2]) {
    CHECK(result.allocation.users[2]->provider >= build.num_saps);  // virtual vertex
  }
  for (int u = 0; u < 4; ++u) {
    if (result.allocation.users[u]) {
      CHECK(result.report.per_user_bps[u] > 0.0);
    } else {
      CHECK(result.report.per_user_bps[u] == 0.0);
    }
  }
}
