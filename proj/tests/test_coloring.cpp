#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hudn/coloring.hpp"
#include "hudn/io.hpp"
#include "hudn/oracles.hpp"
#include "hudn/rng.hpp"
#include "instance_families.hpp"

using namespace hudn;

namespace {

// Random instance whose hard pairs are all backed by 2-vertex edges.
ColoringInstance random_instance(std::uint64_t seed, int max_n, int max_m, int k,
                                 int hard_pair_count) {
  std::mt19937_64 rng(seed);
  int n = std::max(2, 1 + uniform_int(rng, max_n));
  std::vector<std::vector<VertexId>> edges;
  int m = uniform_int(rng, max_m + 1);
  for (int j = 0; j < m; ++j) {
    int size = 1 + uniform_int(rng, std::min(4, n));
    std::vector<VertexId> e;
    for (int i = 0; i < size; ++i) e.push_back(uniform_int(rng, n));
    edges.push_back(std::move(e));
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int p = 0; p < hard_pair_count; ++p) {
    int a = uniform_int(rng, n);
    int b = uniform_int(rng, n);
    if (a == b) continue;
    pairs.emplace_back(a, b);
    edges.push_back({a, b});
  }
  return make_coloring_instance(Hypergraph(n, std::move(edges)), k, std::move(pairs));
}

}  // namespace

TEST_CASE("instance validation") {
  Hypergraph h(3, {{0, 1}});
  CHECK_NOTHROW(make_coloring_instance(h, 2, {{0, 1}}));
  CHECK_THROWS_AS(make_coloring_instance(h, 0, {}), std::invalid_argument);
  // hard pair without its 2-vertex edge
  CHECK_THROWS_AS(make_coloring_instance(h, 2, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_coloring_instance(h, 2, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("check_coloring") {
  auto inst = make_coloring_instance(Hypergraph(3, {{0, 1}, {0, 1, 2}}), 3, {});

  SUBCASE("monochromatic pair is reported") {
    auto report = check_coloring(inst, {2, 2, 1});
    CHECK(report.monochromatic_edges == std::vector<int>{0});
    CHECK(report.hard_pair_violations.empty());
  }
  SUBCASE("two colors on a 3-edge is no violation") {
    auto report = check_coloring(inst, {0, 0, 1});
    CHECK(report.monochromatic_edges == std::vector<int>{0});  // only the pair violates
    auto report2 = check_coloring(inst, {0, 1, 0});
    CHECK(report2.clean());
  }
  SUBCASE("singleton and empty edges never violate") {
    auto small = make_coloring_instance(Hypergraph(2, {{0}, {}}), 1, {});
    CHECK(check_coloring(small, {0, 0}).clean());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(check_coloring(inst, {0, 1}), std::invalid_argument);        // not total
    CHECK_THROWS_AS(check_coloring(inst, {0, 1, 3}), std::invalid_argument);     // color >= K
    CHECK_THROWS_AS(check_coloring(inst, {0, 1, -1}), std::invalid_argument);
  }
}

TEST_CASE("check_coloring matches the naive oracle") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto inst = random_instance(seed, 12, 10, 3, 2);
    std::mt19937_64 rng(seed + 999);
    Coloring coloring(inst.hypergraph.vertex_count());
    for (auto& c : coloring) c = uniform_int(rng, inst.num_colors);
    auto fast = check_coloring(inst, coloring);
    auto naive = oracle::check_coloring_naive(inst, coloring);
    CHECK(fast.monochromatic_edges == naive.monochromatic_edges);
    CHECK(fast.hard_pair_violations == naive.hard_pair_violations);
  }
}

TEST_CASE("greedy_color: hard pair gets two colors when K >= 2") {
  auto inst = make_coloring_instance(Hypergraph(2, {{0, 1}}), 2, {{0, 1}});
  auto [coloring, report] = greedy_color(inst, 1);
  CHECK(coloring[0] != coloring[1]);
  CHECK(report.clean());
}

TEST_CASE("greedy_color: K=1 cannot avoid a monochromatic edge") {
  auto inst = make_coloring_instance(Hypergraph(3, {{0, 1, 2}}), 1, {});
  auto [coloring, report] = greedy_color(inst, 1);
  CHECK(report.monochromatic_edges == std::vector<int>{0});
}

TEST_CASE("greedy_color: returned report equals a fresh check, deterministic") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto inst = random_instance(seed * 3, 14, 12, 1 + static_cast<int>(seed % 4), 2);
    auto [coloring, report] = greedy_color(inst, seed);
    auto recheck = check_coloring(inst, coloring);
    CHECK(report.monochromatic_edges == recheck.monochromatic_edges);
    CHECK(report.hard_pair_violations == recheck.hard_pair_violations);

    auto [coloring2, report2] = greedy_color(inst, seed);
    CHECK(coloring == coloring2);
  }
}

TEST_CASE("greedy_color: hard pairs hold whenever partners stay below K") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    int k = 2 + static_cast<int>(seed % 3);
    auto inst = random_instance(seed * 7 + 1, 10, 6, k, 3);
    // count hard-pair partners per vertex
    std::vector<int> partners(inst.hypergraph.vertex_count(), 0);
    for (auto [a, b] : inst.hard_pairs) {
      partners[a]++;
      partners[b]++;
    }
    if (*std::max_element(partners.begin(), partners.end()) >= k) continue;
    ++checked;
    auto [coloring, report] = greedy_color(inst, seed);
    CHECK(report.hard_pair_violations.empty());
  }
  CHECK(checked > 50);
}

TEST_CASE("greedy_color: enough colors for the pairwise degree means no violations") {
  int zero = 0, total = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto inst = families::pairwise_coloring_instance(seed, 1);
    inst.num_colors = families::max_pairwise_degree(inst.hypergraph) + 1;
    auto [coloring, report] = greedy_color(inst, seed);
    ++total;
    if (report.clean()) ++zero;
  }
  CHECK(zero >= total * 99 / 100);
}

TEST_CASE("coloring text format round trips") {
  auto inst = make_coloring_instance(Hypergraph(4, {{0, 1}, {1, 2, 3}, {0, 3}}), 3, {{0, 3}});
  auto text = write_coloring_text(inst);
  CHECK(text == "4 3 3 1\n0 1\n1 2 3\n0 3\n0 3\n");
  auto back = read_coloring_text(text);
  CHECK(back == inst);
  CHECK(write_coloring_text(back) == text);

  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto gi = random_instance(seed + 4000, 10, 8, 2 + static_cast<int>(seed % 3), 2);
    auto t = write_coloring_text(gi);
    CHECK(read_coloring_text(t) == gi);
    CHECK(write_coloring_text(read_coloring_text(t)) == t);
  }
}
