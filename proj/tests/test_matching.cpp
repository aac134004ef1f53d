#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hudn/hungarian.hpp"
#include "hudn/io.hpp"
#include "hudn/matching.hpp"
#include "hudn/oracles.hpp"
#include "hudn/rng.hpp"

using namespace hudn;

namespace {

UniformWeightedHypergraph make3(std::vector<UniformEdge> edges, std::vector<int> parts = {4, 4, 4}) {
  return UniformWeightedHypergraph(std::move(parts), std::move(edges));
}

}  // namespace

TEST_CASE("uniform hypergraph validation") {
  CHECK_THROWS_AS(UniformWeightedHypergraph({3}, {}), std::invalid_argument);  // rank 1
  CHECK_THROWS_AS(make3({{{0, 1}, 1.0}}), std::invalid_argument);              // arity mismatch
  CHECK_THROWS_AS(make3({{{0, 1, 9}, 1.0}}), std::invalid_argument);           // out of range
  CHECK_THROWS_AS(make3({{{0, 1, 2}, -1.0}}), std::invalid_argument);          // negative weight
  CHECK_THROWS_AS(make3({{{0, 1, 2}, std::nan("")}}), std::invalid_argument);
}

TEST_CASE("greedy matching") {
  SUBCASE("single edge") {
    auto g = make3({{{0, 0, 0}, 5.0}});
    auto m = greedy_matching(g);
    CHECK(m.edge_ids == std::vector<int>{0});
    CHECK(m.total_weight == 5.0);
  }
  SUBCASE("conflicting edges pick the heavier") {
    auto g = make3({{{0, 0, 0}, 2.0}, {{0, 1, 1}, 3.0}});
    auto m = greedy_matching(g);
    CHECK(m.edge_ids == std::vector<int>{1});
    CHECK(m.total_weight == 3.0);
  }
  SUBCASE("weight ties break toward the lower id") {
    auto g = make3({{{0, 0, 0}, 2.0}, {{0, 1, 1}, 2.0}});
    CHECK(greedy_matching(g).edge_ids == std::vector<int>{0});
  }
  SUBCASE("result is maximal") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      auto g = random_uniform_instance(seed, {4, 4, 4}, 10, 0.1, 5.0);
      auto m = greedy_matching(g);
      auto plain = g.to_hypergraph();
      REQUIRE(is_matching(plain, m.edge_ids));
      for (int e = 0; e < g.edge_count(); ++e) {
        auto ids = m.edge_ids;
        ids.push_back(e);
        bool in_matching =
            std::find(m.edge_ids.begin(), m.edge_ids.end(), e) != m.edge_ids.end();
        if (!in_matching) CHECK_FALSE(is_matching(plain, ids));
      }
    }
  }
}

TEST_CASE("local search: fixed point on an already optimal matching") {
  auto g = make3({{{0, 0, 0}, 4.0}, {{1, 1, 1}, 2.0}});
  auto init = greedy_matching(g);
  auto out = local_search_matching(g, init, 3);
  CHECK(out.edge_ids == init.edge_ids);
  CHECK(out.total_weight == init.total_weight);
}

TEST_CASE("local search: heavy blocker swapped for two lighter edges") {
  // one weight-5 edge conflicts with two disjoint weight-3 edges
  auto g = make3({{{0, 0, 0}, 5.0}, {{0, 1, 1}, 3.0}, {{1, 0, 0}, 3.0}});
  auto greedy = greedy_matching(g);
  CHECK(greedy.edge_ids == std::vector<int>{0});
  auto out = local_search_matching(g, greedy, 2);
  CHECK(out.edge_ids == std::vector<int>{1, 2});
  CHECK(out.total_weight == doctest::Approx(6.0));
  auto brute = oracle::max_weight_matching_bruteforce(g);
  CHECK(out.total_weight == brute.total_weight);
}

TEST_CASE("local search: augmentation keeps the result maximal") {
  auto g = make3({{{0, 0, 0}, 1.0}, {{1, 1, 1}, 0.0}});
  Matching init{{0}, 1.0};
  auto out = local_search_matching(g, init, 2);
  CHECK(out.edge_ids == std::vector<int>{0, 1});
}

TEST_CASE("local search: rejects an invalid initial matching") {
  auto g = make3({{{0, 0, 0}, 1.0}, {{0, 1, 1}, 1.0}});
  Matching conflicted{{0, 1}, 2.0};
  CHECK_THROWS_AS(local_search_matching(g, conflicted, 2), std::invalid_argument);
  Matching bad_id{{5}, 1.0};
  CHECK_THROWS_AS(local_search_matching(g, bad_id, 2), std::out_of_range);
  CHECK_THROWS_AS(local_search_matching(g, {}, 0), std::invalid_argument);
  CHECK_THROWS_AS(local_search_matching(g, {}, 4), std::invalid_argument);
}

TEST_CASE("local search: monotone, idempotent, above the greedy third bound") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    std::mt19937_64 rng(seed);
    int m = 1 + uniform_int(rng, 12);
    auto g = random_uniform_instance(seed * 3 + 1, {4, 4, 4}, m, 0.1, 10.0);
    auto greedy = greedy_matching(g);
    auto local = local_search_matching(g, greedy, 3);
    auto exact = exact_matching(g);

    CHECK(local.total_weight >= greedy.total_weight);
    CHECK(local.total_weight <= exact.total_weight + 1e-9);
    CHECK(3.0 * greedy.total_weight >= exact.total_weight - 1e-9);
    CHECK(is_matching(g.to_hypergraph(), local.edge_ids));

    auto again = local_search_matching(g, local, 3);
    CHECK(again.edge_ids == local.edge_ids);  // zero moves on its own output
  }
}

TEST_CASE("local search: best-improvement mode reaches a fixed point too") {
  LocalSearchOptions best;
  best.best_improvement = true;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto g = random_uniform_instance(seed * 7 + 5, {3, 3, 3}, 9, 0.1, 10.0);
    auto greedy = greedy_matching(g);
    auto first = local_search_matching(g, greedy, 3);
    auto bi = local_search_matching(g, greedy, 3, best);
    CHECK(bi.total_weight >= greedy.total_weight);
    auto again = local_search_matching(g, bi, 3, best);
    CHECK(again.edge_ids == bi.edge_ids);
    CHECK(is_matching(g.to_hypergraph(), bi.edge_ids));
    // both land within the exact optimum
    auto exact = exact_matching(g);
    CHECK(bi.total_weight <= exact.total_weight + 1e-9);
    CHECK(first.total_weight <= exact.total_weight + 1e-9);
  }
}

TEST_CASE("exact matching") {
  SUBCASE("empty instance") {
    auto g = make3({});
    auto m = exact_matching(g);
    CHECK(m.edge_ids.empty());
    CHECK(m.total_weight == 0.0);
  }
  SUBCASE("all edges pairwise conflicting picks the heaviest") {
    auto g = make3({{{0, 0, 0}, 1.0}, {{0, 1, 1}, 7.0}, {{0, 2, 2}, 3.0}});
    auto m = exact_matching(g);
    CHECK(m.edge_ids == std::vector<int>{1});
    CHECK(m.total_weight == 7.0);
  }
  SUBCASE("cap refusal") {
    auto g = random_uniform_instance(1, {4, 4, 4}, 25, 0.1, 1.0);
    CHECK_THROWS_AS(exact_matching(g), std::invalid_argument);
    CHECK_NOTHROW(exact_matching(g, 25));
  }
  SUBCASE("agrees with plain subset enumeration, including tie-breaks") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
      std::mt19937_64 rng(seed);
      int m = uniform_int(rng, 11);
      // coarse weights force frequent ties
      auto g = random_uniform_instance(seed * 13 + 3, {3, 3, 3}, m, 0.0, 3.0);
      std::vector<UniformEdge> coarse;
      for (const auto& e : g.edges()) {
        coarse.push_back({e.vertices, std::floor(e.weight)});
      }
      UniformWeightedHypergraph gc({3, 3, 3}, coarse);
      auto fast = exact_matching(gc);
      auto brute = oracle::max_weight_matching_bruteforce(gc);
      CHECK(fast.edge_ids == brute.edge_ids);
      CHECK(fast.total_weight == brute.total_weight);
    }
  }
}

TEST_CASE("hungarian assignment") {
  SUBCASE("identity-favoring matrix") {
    int n = 4;
    std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) cost[i][i] = 1.0;
    auto res = hungarian_assignment(cost, AssignSense::Maximize);
    CHECK(res.objective == doctest::Approx(n));
    for (int i = 0; i < n; ++i) CHECK(res.row_to_col[i] == i);
  }
  SUBCASE("1x1") {
    auto res = hungarian_assignment({{3.5}}, AssignSense::Minimize);
    CHECK(res.row_to_col == std::vector<int>{0});
    CHECK(res.objective == 3.5);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(hungarian_assignment({{1.0, 2.0}}, AssignSense::Minimize),
                    std::invalid_argument);
    double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(hungarian_assignment({{inf}}, AssignSense::Minimize), std::invalid_argument);
  }
  SUBCASE("matches factorial enumeration on random 7x7") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      std::mt19937_64 rng(seed * 5 + 11);
      std::vector<std::vector<double>> cost(7, std::vector<double>(7));
      bool integers = seed % 2 == 0;
      for (auto& row : cost) {
        for (auto& c : row) {
          c = integers ? static_cast<double>(uniform_int(rng, 21) - 10)
                       : uniform_range(rng, -5.0, 5.0);
        }
      }
      auto sense = seed % 3 == 0 ? AssignSense::Minimize : AssignSense::Maximize;
      auto fast = hungarian_assignment(cost, sense);
      auto brute = oracle::assignment_bruteforce(cost, sense);
      if (integers) {
        CHECK(fast.objective == brute.objective);
      } else {
        CHECK(fast.objective == doctest::Approx(brute.objective).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("uniform text format") {
  auto g = make3({{{0, 1, 2}, 1.5}, {{1, 2, 3}, 0.25}});
  auto text = write_uniform_text(g);
  CHECK(text == "3 4 4 4 2\n0 1 2 1.5\n1 2 3 0.25\n");
  CHECK(read_uniform_text(text) == g);

  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::mt19937_64 rng(seed);
    auto gr = random_uniform_instance(seed, {3, 5, 2}, uniform_int(rng, 12), 0.0, 7.0);
    auto t = write_uniform_text(gr);
    CHECK(read_uniform_text(t) == gr);
    CHECK(write_uniform_text(read_uniform_text(t)) == t);
  }

  CHECK_THROWS_AS(read_uniform_text("3 4 4 4 1\n0 1 2\n"), std::runtime_error);
  // corrupted weight: negative violates the weight contract
  CHECK_THROWS_AS(read_uniform_text("3 4 4 4 1\n0 1 2 -5\n"), std::invalid_argument);
}
