#include "hudn/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hudn {

ColoringInstance make_coloring_instance(Hypergraph h, int num_colors,
                                        std::vector<std::pair<VertexId, VertexId>> hard_pairs) {
  if (num_colors < 1) {
    throw std::invalid_argument("coloring instance: need at least one color");
  }
  for (auto [a, b] : hard_pairs) {
    if (a < 0 || a >= h.vertex_count() || b < 0 || b >= h.vertex_count() || a == b) {
      throw std::invalid_argument("coloring instance: invalid hard pair");
    }
    std::vector<VertexId> want{std::min(a, b), std::max(a, b)};
    bool found = false;
    for (const auto& e : h.edges()) {
      if (e == want) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("coloring instance: hard pair (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") has no matching 2-vertex hyperedge");
    }
  }
  return ColoringInstance{std::move(h), num_colors, std::move(hard_pairs)};
}

ViolationReport check_coloring(const ColoringInstance& inst, const Coloring& coloring) {
  const auto& h = inst.hypergraph;
  if (static_cast<int>(coloring.size()) != h.vertex_count()) {
    throw std::invalid_argument("check_coloring: assignment is not total");
  }
  for (int c : coloring) {
    if (c < 0 || c >= inst.num_colors) {
      throw std::invalid_argument("check_coloring: color " + std::to_string(c) +
                                  " outside [0, K)");
    }
  }
  ViolationReport report;
  for (int j = 0; j < h.edge_count(); ++j) {
    const auto& e = h.edge(j);
    if (e.size() < 2) continue;
    int first = coloring[e[0]];
    bool mono = std::all_of(e.begin(), e.end(), [&](VertexId v) { return coloring[v] == first; });
    if (mono) report.monochromatic_edges.push_back(j);
  }
  for (auto [a, b] : inst.hard_pairs) {
    if (coloring[a] == coloring[b]) report.hard_pair_violations.emplace_back(a, b);
  }
  return report;
}

std::pair<Coloring, ViolationReport> greedy_color(const ColoringInstance& inst,
                                                  std::uint64_t /*seed*/) {
  const auto& h = inst.hypergraph;
  const int n = h.vertex_count();
  const int k = inst.num_colors;
  auto incident = incident_edges(h);

  std::vector<std::vector<VertexId>> hard_partners(n);
  for (auto [a, b] : inst.hard_pairs) {
    hard_partners[a].push_back(b);
    hard_partners[b].push_back(a);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (incident[a].size() != incident[b].size()) return incident[a].size() > incident[b].size();
    return a < b;
  });

  Coloring coloring(n, -1);
  // Per edge: how many members are already colored, and whether those share
  // one color (and which).
  std::vector<int> colored_count(h.edge_count(), 0);
  std::vector<int> mono_color(h.edge_count(), -1);
  std::vector<char> still_uniform(h.edge_count(), 1);

  for (int v : order) {
    std::vector<long long> cost(k, 0);
    const long long kHardPenalty = 1LL << 40;
    for (VertexId p : hard_partners[v]) {
      if (coloring[p] >= 0) cost[coloring[p]] += kHardPenalty;
    }
    for (int e : incident[v]) {
      const auto& members = h.edge(e);
      if (members.size() < 2) continue;
      // Choosing mono_color[e] for the last uncolored member completes the
      // edge monochromatically.
      if (still_uniform[e] && colored_count[e] == static_cast<int>(members.size()) - 1 &&
          colored_count[e] > 0) {
        cost[mono_color[e]] += 1;
      }
    }
    int chosen = 0;
    for (int c = 1; c < k; ++c) {
      if (cost[c] < cost[chosen]) chosen = c;
    }
    coloring[v] = chosen;
    for (int e : incident[v]) {
      if (colored_count[e] == 0) {
        mono_color[e] = chosen;
      } else if (still_uniform[e] && mono_color[e] != chosen) {
        still_uniform[e] = 0;
      }
      colored_count[e]++;
    }
  }
  return {coloring, check_coloring(inst, coloring)};
}

}  // namespace hudn
