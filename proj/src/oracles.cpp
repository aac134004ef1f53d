#include "hudn/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hudn::oracle {

Matching max_weight_matching_bruteforce(const UniformWeightedHypergraph& g) {
  const int m = g.edge_count();
  if (m > 22) throw std::invalid_argument("bruteforce matching: instance too large");
  std::vector<int> best_ids;
  double best_w = 0.0;
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    std::vector<int> ids;
    for (int e = 0; e < m; ++e) {
      if (mask & (1UL << e)) ids.push_back(e);
    }
    bool ok = true;
    for (size_t a = 0; a < ids.size() && ok; ++a) {
      for (size_t b = a + 1; b < ids.size() && ok; ++b) {
        for (int p = 0; p < g.rank(); ++p) {
          if (g.edge(ids[a]).vertices[p] == g.edge(ids[b]).vertices[p]) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) continue;
    double w = 0.0;
    for (int e : ids) w += g.weight(e);
    if (w > best_w || (w == best_w && std::lexicographical_compare(ids.begin(), ids.end(),
                                                                   best_ids.begin(),
                                                                   best_ids.end()))) {
      best_w = w;
      best_ids = ids;
    }
  }
  Matching out;
  out.edge_ids = std::move(best_ids);
  out.total_weight = 0.0;
  for (int e : out.edge_ids) out.total_weight += g.weight(e);
  return out;
}

AssignmentResult assignment_bruteforce(const std::vector<std::vector<double>>& cost,
                                       AssignSense sense) {
  const int n = static_cast<int>(cost.size());
  if (n > 9) throw std::invalid_argument("bruteforce assignment: matrix too large");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  AssignmentResult best;
  bool first = true;
  do {
    double obj = 0.0;
    for (int i = 0; i < n; ++i) obj += cost[i][perm[i]];
    bool better = sense == AssignSense::Maximize ? obj > best.objective : obj < best.objective;
    if (first || better) {
      best.objective = obj;
      best.row_to_col = perm;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<VertexId> adjacent_vertices_naive(const Hypergraph& h, VertexId v) {
  std::vector<VertexId> out;
  for (VertexId u = 0; u < h.vertex_count(); ++u) {
    if (u == v) continue;
    bool adjacent = false;
    for (const auto& e : h.edges()) {
      bool has_u = false, has_v = false;
      for (VertexId w : e) {
        has_u |= (w == u);
        has_v |= (w == v);
      }
      if (has_u && has_v) {
        adjacent = true;
        break;
      }
    }
    if (adjacent) out.push_back(u);
  }
  return out;
}

bool edges_intersect_naive(const Hypergraph& h, int a, int b) {
  for (VertexId x : h.edge(a)) {
    for (VertexId y : h.edge(b)) {
      if (x == y) return true;
    }
  }
  return false;
}

bool is_matching_naive(const Hypergraph& h, const std::vector<int>& edge_ids) {
  for (size_t a = 0; a < edge_ids.size(); ++a) {
    for (size_t b = a + 1; b < edge_ids.size(); ++b) {
      if (edges_intersect_naive(h, edge_ids[a], edge_ids[b])) return false;
    }
  }
  return true;
}

ViolationReport check_coloring_naive(const ColoringInstance& inst, const Coloring& coloring) {
  ViolationReport report;
  for (int j = 0; j < inst.hypergraph.edge_count(); ++j) {
    const auto& e = inst.hypergraph.edge(j);
    if (e.size() < 2) continue;
    bool mono = true;
    for (size_t i = 1; i < e.size(); ++i) {
      if (coloring[e[i]] != coloring[e[0]]) mono = false;
    }
    if (mono) report.monochromatic_edges.push_back(j);
  }
  for (auto [a, b] : inst.hard_pairs) {
    if (coloring[a] == coloring[b]) report.hard_pair_violations.emplace_back(a, b);
  }
  return report;
}

long long potential_naive(const ChannelGameState& state) {
  long long phi = 0;
  const int n = state.player_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool adjacent =
          std::find(state.adjacency[u].begin(), state.adjacency[u].end(), v) !=
          state.adjacency[u].end();
      if (adjacent && state.profile[u] == state.profile[v]) ++phi;
    }
  }
  return phi;
}

bool claw_is_valid(const RepresentativeGraph& l, const Claw& claw, int k) {
  if (static_cast<int>(claw.talons.size()) != k) return false;
  for (size_t i = 0; i < claw.talons.size(); ++i) {
    if (!l.adjacent(claw.center, claw.talons[i])) return false;
    for (size_t j = i + 1; j < claw.talons.size(); ++j) {
      if (l.adjacent(claw.talons[i], claw.talons[j])) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> minimal_oversum_sets_naive(const std::vector<double>& contributions,
                                                         double threshold, int max_size) {
  const int n = static_cast<int>(contributions.size());
  if (n > 25) throw std::invalid_argument("minimal oversum: too many candidates");
  std::vector<std::vector<int>> over;  // all over-threshold sets up to max_size
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    std::vector<int> ids;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1UL << i)) {
        ids.push_back(i);
        sum += contributions[i];
      }
    }
    if (static_cast<int>(ids.size()) > max_size || sum < threshold) continue;
    over.push_back(std::move(ids));
  }
  std::vector<std::vector<int>> minimal;
  for (const auto& s : over) {
    bool has_proper_subset = false;
    for (const auto& t : over) {
      if (t.size() >= s.size()) continue;
      if (std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        has_proper_subset = true;
        break;
      }
    }
    // A proper over-threshold subset larger than max_size cannot exist: any
    // subset of an over set examined here has size < max_size already.
    if (!has_proper_subset) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

}  // namespace hudn::oracle
