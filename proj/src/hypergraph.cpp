#include "hudn/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace hudn {

Hypergraph::Hypergraph(int vertex_count, std::vector<std::vector<VertexId>> edge_family)
    : vertex_count_(vertex_count), edges_(std::move(edge_family)) {
  if (vertex_count < 0) {
    throw std::invalid_argument("hypergraph: negative vertex count");
  }
  for (size_t j = 0; j < edges_.size(); ++j) {
    auto& members = edges_[j];
    for (VertexId v : members) {
      if (v < 0 || v >= vertex_count_) {
        throw std::invalid_argument("hypergraph: edge " + std::to_string(j) + ": vertex " +
                                    std::to_string(v) + " out of range (n=" +
                                    std::to_string(vertex_count_) + ")");
      }
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
}

const std::vector<VertexId>& Hypergraph::edge(int edge_id) const {
  if (edge_id < 0 || edge_id >= edge_count()) {
    throw std::out_of_range("hypergraph: edge id " + std::to_string(edge_id) + " out of range");
  }
  return edges_[edge_id];
}

IncidenceMatrix incidence_matrix(const Hypergraph& h) {
  IncidenceMatrix m;
  m.rows = h.vertex_count();
  m.cols = h.edge_count();
  m.data.assign(static_cast<size_t>(m.rows) * m.cols, 0);
  for (int j = 0; j < m.cols; ++j) {
    for (VertexId v : h.edge(j)) {
      m.at(v, j) = 1;
    }
  }
  return m;
}

Hypergraph from_incidence_matrix(const IncidenceMatrix& m) {
  std::vector<std::vector<VertexId>> edges(m.cols);
  for (int j = 0; j < m.cols; ++j) {
    for (int i = 0; i < m.rows; ++i) {
      unsigned char e = m.at(i, j);
      if (e != 0 && e != 1) {
        throw std::invalid_argument("incidence matrix: non-binary entry at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (e) edges[j].push_back(i);
    }
  }
  return Hypergraph(m.rows, std::move(edges));
}

std::vector<VertexId> adjacent_vertices(const Hypergraph& h, VertexId v) {
  if (v < 0 || v >= h.vertex_count()) {
    throw std::out_of_range("adjacent_vertices: vertex " + std::to_string(v) + " out of range");
  }
  std::set<VertexId> out;
  for (const auto& e : h.edges()) {
    if (std::binary_search(e.begin(), e.end(), v)) {
      out.insert(e.begin(), e.end());
    }
  }
  out.erase(v);
  return {out.begin(), out.end()};
}

std::vector<std::vector<int>> incident_edges(const Hypergraph& h) {
  std::vector<std::vector<int>> inc(h.vertex_count());
  for (int j = 0; j < h.edge_count(); ++j) {
    for (VertexId v : h.edge(j)) inc[v].push_back(j);
  }
  return inc;
}

bool is_covering(const Hypergraph& h) {
  std::vector<char> seen(h.vertex_count(), 0);
  for (const auto& e : h.edges()) {
    for (VertexId v : e) seen[v] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool RepresentativeGraph::adjacent(int a, int b) const {
  const auto& adj = adjacency[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

RepresentativeGraph representative_graph(const Hypergraph& h) {
  RepresentativeGraph l;
  l.node_count = h.edge_count();
  l.adjacency.assign(l.node_count, {});
  std::vector<std::set<int>> adj(l.node_count);
  auto inc = incident_edges(h);
  for (const auto& edges_here : inc) {
    for (size_t a = 0; a < edges_here.size(); ++a) {
      for (size_t b = a + 1; b < edges_here.size(); ++b) {
        adj[edges_here[a]].insert(edges_here[b]);
        adj[edges_here[b]].insert(edges_here[a]);
      }
    }
  }
  for (int i = 0; i < l.node_count; ++i) {
    l.adjacency[i].assign(adj[i].begin(), adj[i].end());
  }
  return l;
}

namespace {

void claw_dfs(const RepresentativeGraph& l, int center, int k,
              const std::vector<int>& neighbors, size_t start, std::vector<int>& talons,
              std::vector<Claw>& out) {
  if (static_cast<int>(talons.size()) == k) {
    out.push_back({center, talons});
    return;
  }
  for (size_t i = start; i < neighbors.size(); ++i) {
    int cand = neighbors[i];
    bool independent = true;
    for (int t : talons) {
      if (l.adjacent(t, cand)) {
        independent = false;
        break;
      }
    }
    if (!independent) continue;
    talons.push_back(cand);
    claw_dfs(l, center, k, neighbors, i + 1, talons, out);
    talons.pop_back();
  }
}

}  // namespace

std::vector<Claw> enumerate_claws(const RepresentativeGraph& l, int center, int k, int k_cap) {
  if (center < 0 || center >= l.node_count) {
    throw std::out_of_range("enumerate_claws: center " + std::to_string(center) + " out of range");
  }
  if (k < 1 || k > k_cap) {
    throw std::invalid_argument("enumerate_claws: k=" + std::to_string(k) +
                                " outside [1, " + std::to_string(k_cap) + "]");
  }
  std::vector<Claw> out;
  std::vector<int> talons;
  claw_dfs(l, center, k, l.neighbors(center), 0, talons, out);
  return out;
}

bool is_matching(const Hypergraph& h, const std::vector<int>& edge_ids) {
  std::vector<char> used(h.vertex_count(), 0);
  for (int id : edge_ids) {
    for (VertexId v : h.edge(id)) {  // edge() range-checks the id
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

}  // namespace hudn
