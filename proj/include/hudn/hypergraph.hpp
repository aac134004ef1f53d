#pragma once

#include <vector>

namespace hudn {

using VertexId = int;

/// General hypergraph: n vertices with dense ids in [0, n) and an ordered
/// family of hyperedges (vertex subsets). Edge members are stored sorted and
/// deduplicated. Two edges with identical member sets are distinct edges;
/// dedup is a caller policy. Immutable after construction.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws std::invalid_argument naming the offending edge if any member id
  /// is outside [0, vertex_count). Empty edges are retained.
  Hypergraph(int vertex_count, std::vector<std::vector<VertexId>> edge_family);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<VertexId>& edge(int edge_id) const;
  const std::vector<std::vector<VertexId>>& edges() const { return edges_; }

  bool operator==(const Hypergraph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<VertexId>> edges_;
};

/// Binary vertex-by-hyperedge membership matrix, row-major.
struct IncidenceMatrix {
  int rows = 0;  // vertices
  int cols = 0;  // hyperedges
  std::vector<unsigned char> data;

  unsigned char at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
  unsigned char& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const IncidenceMatrix&) const = default;
};

IncidenceMatrix incidence_matrix(const Hypergraph& h);

/// Inverse of incidence_matrix. Throws std::invalid_argument on entries
/// outside {0, 1}.
Hypergraph from_incidence_matrix(const IncidenceMatrix& m);

/// Vertices sharing at least one hyperedge with v, excluding v itself.
/// Sorted ascending; each vertex listed once regardless of shared-edge count.
std::vector<VertexId> adjacent_vertices(const Hypergraph& h, VertexId v);

/// Per-vertex lists of incident edge ids, ascending.
std::vector<std::vector<int>> incident_edges(const Hypergraph& h);

/// True iff the union of all hyperedges equals the whole vertex set.
bool is_covering(const Hypergraph& h);

/// One node per hyperedge; nodes adjacent iff their hyperedges intersect.
struct RepresentativeGraph {
  int node_count = 0;
  std::vector<std::vector<int>> adjacency;  // sorted, no self loops

  bool adjacent(int a, int b) const;
  const std::vector<int>& neighbors(int node) const { return adjacency[node]; }
};

RepresentativeGraph representative_graph(const Hypergraph& h);

/// A center node of the representative graph together with k talon nodes that
/// all neighbor the center and are pairwise non-adjacent.
struct Claw {
  int center = -1;
  std::vector<int> talons;  // ascending

  bool operator==(const Claw&) const = default;
};

inline constexpr int kDefaultClawCap = 3;

/// All k-claws centered at `center`, talon sets in ascending lexicographic
/// order. Requires 1 <= k <= k_cap and a valid center id.
std::vector<Claw> enumerate_claws(const RepresentativeGraph& l, int center, int k,
                                  int k_cap = kDefaultClawCap);

/// True iff the selected edges are pairwise vertex-disjoint.
/// Throws on an invalid edge id.
bool is_matching(const Hypergraph& h, const std::vector<int>& edge_ids);

}  // namespace hudn
