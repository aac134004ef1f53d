#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hudn/coloring.hpp"
#include "hudn/hypergraph.hpp"
#include "hudn/radio.hpp"
#include "hudn/uniform.hpp"

namespace hudn {

struct GeometryConfig {
  double area_m = 500.0;
  int num_users = 0;
  int num_saps = 0;  // RRHs or SAPs depending on scenario
  int num_d2d_pairs = 0;
  double d2d_max_sep_m = 50.0;
};

/// Seeded square-area layout. The macro base station sits at the area center;
/// D2D receivers stay within d2d_max_sep_m of their transmitter.
struct NetworkGeometry {
  double area_m = 500.0;
  Point macro;
  std::vector<Point> users;
  std::vector<Point> saps;
  std::vector<std::pair<Point, Point>> d2d_pairs;  // (tx, rx)
  std::uint64_t seed = 0;
};

NetworkGeometry make_geometry(const GeometryConfig& config, std::uint64_t seed);

/// Minimal index sets (size <= max_size) whose contribution sum reaches the
/// threshold while every proper subset stays below it. Sets are sorted and
/// emitted in ascending lexicographic order.
std::vector<std::vector<int>> minimal_oversum_sets(const std::vector<double>& contributions,
                                                   double threshold, int max_size);

// ---------------------------------------------------------------------------
// CRAN: joint user association and channel assignment.

struct CranInstance {
  NetworkGeometry geometry;
  RadioParams params;
  int num_users = 0;
  int num_rrhs = 0;
  int num_channels = 0;
  std::vector<std::vector<char>> admissible;  // [user][rrh]: standalone rate >= min_rate
  bool no_admissible_user = false;            // degenerate-geometry warning

  double rx_power_dbm(int user, int rrh) const;
  double standalone_rate(int user, int rrh) const;
};

struct CranBuild {
  CranInstance instance;
  /// 3-uniform parts (users, RRHs, channels); one edge per admissible triple,
  /// weighted by the standalone rate.
  UniformWeightedHypergraph hypergraph;
};

CranBuild build_cran_instance(const NetworkGeometry& geometry, const RadioParams& params,
                              int num_channels);

// ---------------------------------------------------------------------------
// Dual connectivity: links are vertices, channels are colors.

/// Link ids: user i's primary (macro) link is i, its secondary (nearest SAP)
/// link is num_users + i.
struct DualconnBuild {
  ColoringInstance instance;
  std::vector<Transmitter> link_tx;
  std::vector<Point> link_rx;
  std::vector<int> secondary_sap;  // per user
};

/// Hyperedges: pairs with one-sided interference above the threshold,
/// victim + minimal cumulative interferer sets, and one hard pair per user
/// (primary, secondary). Duplicate member sets are emitted once.
DualconnBuild build_dualconn_instance(const NetworkGeometry& geometry, const RadioParams& params,
                                      int num_channels);

// ---------------------------------------------------------------------------
// D2D: interference hypergraph for the channel-selection game.

/// Vertices are D2D links; each hyperedge is a victim link plus a minimal
/// interferer set whose cumulative power at the victim's receiver reaches the
/// threshold.
Hypergraph build_d2d_instance(const NetworkGeometry& geometry, const RadioParams& params);

// ---------------------------------------------------------------------------
// Proactive caching: 3-dimensional matching with virtual D2D providers.

struct Content {
  double length_bits = 0.0;
  double sinr_min_db = 0.0;

  bool operator==(const Content&) const = default;
};

struct ContentCatalog {
  std::vector<Content> contents;
  std::vector<std::vector<int>> sap_cache;   // per SAP: cached content ids
  std::vector<std::vector<int>> user_cache;  // per user
  std::vector<int> requests;                 // per user: requested content id
};

struct CatalogConfig {
  int num_contents = 6;
  double sap_cache_prob = 0.5;
  double user_cache_prob = 0.25;
  double min_length_bits = 1e6;
  double max_length_bits = 1e8;
  std::vector<double> sinr_min_choices_db = {0.0, 5.0, 10.0};
};

ContentCatalog random_catalog(const CatalogConfig& config, int num_users, int num_saps,
                              std::uint64_t seed);

struct CachingBuild {
  /// 3-uniform parts (users, providers, channels); providers are the SAPs
  /// followed by one virtual vertex per caching user. Edge weight is the
  /// content transmission time in seconds.
  UniformWeightedHypergraph hypergraph;
  int num_saps = 0;
  std::vector<int> provider_user;  // virtual provider index (after SAPs) -> user id
  std::vector<Transmitter> provider_tx;
  std::vector<int> users_without_edges;
};

/// Edge (u, p, k) exists iff provider p caches u's requested content and the
/// standalone SINR meets the content requirement. Throws if a request names a
/// missing content.
CachingBuild build_caching_instance(const NetworkGeometry& geometry, const RadioParams& params,
                                    const ContentCatalog& catalog, int num_channels);

}  // namespace hudn
