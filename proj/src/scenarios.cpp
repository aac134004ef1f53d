#include "hudn/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "hudn/rng.hpp"

namespace hudn {

NetworkGeometry make_geometry(const GeometryConfig& config, std::uint64_t seed) {
  if (config.area_m <= 0.0) {
    throw std::invalid_argument("geometry: area must be positive");
  }
  std::mt19937_64 rng(seed);
  NetworkGeometry geo;
  geo.area_m = config.area_m;
  geo.seed = seed;
  geo.macro = {config.area_m / 2.0, config.area_m / 2.0};

  auto draw_point = [&]() -> Point {
    double x = uniform_range(rng, 0.0, config.area_m);
    double y = uniform_range(rng, 0.0, config.area_m);
    return {x, y};
  };

  geo.users.reserve(config.num_users);
  for (int i = 0; i < config.num_users; ++i) geo.users.push_back(draw_point());
  geo.saps.reserve(config.num_saps);
  for (int i = 0; i < config.num_saps; ++i) geo.saps.push_back(draw_point());

  geo.d2d_pairs.reserve(config.num_d2d_pairs);
  for (int i = 0; i < config.num_d2d_pairs; ++i) {
    Point tx = draw_point();
    Point rx;
    do {
      double angle = uniform_range(rng, 0.0, 2.0 * M_PI);
      double sep = uniform_range(rng, 1.0, config.d2d_max_sep_m);
      rx = {tx.x + sep * std::cos(angle), tx.y + sep * std::sin(angle)};
    } while (rx.x < 0.0 || rx.x > config.area_m || rx.y < 0.0 || rx.y > config.area_m);
    geo.d2d_pairs.emplace_back(tx, rx);
  }
  return geo;
}

std::vector<std::vector<int>> minimal_oversum_sets(const std::vector<double>& contributions,
                                                   double threshold, int max_size) {
  // A set S with sum(S) >= threshold is minimal iff dropping its smallest
  // member puts it below the threshold; every smaller subset is then below
  // as well.
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(contributions.size());
  std::vector<int> current;

  auto dfs = [&](auto&& self, int start, double sum) -> void {
    if (!current.empty() && sum >= threshold) {
      double smallest = contributions[current[0]];
      for (int idx : current) smallest = std::min(smallest, contributions[idx]);
      if (sum - smallest < threshold) out.push_back(current);
      return;  // supersets cannot be minimal
    }
    if (static_cast<int>(current.size()) == max_size) return;
    for (int i = start; i < n; ++i) {
      current.push_back(i);
      self(self, i + 1, sum + contributions[i]);
      current.pop_back();
    }
  };
  dfs(dfs, 0, 0.0);
  return out;
}

// ---------------------------------------------------------------------------
// CRAN

double CranInstance::rx_power_dbm(int user, int rrh) const {
  double d = distance_m(geometry.users[user], geometry.saps[rrh]);
  return received_power_dbm(params, params.sap_power_dbm, d);
}

double CranInstance::standalone_rate(int user, int rrh) const {
  double sinr = sinr_linear(rx_power_dbm(user, rrh), {}, params.noise_dbm);
  return rate_bps(sinr, params.bandwidth_hz);
}

CranBuild build_cran_instance(const NetworkGeometry& geometry, const RadioParams& params,
                              int num_channels) {
  const int m = static_cast<int>(geometry.users.size());
  const int n = static_cast<int>(geometry.saps.size());
  if (m < 1 || n < 1 || num_channels < 1) {
    throw std::invalid_argument("cran: need at least one user, RRH, and channel");
  }
  CranBuild build;
  auto& inst = build.instance;
  inst.geometry = geometry;
  inst.params = params;
  inst.num_users = m;
  inst.num_rrhs = n;
  inst.num_channels = num_channels;
  inst.admissible.assign(m, std::vector<char>(n, 0));

  std::vector<UniformEdge> edges;
  bool any_admissible = false;
  for (int u = 0; u < m; ++u) {
    for (int r = 0; r < n; ++r) {
      double rate = inst.standalone_rate(u, r);
      if (rate >= params.min_rate_bps) {
        inst.admissible[u][r] = 1;
        any_admissible = true;
        for (int k = 0; k < num_channels; ++k) {
          edges.push_back({{u, r, k}, rate});
        }
      }
    }
  }
  inst.no_admissible_user = !any_admissible;
  build.hypergraph =
      UniformWeightedHypergraph({m, n, num_channels}, std::move(edges));
  return build;
}

// ---------------------------------------------------------------------------
// Dual connectivity

DualconnBuild build_dualconn_instance(const NetworkGeometry& geometry, const RadioParams& params,
                                      int num_channels) {
  const int m = static_cast<int>(geometry.users.size());
  const int n = static_cast<int>(geometry.saps.size());
  if (m < 1 || n < 1) {
    throw std::invalid_argument("dualconn: need at least one user and one SAP");
  }
  DualconnBuild build;
  build.secondary_sap.resize(m);
  const int num_links = 2 * m;
  build.link_tx.resize(num_links);
  build.link_rx.resize(num_links);

  for (int u = 0; u < m; ++u) {
    int nearest = 0;
    double best = distance_m(geometry.users[u], geometry.saps[0]);
    for (int s = 1; s < n; ++s) {
      double d = distance_m(geometry.users[u], geometry.saps[s]);
      if (d < best) {
        best = d;
        nearest = s;
      }
    }
    build.secondary_sap[u] = nearest;
    build.link_tx[u] = {geometry.macro, params.macro_power_dbm};
    build.link_rx[u] = geometry.users[u];
    build.link_tx[m + u] = {geometry.saps[nearest], params.sap_power_dbm};
    build.link_rx[m + u] = geometry.users[u];
  }

  const double threshold_mw = dbm_to_mw(params.interference_threshold_dbm);
  std::vector<std::vector<VertexId>> edge_family;
  std::set<std::vector<VertexId>> seen;
  auto emit = [&](std::vector<VertexId> edge) {
    std::sort(edge.begin(), edge.end());
    if (seen.insert(edge).second) edge_family.push_back(std::move(edge));
  };

  std::vector<std::pair<VertexId, VertexId>> hard_pairs;
  for (int u = 0; u < m; ++u) {
    hard_pairs.emplace_back(u, m + u);
    emit({u, m + u});
  }

  for (int victim = 0; victim < num_links; ++victim) {
    std::vector<int> others;
    std::vector<double> contrib;
    for (int a = 0; a < num_links; ++a) {
      if (a == victim) continue;
      double p = received_power_dbm(params, build.link_tx[a].power_dbm,
                                    distance_m(build.link_tx[a].pos, build.link_rx[victim]));
      others.push_back(a);
      contrib.push_back(dbm_to_mw(p));
    }
    for (const auto& set : minimal_oversum_sets(contrib, threshold_mw, params.cumulative_set_max)) {
      std::vector<VertexId> edge{victim};
      for (int idx : set) edge.push_back(others[idx]);
      emit(std::move(edge));
    }
  }

  Hypergraph h(num_links, std::move(edge_family));
  build.instance = make_coloring_instance(std::move(h), num_channels, std::move(hard_pairs));
  return build;
}

// ---------------------------------------------------------------------------
// D2D

Hypergraph build_d2d_instance(const NetworkGeometry& geometry, const RadioParams& params) {
  const int num_links = static_cast<int>(geometry.d2d_pairs.size());
  const double threshold_mw = dbm_to_mw(params.interference_threshold_dbm);

  std::vector<std::vector<VertexId>> edge_family;
  std::set<std::vector<VertexId>> seen;
  for (int victim = 0; victim < num_links; ++victim) {
    Point rx = geometry.d2d_pairs[victim].second;
    std::vector<int> others;
    std::vector<double> contrib;
    for (int a = 0; a < num_links; ++a) {
      if (a == victim) continue;
      double p = received_power_dbm(params, params.d2d_power_dbm,
                                    distance_m(geometry.d2d_pairs[a].first, rx));
      others.push_back(a);
      contrib.push_back(dbm_to_mw(p));
    }
    for (const auto& set : minimal_oversum_sets(contrib, threshold_mw, params.cumulative_set_max)) {
      std::vector<VertexId> edge{victim};
      for (int idx : set) edge.push_back(others[idx]);
      std::sort(edge.begin(), edge.end());
      if (seen.insert(edge).second) edge_family.push_back(std::move(edge));
    }
  }
  return Hypergraph(num_links, std::move(edge_family));
}

// ---------------------------------------------------------------------------
// Caching

ContentCatalog random_catalog(const CatalogConfig& config, int num_users, int num_saps,
                              std::uint64_t seed) {
  if (config.num_contents < 1) {
    throw std::invalid_argument("catalog: need at least one content");
  }
  std::mt19937_64 rng(seed);
  ContentCatalog cat;
  cat.contents.reserve(config.num_contents);
  for (int c = 0; c < config.num_contents; ++c) {
    Content content;
    content.length_bits = uniform_range(rng, config.min_length_bits, config.max_length_bits);
    content.sinr_min_db = config.sinr_min_choices_db.empty()
                              ? 0.0
                              : config.sinr_min_choices_db[uniform_int(
                                    rng, static_cast<int>(config.sinr_min_choices_db.size()))];
    cat.contents.push_back(content);
  }
  cat.sap_cache.resize(num_saps);
  for (int s = 0; s < num_saps; ++s) {
    for (int c = 0; c < config.num_contents; ++c) {
      if (uniform_unit(rng) < config.sap_cache_prob) cat.sap_cache[s].push_back(c);
    }
  }
  cat.user_cache.resize(num_users);
  for (int u = 0; u < num_users; ++u) {
    for (int c = 0; c < config.num_contents; ++c) {
      if (uniform_unit(rng) < config.user_cache_prob) cat.user_cache[u].push_back(c);
    }
  }
  cat.requests.resize(num_users);
  for (int u = 0; u < num_users; ++u) {
    cat.requests[u] = uniform_int(rng, config.num_contents);
  }
  return cat;
}

CachingBuild build_caching_instance(const NetworkGeometry& geometry, const RadioParams& params,
                                    const ContentCatalog& catalog, int num_channels) {
  const int m = static_cast<int>(geometry.users.size());
  const int n = static_cast<int>(geometry.saps.size());
  if (num_channels < 1) {
    throw std::invalid_argument("caching: need at least one channel");
  }
  if (static_cast<int>(catalog.requests.size()) != m) {
    throw std::invalid_argument("caching: catalog must list one request per user");
  }
  for (int u = 0; u < m; ++u) {
    int c = catalog.requests[u];
    if (c < 0 || c >= static_cast<int>(catalog.contents.size())) {
      throw std::invalid_argument("caching: user " + std::to_string(u) +
                                  " requests unknown content " + std::to_string(c));
    }
  }

  CachingBuild build;
  build.num_saps = n;
  for (int s = 0; s < n; ++s) {
    build.provider_tx.push_back({geometry.saps[s], params.sap_power_dbm});
  }
  for (int u = 0; u < m; ++u) {
    if (!catalog.user_cache[u].empty()) {
      build.provider_user.push_back(u);
      build.provider_tx.push_back({geometry.users[u], params.d2d_power_dbm});
    }
  }
  const int num_providers = static_cast<int>(build.provider_tx.size());

  auto provider_caches = [&](int p, int content) {
    const auto& cache = p < n ? catalog.sap_cache[p] : catalog.user_cache[build.provider_user[p - n]];
    return std::find(cache.begin(), cache.end(), content) != cache.end();
  };

  std::vector<UniformEdge> edges;
  for (int u = 0; u < m; ++u) {
    const int content_id = catalog.requests[u];
    const Content& content = catalog.contents[content_id];
    const double sinr_min = db_to_linear(content.sinr_min_db);
    bool any = false;
    for (int p = 0; p < num_providers; ++p) {
      if (p >= n && build.provider_user[p - n] == u) continue;  // no self-provision
      if (!provider_caches(p, content_id)) continue;
      double sinr = sinr_linear(params, geometry.users[u], build.provider_tx[p], {});
      if (sinr < sinr_min) continue;
      double seconds = content.length_bits / rate_bps(sinr, params.bandwidth_hz);
      for (int k = 0; k < num_channels; ++k) {
        edges.push_back({{u, p, k}, seconds});
      }
      any = true;
    }
    if (!any) build.users_without_edges.push_back(u);
  }
  build.hypergraph = UniformWeightedHypergraph({m, num_providers, num_channels}, std::move(edges));
  return build;
}

}  // namespace hudn
