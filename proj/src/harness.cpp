#include "hudn/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hudn/io.hpp"
#include "hudn/oracles.hpp"
#include "hudn/pipelines.hpp"
#include "hudn/rng.hpp"

namespace hudn {

namespace {

constexpr std::uint64_t kCatalogSalt = 0x9e3779b97f4a7c15ULL;

std::string fmt_time(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", seconds);
  return buf;
}

struct Row {
  std::string row_type = "data";
  std::string scenario, algorithm, seed, m, n, k;
  std::string sum_rate, objective, time, iterations;
  std::string assigned, violations, pot_init, pot_final;
  std::string status = "ok";
  std::string hash;

  std::string to_line() const {
    std::ostringstream out;
    out << row_type << ',' << scenario << ',' << algorithm << ',' << seed << ',' << m << ','
        << n << ',' << k << ',' << sum_rate << ',' << objective << ',' << time << ','
        << iterations << ',' << assigned << ',' << violations << ',' << pot_init << ','
        << pot_final << ',' << status << ',' << hash;
    return out.str();
  }
};

std::string sanitize(std::string message) {
  for (auto& ch : message) {
    if (ch == ',' || ch == '\n') ch = ';';
  }
  return message;
}

Row base_row(const ExperimentConfig& config, int n, std::uint64_t seed, const std::string& hash) {
  Row row;
  row.scenario = config.scenario;
  row.seed = std::to_string(seed);
  row.m = std::to_string(config.m);
  row.n = std::to_string(n);
  row.k = std::to_string(config.k);
  row.hash = hash;
  return row;
}

GeometryConfig geometry_config(const ExperimentConfig& config, int n) {
  GeometryConfig geo;
  geo.area_m = config.area_m;
  geo.d2d_max_sep_m = config.d2d_max_sep_m;
  if (config.scenario == "d2d") {
    geo.num_d2d_pairs = config.m;
  } else {
    geo.num_users = config.m;
    geo.num_saps = n;
  }
  return geo;
}

void run_cran_seed(const ExperimentConfig& config, int n, std::uint64_t seed,
                   const std::string& hash, std::vector<Row>& rows) {
  auto geo = make_geometry(geometry_config(config, n), seed);
  auto build = build_cran_instance(geo, config.radio, config.k);

  CranOptions options;
  options.k_max = config.k_max;
  options.best_improvement = config.best_improvement;
  options.channel_only_disjoint = config.channel_only_disjoint;

  {
    Row row = base_row(config, n, seed, hash);
    row.algorithm = "hypergraph";
    try {
      auto result = cran_iterative_matching(build.instance, options);
      row.sum_rate = format_double(result.report.total_bps);
      row.time = fmt_time(result.report.solver_time_s);
      row.iterations = std::to_string(result.report.iterations);
      row.assigned = std::to_string(result.allocation.assigned_count());
    } catch (const std::exception& err) {
      row.status = "error: " + sanitize(err.what());
    }
    rows.push_back(row);
  }
  {
    Row row = base_row(config, n, seed, hash);
    row.algorithm = "bipartite";
    try {
      auto result = cran_bipartite_baseline(build.instance);
      row.sum_rate = format_double(result.report.total_bps);
      row.time = fmt_time(result.report.solver_time_s);
      row.iterations = std::to_string(result.report.iterations);
      row.assigned = std::to_string(result.allocation.assigned_count());
    } catch (const std::exception& err) {
      row.status = "error: " + sanitize(err.what());
    }
    rows.push_back(row);
  }
}

void run_single_seed(const ExperimentConfig& config, int n, std::uint64_t seed,
                     const std::string& hash, std::vector<Row>& rows) {
  Row row = base_row(config, n, seed, hash);
  try {
    auto geo = make_geometry(geometry_config(config, n), seed);
    if (config.scenario == "dualconn") {
      row.algorithm = "greedy_color";
      auto build = build_dualconn_instance(geo, config.radio, config.k);
      auto result = dualconn_allocate(build, config.radio, seed);
      row.sum_rate = format_double(result.report.total_bps);
      row.time = fmt_time(result.report.solver_time_s);
      row.iterations = "1";
      row.assigned = std::to_string(build.link_tx.size());
      row.violations = std::to_string(result.violations.total());
    } else if (config.scenario == "d2d") {
      bool best_response = config.mode == "best_response";
      row.algorithm = best_response ? "game_best_response" : "game_stochastic";
      auto interference = build_d2d_instance(geo, config.radio);
      auto result =
          d2d_allocate(interference, geo, config.radio, config.k,
                       best_response ? GameMode::BestResponse : GameMode::Stochastic,
                       config.max_rounds, config.beta, seed);
      row.sum_rate = format_double(result.report.total_bps);
      row.time = fmt_time(result.report.solver_time_s);
      row.iterations = std::to_string(result.rounds);
      row.assigned = std::to_string(config.m);
      row.pot_init = std::to_string(result.trace.points.front().second);
      row.pot_final = std::to_string(potential(result.state));
      if (!config.trace_out.empty()) {
        std::ostringstream trace;
        trace << "round,potential\n";
        for (auto [round, phi] : result.trace.points) trace << round << ',' << phi << '\n';
        write_file(config.trace_out + "d2d_trace_seed" + std::to_string(seed) + ".csv",
                   trace.str());
      }
    } else {  // caching
      row.algorithm = config.policy;
      auto catalog = random_catalog(config.catalog, config.m, n, seed ^ kCatalogSalt);
      auto build = build_caching_instance(geo, config.radio, catalog, config.k);
      auto policy = config.policy == "centralized" ? CachingPolicy::Centralized
                                                   : CachingPolicy::Distributed;
      auto result = caching_allocate(build, geo, config.radio, policy, seed);
      row.sum_rate = format_double(result.report.total_bps);
      row.objective = format_double(result.total_time_s);
      row.time = fmt_time(result.report.solver_time_s);
      row.iterations = "1";
      row.assigned = std::to_string(result.assigned);
    }
  } catch (const std::exception& err) {
    row.status = "error: " + sanitize(err.what());
  }
  rows.push_back(row);
}

void run_seed(const ExperimentConfig& config, int n, std::uint64_t seed, const std::string& hash,
              std::vector<Row>& rows) {
  if (config.scenario == "cran") {
    run_cran_seed(config, n, seed, hash, rows);
  } else {
    run_single_seed(config, n, seed, hash, rows);
  }
}

void append_summaries(const ExperimentConfig& config, const std::vector<Row>& data,
                      const std::string& hash, std::vector<Row>& rows) {
  std::vector<std::pair<int, std::string>> groups;  // (n, algorithm) in first-seen order
  for (const auto& row : data) {
    std::pair<int, std::string> key{std::stoi(row.n), row.algorithm};
    if (std::find(groups.begin(), groups.end(), key) == groups.end()) groups.push_back(key);
  }
  for (const auto& [n, algorithm] : groups) {
    double rate_sum = 0.0, time_sum = 0.0;
    int count = 0;
    for (const auto& row : data) {
      if (std::stoi(row.n) != n || row.algorithm != algorithm || row.status != "ok") continue;
      rate_sum += std::strtod(row.sum_rate.c_str(), nullptr);
      time_sum += std::strtod(row.time.c_str(), nullptr);
      ++count;
    }
    Row row;
    row.row_type = "summary";
    row.scenario = config.scenario;
    row.algorithm = algorithm;
    row.m = std::to_string(config.m);
    row.n = std::to_string(n);
    row.k = std::to_string(config.k);
    row.hash = hash;
    if (count > 0) {
      row.sum_rate = format_double(rate_sum / count);
      row.time = fmt_time(time_sum / count);
    }
    row.assigned = std::to_string(count);  // seeds aggregated
    rows.push_back(row);
  }
}

std::string to_csv(const std::vector<Row>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& row : rows) out << row.to_line() << '\n';
  return out.str();
}

}  // namespace

std::string run_rows_csv(const ExperimentConfig& config) {
  validate_config(config);
  const std::string hash = config_hash(config);
  std::vector<Row> rows;
  for (std::uint64_t seed : config.seeds) {
    run_seed(config, config.n, seed, hash, rows);
  }
  return to_csv(rows);
}

std::string sweep_csv(const ExperimentConfig& config) {
  validate_config(config);
  if (config.sweep_n.empty()) {
    throw std::invalid_argument("sweep: sweep_n list is empty");
  }
  const std::string hash = config_hash(config);
  std::vector<Row> rows;
  for (int n : config.sweep_n) {
    for (std::uint64_t seed : config.seeds) {
      run_seed(config, n, seed, hash, rows);
    }
  }
  std::vector<Row> all = rows;
  append_summaries(config, rows, hash, all);
  return to_csv(all);
}

std::vector<std::string> generate_instances(const ExperimentConfig& config) {
  validate_config(config);
  std::vector<std::string> files;
  for (std::uint64_t seed : config.seeds) {
    auto geo = make_geometry(geometry_config(config, config.n), seed);
    std::string text;
    if (config.scenario == "cran") {
      text = write_uniform_text(build_cran_instance(geo, config.radio, config.k).hypergraph);
    } else if (config.scenario == "dualconn") {
      text = write_coloring_text(build_dualconn_instance(geo, config.radio, config.k).instance);
    } else if (config.scenario == "d2d") {
      text = write_hypergraph_text(build_d2d_instance(geo, config.radio));
    } else {
      auto catalog = random_catalog(config.catalog, config.m, config.n, seed ^ kCatalogSalt);
      text = write_uniform_text(
          build_caching_instance(geo, config.radio, catalog, config.k).hypergraph);
    }
    std::string path = config.out + config.scenario + "_seed" + std::to_string(seed) + ".txt";
    write_file(path, text);
    files.push_back(path);
  }
  return files;
}

std::string csv_without_column(const std::string& csv, const std::string& column) {
  std::istringstream in(csv);
  std::string header;
  if (!std::getline(in, header)) return csv;
  std::vector<std::string> names;
  {
    std::istringstream hs(header);
    std::string name;
    while (std::getline(hs, name, ',')) names.push_back(name);
  }
  int drop = -1;
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == column) drop = static_cast<int>(i);
  }
  if (drop < 0) return csv;

  std::ostringstream out;
  auto emit = [&](const std::string& line) {
    std::istringstream ls(line);
    std::string field;
    int idx = 0;
    bool first = true;
    while (std::getline(ls, field, ',')) {
      if (idx++ == drop) continue;
      if (!first) out << ',';
      out << field;
      first = false;
    }
    out << '\n';
  };
  emit(header);
  std::string line;
  while (std::getline(in, line)) emit(line);
  return out.str();
}

bool OracleReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.pass; });
}

std::string OracleReport::to_text() const {
  std::ostringstream out;
  for (const auto& check : checks) {
    out << (check.pass ? "pass" : "FAIL") << "  " << check.name << " (instances="
        << check.instances << ")";
    if (!check.detail.empty()) out << "  " << check.detail;
    out << '\n';
  }
  out << (all_pass() ? "oracle suite: all checks passed\n" : "oracle suite: FAILURES\n");
  return out.str();
}

namespace {

Hypergraph random_hypergraph(std::uint64_t seed, int max_n, int max_m, int max_edge_size) {
  std::mt19937_64 rng(seed);
  int n = 1 + uniform_int(rng, max_n);
  int m = uniform_int(rng, max_m + 1);
  std::vector<std::vector<VertexId>> edges;
  for (int j = 0; j < m; ++j) {
    int size = uniform_int(rng, std::min(max_edge_size, n) + 1);  // empty edges allowed
    std::vector<VertexId> edge;
    for (int i = 0; i < size; ++i) edge.push_back(uniform_int(rng, n));
    edges.push_back(std::move(edge));
  }
  return Hypergraph(n, std::move(edges));
}

void check_matching_suite(OracleReport& report) {
  OracleCheck oracle{"matching: exact equals subset enumeration (<= 10 edges)", true, 0, ""};
  OracleCheck bounds{"matching: local search >= greedy >= optimum/3 (<= 12 edges)", true, 0, ""};
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    std::mt19937_64 rng(seed * 31 + 7);
    int edges = 1 + uniform_int(rng, 12);
    auto g = random_uniform_instance(seed, {4, 4, 4}, edges, 0.5, 10.0);
    auto exact = exact_matching(g);
    if (edges <= 10) {
      auto brute = oracle::max_weight_matching_bruteforce(g);
      ++oracle.instances;
      if (exact.edge_ids != brute.edge_ids || exact.total_weight != brute.total_weight) {
        oracle.pass = false;
        oracle.detail = "mismatch at seed " + std::to_string(seed);
      }
    }
    auto greedy = greedy_matching(g);
    auto local = local_search_matching(g, greedy, 3);
    ++bounds.instances;
    if (!(local.total_weight >= greedy.total_weight &&
          3.0 * greedy.total_weight >= exact.total_weight - 1e-9)) {
      bounds.pass = false;
      bounds.detail = "bound violated at seed " + std::to_string(seed);
    }
    auto plain = g.to_hypergraph();
    if (!is_matching(plain, local.edge_ids) || !oracle::is_matching_naive(plain, local.edge_ids)) {
      bounds.pass = false;
      bounds.detail = "local search output is not a matching at seed " + std::to_string(seed);
    }
  }
  report.checks.push_back(oracle);
  report.checks.push_back(bounds);
}

void check_hungarian_suite(OracleReport& report) {
  OracleCheck check{"hungarian: equals permutation enumeration (7x7)", true, 0, ""};
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    std::mt19937_64 rng(seed * 97 + 13);
    const int n = 7;
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    bool integer_costs = seed % 2 == 0;
    for (auto& row : cost) {
      for (auto& cell : row) {
        cell = integer_costs ? static_cast<double>(uniform_int(rng, 41) - 20)
                             : uniform_range(rng, -10.0, 10.0);
      }
    }
    auto sense = seed % 3 == 0 ? AssignSense::Minimize : AssignSense::Maximize;
    auto fast = hungarian_assignment(cost, sense);
    auto brute = oracle::assignment_bruteforce(cost, sense);
    ++check.instances;
    double tol = integer_costs ? 0.0 : 1e-9;
    if (std::abs(fast.objective - brute.objective) > tol) {
      check.pass = false;
      check.detail = "objective mismatch at seed " + std::to_string(seed);
    }
  }
  report.checks.push_back(check);
}

void check_potential_suite(OracleReport& report) {
  OracleCheck check{"game: exact-potential identity and naive recount", true, 0, ""};
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto h = random_hypergraph(seed * 11 + 3, 12, 10, 4);
    auto state = make_game_state(h, 3, seed);
    std::mt19937_64 rng(seed * 5 + 1);
    for (int trial = 0; trial < 10; ++trial) {
      ++check.instances;
      if (potential(state) != oracle::potential_naive(state)) {
        check.pass = false;
        check.detail = "potential recount mismatch at seed " + std::to_string(seed);
      }
      if (state.player_count() == 0) continue;
      int player = uniform_int(rng, state.player_count());
      int channel = uniform_int(rng, state.num_channels);
      long long phi_old = potential(state);
      int u_old = utility(state, player, state.profile[player]);
      int u_new = utility(state, player, channel);
      int prev = state.profile[player];
      state.profile[player] = channel;
      long long phi_new = potential(state);
      state.profile[player] = prev;
      if (static_cast<long long>(u_new - u_old) != -(phi_new - phi_old)) {
        check.pass = false;
        check.detail = "potential identity broken at seed " + std::to_string(seed);
      }
    }
  }
  report.checks.push_back(check);
}

void check_structural_suite(OracleReport& report) {
  OracleCheck inc{"hypergraph: incidence and text round trips", true, 0, ""};
  OracleCheck adj{"hypergraph: adjacency and representative graph vs naive", true, 0, ""};
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto h = random_hypergraph(seed * 17 + 5, 15, 12, 5);
    ++inc.instances;
    if (from_incidence_matrix(incidence_matrix(h)) != h) {
      inc.pass = false;
      inc.detail = "incidence round trip failed at seed " + std::to_string(seed);
    }
    auto text = write_hypergraph_text(h);
    if (read_hypergraph_text(text) != h || write_hypergraph_text(read_hypergraph_text(text)) != text) {
      inc.pass = false;
      inc.detail = "text round trip failed at seed " + std::to_string(seed);
    }
    ++adj.instances;
    for (int v = 0; v < h.vertex_count(); ++v) {
      if (adjacent_vertices(h, v) != oracle::adjacent_vertices_naive(h, v)) {
        adj.pass = false;
        adj.detail = "adjacency mismatch at seed " + std::to_string(seed);
      }
    }
    auto l = representative_graph(h);
    for (int a = 0; a < h.edge_count(); ++a) {
      for (int b = 0; b < h.edge_count(); ++b) {
        if (a == b) continue;
        if (l.adjacent(a, b) != oracle::edges_intersect_naive(h, a, b)) {
          adj.pass = false;
          adj.detail = "representative graph mismatch at seed " + std::to_string(seed);
        }
      }
    }
  }
  report.checks.push_back(inc);
  report.checks.push_back(adj);

  OracleCheck uni{"uniform: text round trip", true, 0, ""};
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::mt19937_64 rng(seed);
    int m = uniform_int(rng, 15);
    auto g = random_uniform_instance(seed, {3, 4, 5}, m, 0.0, 5.0);
    ++uni.instances;
    auto text = write_uniform_text(g);
    if (read_uniform_text(text) != g || write_uniform_text(read_uniform_text(text)) != text) {
      uni.pass = false;
      uni.detail = "round trip failed at seed " + std::to_string(seed);
    }
  }
  report.checks.push_back(uni);
}

void check_coloring_suite(OracleReport& report) {
  OracleCheck check{"coloring: checker equals naive per-edge scan", true, 0, ""};
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto h = random_hypergraph(seed * 13 + 1, 12, 10, 4);
    std::mt19937_64 rng(seed * 3 + 11);
    int k = 1 + uniform_int(rng, 4);
    auto inst = make_coloring_instance(h, k, {});
    Coloring coloring(h.vertex_count());
    for (auto& c : coloring) c = uniform_int(rng, k);
    ++check.instances;
    auto fast = check_coloring(inst, coloring);
    auto naive = oracle::check_coloring_naive(inst, coloring);
    if (fast.monochromatic_edges != naive.monochromatic_edges ||
        fast.hard_pair_violations != naive.hard_pair_violations) {
      check.pass = false;
      check.detail = "report mismatch at seed " + std::to_string(seed);
    }
  }
  report.checks.push_back(check);
}

void check_oversum_suite(OracleReport& report) {
  OracleCheck check{"scenario: minimal cumulative sets vs exhaustive subsets", true, 0, ""};
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::mt19937_64 rng(seed * 7 + 29);
    int n = 1 + uniform_int(rng, 8);
    std::vector<double> contrib(n);
    for (auto& c : contrib) c = uniform_range(rng, 0.0, 1.0);
    double threshold = uniform_range(rng, 0.2, 2.0);
    ++check.instances;
    if (minimal_oversum_sets(contrib, threshold, 3) !=
        oracle::minimal_oversum_sets_naive(contrib, threshold, 3)) {
      check.pass = false;
      check.detail = "set family mismatch at seed " + std::to_string(seed);
    }
  }
  report.checks.push_back(check);
}

void check_instance_files(const std::vector<std::string>& paths, OracleReport& report) {
  for (const auto& path : paths) {
    OracleCheck check{"instance file: " + path, true, 1, ""};
    try {
      auto g = read_uniform_text(read_file(path));
      auto greedy = greedy_matching(g);
      auto local = local_search_matching(g, greedy, std::min(3, g.rank()));
      if (local.total_weight < greedy.total_weight) {
        check.pass = false;
        check.detail = "local search regressed below greedy";
      }
      if (!is_matching(g.to_hypergraph(), local.edge_ids)) {
        check.pass = false;
        check.detail = "local search output is not a matching";
      }
      if (g.edge_count() <= kDefaultExactCap) {
        auto exact = exact_matching(g);
        if (exact.total_weight + 1e-9 < local.total_weight) {
          check.pass = false;
          check.detail = "exact optimum below local search";
        }
      }
    } catch (const std::exception& err) {
      check.pass = false;
      check.detail = sanitize(err.what());
    }
    report.checks.push_back(check);
  }
}

}  // namespace

OracleReport run_oracle_suite(const std::vector<std::string>& instance_files) {
  OracleReport report;
  check_matching_suite(report);
  check_hungarian_suite(report);
  check_potential_suite(report);
  check_structural_suite(report);
  check_coloring_suite(report);
  check_oversum_suite(report);
  check_instance_files(instance_files, report);
  return report;
}

}  // namespace hudn
