#include "hudn/config.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hudn/io.hpp"

namespace hudn {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

template <typename T>
std::vector<T> parse_list(const std::string& value, const std::string& key) {
  std::vector<T> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      if constexpr (std::is_same_v<T, std::uint64_t>) {
        out.push_back(std::stoull(item));
      } else {
        out.push_back(std::stoi(item));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("config: bad list item '" + item + "' for " + key);
    }
  }
  return out;
}

int parse_int(const std::string& value, const std::string& key) {
  try {
    return std::stoi(value);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer '" + value + "' for " + key);
  }
}

double parse_real(const std::string& value, const std::string& key) {
  try {
    return std::stod(value);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number '" + value + "' for " + key);
  }
}

bool parse_bool(const std::string& value, const std::string& key) {
  if (value == "1" || value == "true") return true;
  if (value == "0" || value == "false") return false;
  throw std::invalid_argument("config: bad boolean '" + value + "' for " + key);
}

template <typename T>
std::string join_list(const std::vector<T>& values) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  return out.str();
}

}  // namespace

void apply_config_entry(ExperimentConfig& c, const std::string& key, const std::string& value) {
  if (key == "scenario") {
    c.scenario = value;
  } else if (key == "m") {
    c.m = parse_int(value, key);
  } else if (key == "n") {
    c.n = parse_int(value, key);
  } else if (key == "k") {
    c.k = parse_int(value, key);
  } else if (key == "sweep_n") {
    c.sweep_n = parse_list<int>(value, key);
  } else if (key == "seeds") {
    c.seeds = parse_list<std::uint64_t>(value, key);
  } else if (key == "out") {
    c.out = value;
  } else if (key == "k_max") {
    c.k_max = parse_int(value, key);
  } else if (key == "best_improvement") {
    c.best_improvement = parse_bool(value, key);
  } else if (key == "channel_only_disjoint") {
    c.channel_only_disjoint = parse_bool(value, key);
  } else if (key == "mode") {
    c.mode = value;
  } else if (key == "beta") {
    c.beta = parse_real(value, key);
  } else if (key == "max_rounds") {
    c.max_rounds = parse_int(value, key);
  } else if (key == "policy") {
    c.policy = value;
  } else if (key == "trace_out") {
    c.trace_out = value;
  } else if (key == "num_contents") {
    c.catalog.num_contents = parse_int(value, key);
  } else if (key == "sap_cache_prob") {
    c.catalog.sap_cache_prob = parse_real(value, key);
  } else if (key == "user_cache_prob") {
    c.catalog.user_cache_prob = parse_real(value, key);
  } else if (key == "min_length_bits") {
    c.catalog.min_length_bits = parse_real(value, key);
  } else if (key == "max_length_bits") {
    c.catalog.max_length_bits = parse_real(value, key);
  } else if (key == "area_m") {
    c.area_m = parse_real(value, key);
  } else if (key == "d2d_max_sep_m") {
    c.d2d_max_sep_m = parse_real(value, key);
  } else if (key == "alpha") {
    c.radio.pathloss_exponent = parse_real(value, key);
  } else if (key == "ref_loss_db") {
    c.radio.reference_loss_db = parse_real(value, key);
  } else if (key == "macro_dbm") {
    c.radio.macro_power_dbm = parse_real(value, key);
  } else if (key == "sap_dbm") {
    c.radio.sap_power_dbm = parse_real(value, key);
  } else if (key == "d2d_dbm") {
    c.radio.d2d_power_dbm = parse_real(value, key);
  } else if (key == "noise_dbm") {
    c.radio.noise_dbm = parse_real(value, key);
  } else if (key == "bandwidth_hz") {
    c.radio.bandwidth_hz = parse_real(value, key);
  } else if (key == "min_rate_bps") {
    c.radio.min_rate_bps = parse_real(value, key);
  } else if (key == "interference_threshold_dbm") {
    c.radio.interference_threshold_dbm = parse_real(value, key);
  } else if (key == "sinr_min_db") {
    c.radio.default_sinr_min_db = parse_real(value, key);
  } else if (key == "cumulative_set_max") {
    c.radio.cumulative_set_max = parse_int(value, key);
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig config;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected 'key = value'");
    }
    apply_config_entry(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return config;
}

ExperimentConfig load_config_file(const std::string& path) {
  return parse_config_text(read_file(path));
}

std::string canonical_config_text(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "scenario = " << c.scenario << '\n';
  out << "m = " << c.m << '\n';
  out << "n = " << c.n << '\n';
  out << "k = " << c.k << '\n';
  out << "sweep_n = " << join_list(c.sweep_n) << '\n';
  out << "seeds = " << join_list(c.seeds) << '\n';
  out << "out = " << c.out << '\n';
  out << "k_max = " << c.k_max << '\n';
  out << "best_improvement = " << (c.best_improvement ? 1 : 0) << '\n';
  out << "channel_only_disjoint = " << (c.channel_only_disjoint ? 1 : 0) << '\n';
  out << "mode = " << c.mode << '\n';
  out << "beta = " << format_double(c.beta) << '\n';
  out << "max_rounds = " << c.max_rounds << '\n';
  out << "policy = " << c.policy << '\n';
  out << "trace_out = " << c.trace_out << '\n';
  out << "num_contents = " << c.catalog.num_contents << '\n';
  out << "sap_cache_prob = " << format_double(c.catalog.sap_cache_prob) << '\n';
  out << "user_cache_prob = " << format_double(c.catalog.user_cache_prob) << '\n';
  out << "min_length_bits = " << format_double(c.catalog.min_length_bits) << '\n';
  out << "max_length_bits = " << format_double(c.catalog.max_length_bits) << '\n';
  out << "area_m = " << format_double(c.area_m) << '\n';
  out << "d2d_max_sep_m = " << format_double(c.d2d_max_sep_m) << '\n';
  out << "alpha = " << format_double(c.radio.pathloss_exponent) << '\n';
  out << "ref_loss_db = " << format_double(c.radio.reference_loss_db) << '\n';
  out << "macro_dbm = " << format_double(c.radio.macro_power_dbm) << '\n';
  out << "sap_dbm = " << format_double(c.radio.sap_power_dbm) << '\n';
  out << "d2d_dbm = " << format_double(c.radio.d2d_power_dbm) << '\n';
  out << "noise_dbm = " << format_double(c.radio.noise_dbm) << '\n';
  out << "bandwidth_hz = " << format_double(c.radio.bandwidth_hz) << '\n';
  out << "min_rate_bps = " << format_double(c.radio.min_rate_bps) << '\n';
  out << "interference_threshold_dbm = " << format_double(c.radio.interference_threshold_dbm)
      << '\n';
  out << "sinr_min_db = " << format_double(c.radio.default_sinr_min_db) << '\n';
  out << "cumulative_set_max = " << c.radio.cumulative_set_max << '\n';
  return out.str();
}

std::string config_hash(const ExperimentConfig& config) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canonical_config_text(config)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void validate_config(const ExperimentConfig& c) {
  static const std::set<std::string> kScenarios{"cran", "dualconn", "d2d", "caching"};
  if (!kScenarios.count(c.scenario)) {
    throw std::invalid_argument("config: unknown scenario '" + c.scenario + "'");
  }
  if (c.m < 1 || c.n < 1 || c.k < 1) {
    throw std::invalid_argument("config: m, n, k must be positive");
  }
  if (c.seeds.empty()) {
    throw std::invalid_argument("config: seed list must not be empty");
  }
  std::set<std::uint64_t> distinct(c.seeds.begin(), c.seeds.end());
  if (distinct.size() != c.seeds.size()) {
    throw std::invalid_argument("config: seeds must be distinct");
  }
  if (!std::is_sorted(c.sweep_n.begin(), c.sweep_n.end()) ||
      std::adjacent_find(c.sweep_n.begin(), c.sweep_n.end()) != c.sweep_n.end()) {
    throw std::invalid_argument("config: sweep_n must be strictly ascending");
  }
  if (c.mode != "best_response" && c.mode != "stochastic") {
    throw std::invalid_argument("config: mode must be best_response or stochastic");
  }
  if (c.policy != "distributed" && c.policy != "centralized") {
    throw std::invalid_argument("config: policy must be distributed or centralized");
  }
  if (c.k_max < 1 || c.k_max > 3) {
    throw std::invalid_argument("config: k_max must be in [1, 3]");
  }
  if (!(c.beta > 0.0)) {
    throw std::invalid_argument("config: beta must be positive");
  }
  if (c.max_rounds < 1) {
    throw std::invalid_argument("config: max_rounds must be >= 1");
  }
}

}  // namespace hudn
