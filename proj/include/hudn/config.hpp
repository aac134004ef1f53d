#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hudn/radio.hpp"
#include "hudn/scenarios.hpp"

namespace hudn {

/// One experiment description: scenario, sizes, seeds, radio parameters, and
/// scenario-specific knobs. Serialized as "key = value" lines.
struct ExperimentConfig {
  std::string scenario = "cran";  // cran | dualconn | d2d | caching
  int m = 20;                     // users (or D2D links for the d2d scenario)
  int n = 10;                     // RRHs / SAPs
  int k = 10;                     // channels
  std::vector<int> sweep_n;       // ascending list for the sweep command
  std::vector<std::uint64_t> seeds = {1};
  std::string out;

  // cran solver
  int k_max = 2;
  bool best_improvement = false;
  bool channel_only_disjoint = false;

  // d2d game
  std::string mode = "best_response";  // best_response | stochastic
  double beta = 1.0;
  int max_rounds = 200;

  // caching
  std::string policy = "distributed";  // distributed | centralized
  CatalogConfig catalog;

  // optional per-seed potential-trace dump prefix (d2d runs)
  std::string trace_out;

  // geometry
  double area_m = 500.0;
  double d2d_max_sep_m = 50.0;

  RadioParams radio;
};

/// Applies one "key = value" override; throws std::invalid_argument on an
/// unknown key or malformed value.
void apply_config_entry(ExperimentConfig& config, const std::string& key,
                        const std::string& value);

/// Parses "key = value" lines; '#' starts a comment.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

/// Full key set in fixed order; parse_config_text(canonical) reproduces the
/// config.
std::string canonical_config_text(const ExperimentConfig& config);

/// FNV-1a hash of the canonical text, hex encoded; stamped on every CSV row.
std::string config_hash(const ExperimentConfig& config);

void validate_config(const ExperimentConfig& config);

}  // namespace hudn
