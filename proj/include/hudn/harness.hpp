#pragma once

#include <string>
#include <vector>

#include "hudn/config.hpp"

namespace hudn {

inline constexpr const char* kCsvHeader =
    "row_type,scenario,algorithm,seed,m,n,k,sum_rate_bps,objective,solver_time_s,iterations,"
    "assigned,violations,potential_initial,potential_final,status,config_hash";

/// One row per (seed, algorithm): both CRAN pipelines per seed, a single
/// pipeline for the other scenarios. A solver failure becomes an error-status
/// row and the run continues.
std::string run_rows_csv(const ExperimentConfig& config);

/// Data rows per (n, seed, algorithm) for the configured sweep_n list, then
/// one summary row per (n, algorithm) with group means.
std::string sweep_csv(const ExperimentConfig& config);

/// Writes one instance dump per seed in the scenario's text format; returns
/// the paths written.
std::vector<std::string> generate_instances(const ExperimentConfig& config);

/// Strips a named column; used to compare reruns while ignoring wall time.
std::string csv_without_column(const std::string& csv, const std::string& column);

struct OracleCheck {
  std::string name;
  bool pass = false;
  long long instances = 0;
  std::string detail;
};

struct OracleReport {
  std::vector<OracleCheck> checks;

  bool all_pass() const;
  std::string to_text() const;
};

/// Built-in self-check suite: solver outputs against the naive reference
/// implementations, plus structural round trips. Extra uniform-instance files
/// are validated and cross-checked when small enough.
OracleReport run_oracle_suite(const std::vector<std::string>& instance_files = {});

}  // namespace hudn
