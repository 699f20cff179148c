#pragma once

#include <map>
#include <string>
#include <vector>

#include "chmsav/initial_conditions.hpp"

namespace chmsav {

enum class RunMode { simulate, converge, invariants };

enum class InitialCondition {
  traveling_wave,
  two_peakon,
  three_peakon,
  discontinuous
};

/// Fully resolved experiment configuration. Produced from a flat key-value
/// config file plus CLI overrides; see build_run_config.
struct RunConfig {
  RunMode mode = RunMode::simulate;
  double a = 0.0;
  double b = 0.0;
  bool has_domain = false;  // a/b were given (or defaulted by the IC preset)
  int N = 0;
  double tau = 0.0;
  double T = -1.0;  // < 0 means mode-specific default (one wave period)
  double C1 = 0.0;
  double C2 = 0.0;
  double eps_radicand = 1e-12;
  InitialCondition ic = InitialCondition::traveling_wave;
  TravelingWaveParams wave;
  std::vector<Peak> peaks;
  std::string output_dir = ".";
  long sample_stride = 0;  // 0 -> default rule (1 for N <= 64, else 100)
  PeakonBranch peakon_branch = PeakonBranch::verbatim;
  std::vector<double> tau_list;  // converge mode
};

/// Parses the flat `key = value` format with cosmetic [section] headers and
/// `#`/`;` comments. Later duplicates win. Throws ConfigError on I/O or
/// syntax problems.
std::map<std::string, std::string> read_config_file(const std::string& path);

RunMode parse_mode(const std::string& name);

/// Applies mode- and IC-specific defaults, converts and validates every key.
/// Unknown keys are rejected. Throws ConfigError.
RunConfig build_run_config(RunMode mode,
                           std::map<std::string, std::string> kv);

}  // namespace chmsav
