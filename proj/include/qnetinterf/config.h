// Copyright 2026 The qnetinterf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QNETINTERF_CONFIG_H_
#define QNETINTERF_CONFIG_H_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qnetinterf/codec.h"
#include "qnetinterf/noise.h"
#include "qnetinterf/planner.h"
#include "qnetinterf/source.h"

namespace qnetinterf {

/// A configuration problem. `line` is the 1-based line of the offending entry,
/// or 0 when the value did not come from a file.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Flat `key = value` configuration. Blank lines and `#` comments are
/// ignored; lists are comma separated. Every key carries its unit in its name.
///
///   epsilon, g_abs, g_phase_rad          source
///   M or k                               block length (M = 2^k - 1)
///   p_t, f_t, f_1, f_2, f_e, or nu       error budget
///   delta0_rad, delta_grid_rad           readout phases (offsets from delta0)
///   events, batches, seed                estimation campaign
///   epsilon_grid, nu_grid, M_grid, M_max sweeps
///   magnitude, delta_f_hz, area_m2, lambda_m, baseline_m   observatory
struct RunConfig {
  double epsilon = 0.05;
  double g_abs = 1.0;
  double g_phase_rad = 0.0;
  std::uint64_t bins = 7;
  noise::ErrorBudget budget;
  std::optional<double> nu;
  double delta0_rad = 0.0;
  std::vector<double> delta_grid_rad;  // empty: {0, pi/2}
  std::uint64_t events = 100000;
  std::uint64_t batches = 100;
  std::optional<std::uint64_t> seed;
  std::vector<double> epsilon_grid;
  std::vector<double> nu_grid;
  std::vector<double> bins_grid;
  double max_bins = planner::kDefaultMaxBins;
  planner::ObservatorySpec observatory;

  static RunConfig parse(const std::string& text);
  static RunConfig load_file(const std::string& path);

  /// Sets one key from its textual value; throws ConfigError naming `line`.
  void set(const std::string& key, const std::string& value, int line = 0);
  bool has(const std::string& key) const { return lines_.count(key) > 0; }

  /// Cross-field checks for `command`; stochastic commands require a seed.
  /// Throws ConfigError pointing at the line of the conflicting key.
  void validate(const std::string& command) const;

  /// Effective budget: from_nu(nu) when nu is set, else the fidelity keys.
  noise::ErrorBudget effective_budget() const;
  source::ThermalSource source() const;
  codec::MemoryLayout layout() const;
  /// delta0 plus each grid offset.
  std::vector<double> deltas() const;
  std::vector<double> epsilons() const;  // default 1e-7 ... 1e-2 by decade
  std::vector<double> nus() const;       // default {1, 0.8, 0.6}
  std::vector<double> bin_values() const;  // default 2^k - 1 for k = 1..24

  static const std::vector<std::string>& known_keys();

 private:
  int line_of(const std::string& key) const;
  std::map<std::string, int> lines_;
};

}  // namespace qnetinterf

#endif  // QNETINTERF_CONFIG_H_
