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

#include "qnetinterf/config.h"

#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

namespace qnetinterf {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return "";
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string where(int line) { return line > 0 ? "line " + std::to_string(line) + ": " : ""; }

double to_real(const std::string& key, const std::string& text, int line) {
  const std::string s = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ConfigError(line, key + " expects a finite number, got '" + s + "'");
  }
  return v;
}

std::uint64_t to_count(const std::string& key, const std::string& text, int line) {
  const std::string s = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (!s.empty() && ec == std::errc() && ptr == s.data() + s.size()) {
    return v;
  }
  // Accept integer-valued scientific notation such as 1e6.
  const double d = to_real(key, s, line);
  if (d < 0.0 || d != std::floor(d) || d > 9.0e15) {
    throw ConfigError(line, key + " expects a non-negative integer, got '" + s + "'");
  }
  return static_cast<std::uint64_t>(d);
}

std::vector<double> to_list(const std::string& key, const std::string& text, int line) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    out.push_back(to_real(key, item, line));
  }
  if (out.empty()) {
    throw ConfigError(line, key + " expects a comma-separated list of numbers");
  }
  return out;
}

void require(bool ok, const std::string& key, const std::string& what, int line) {
  if (!ok) {
    throw ConfigError(line, key + " " + what);
  }
}

double unit_interval(const std::string& key, const std::string& v, int line) {
  const double x = to_real(key, v, line);
  require(x >= 0.0 && x <= 1.0, key, "must lie in [0, 1]", line);
  return x;
}

double fidelity_value(const std::string& key, const std::string& v, int line) {
  const double x = to_real(key, v, line);
  require(x >= 0.5 && x <= 1.0, key, "must lie in [0.5, 1]", line);
  return x;
}

double positive(const std::string& key, const std::string& v, int line) {
  const double x = to_real(key, v, line);
  require(x > 0.0, key, "must be positive", line);
  return x;
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&, int)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"epsilon",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) {
         c.epsilon = to_real(k, v, l);
         require(c.epsilon >= 0.0, k, "must be non-negative", l);
       }},
      {"g_abs", [](RunConfig& c, const std::string& k, const std::string& v, int l) { c.g_abs = unit_interval(k, v, l); }},
      {"g_phase_rad",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) { c.g_phase_rad = to_real(k, v, l); }},
      {"M",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) {
         c.bins = to_count(k, v, l);
         require(c.bins >= 1, k, "must be at least 1", l);
       }},
      {"k",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) {
         const std::uint64_t q = to_count(k, v, l);
         require(q >= 1 && q <= 30, k, "must lie in [1, 30]", l);
         c.bins = (std::uint64_t{1} << q) - 1;
       }},
      {"p_t",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) { c.budget.p_t = unit_interval(k, v, l); }},
      {"f_t",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) { c.budget.f_t = fidelity_value(k, v, l); }},
      {"f_1",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) { c.budget.f_1 = fidelity_value(k, v, l); }},
      {"f_2",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) { c.budget.f_2 = fidelity_value(k, v, l); }},
      {"f_e",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) { c.budget.f_e = fidelity_value(k, v, l); }},
      {"nu",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) {
         const double x = to_real(k, v, l);
         require(x > 0.0 && x <= 1.0, k, "must lie in (0, 1]", l);
         c.nu = x;
       }},
      {"delta0_rad",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) { c.delta0_rad = to_real(k, v, l); }},
      {"delta_grid_rad",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) { c.delta_grid_rad = to_list(k, v, l); }},
      {"events",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) {
         c.events = to_count(k, v, l);
         require(c.events >= 1, k, "must be at least 1", l);
       }},
      {"batches",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) {
         c.batches = to_count(k, v, l);
         require(c.batches >= 2, k, "must be at least 2", l);
       }},
      {"seed", [](RunConfig& c, const std::string& k, const std::string& v, int l) { c.seed = to_count(k, v, l); }},
      {"epsilon_grid",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) {
         c.epsilon_grid = to_list(k, v, l);
         for (double e : c.epsilon_grid) {
           require(e > 0.0 && e < 1.0, k, "entries must lie in (0, 1)", l);
         }
       }},
      {"nu_grid",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) {
         c.nu_grid = to_list(k, v, l);
         for (double n : c.nu_grid) {
           require(n > 0.0 && n <= 1.0, k, "entries must lie in (0, 1]", l);
         }
       }},
      {"M_grid",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) {
         c.bins_grid = to_list(k, v, l);
         for (double m : c.bins_grid) {
           require(m >= 1.0 && m == std::floor(m), k, "entries must be integers >= 1", l);
         }
       }},
      {"M_max",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) {
         c.max_bins = static_cast<double>(to_count(k, v, l));
         require(c.max_bins >= 1.0, k, "must be at least 1", l);
       }},
      {"magnitude",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) { c.observatory.magnitude = to_real(k, v, l); }},
      {"delta_f_hz",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) { c.observatory.bandwidth_hz = positive(k, v, l); }},
      {"area_m2",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) { c.observatory.area_m2 = positive(k, v, l); }},
      {"lambda_m",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) { c.observatory.wavelength_m = positive(k, v, l); }},
      {"baseline_m",
       [](RunConfig& c, const std::string& k, const std::string& v, int l) { c.observatory.baseline_m = positive(k, v, l); }},
  };
  return table;
}

}  // namespace

ConfigError::ConfigError(int line, const std::string& message)
    : std::invalid_argument(where(line) + message), line_(line) {}

const std::vector<std::string>& RunConfig::known_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, setter] : setters()) {
      k.push_back(name);
    }
    return k;
  }();
  return keys;
}

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    if (const auto hash = s.find('#'); hash != std::string::npos) {
      s.resize(hash);
    }
    s = trim(s);
    if (s.empty()) {
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line, "expected 'key = value', got '" + s + "'");
    }
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (cfg.has(key)) {
      throw ConfigError(line, "duplicate key '" + key + "' (first set on line " + std::to_string(cfg.line_of(key)) + ")");
    }
    cfg.set(key, value, line);
  }
  return cfg;
}

RunConfig RunConfig::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    throw ConfigError(0, "cannot open config file '" + path + "'");
  }
  std::stringstream buf;
  buf << f.rdbuf();
  return parse(buf.str());
}

void RunConfig::set(const std::string& key, const std::string& value, int line) {
  const auto it = setters().find(key);
  if (it == setters().end()) {
    throw ConfigError(line, "unknown key '" + key + "'");
  }
  it->second(*this, key, value, line);
  lines_[key] = line;
}

int RunConfig::line_of(const std::string& key) const {
  const auto it = lines_.find(key);
  return it == lines_.end() ? 0 : it->second;
}

void RunConfig::validate(const std::string& command) const {
  if (has("M") && has("k")) {
    throw ConfigError(line_of("k"), "set either M or k, not both (M is on line " + std::to_string(line_of("M")) + ")");
  }
  if (nu.has_value()) {
    for (const char* f : {"p_t", "f_t", "f_1", "f_2", "f_e"}) {
      if (has(f)) {
        throw ConfigError(line_of(f), std::string(f) + " conflicts with nu on line " + std::to_string(line_of("nu")));
      }
    }
  }
  if (command == "simulate") {
    if (!seed.has_value()) {
      throw ConfigError(0, "simulate needs a seed (config key 'seed' or --seed)");
    }
    if (!(epsilon > 0.0)) {
      throw ConfigError(line_of("epsilon"), "simulate needs epsilon > 0");
    }
    if (!std::has_single_bit(bins + 1)) {
      throw ConfigError(line_of(has("M") ? "M" : "k"), "simulate needs M + 1 to be a power of two");
    }
    if (bins > 1023) {
      throw ConfigError(line_of("M"), "simulate supports M up to 1023 (k <= 10)");
    }
    if (events < batches) {
      throw ConfigError(line_of("events"), "events must be at least the number of batches");
    }
    const auto d = deltas();
    if (d.size() < 2) {
      throw ConfigError(line_of("delta_grid_rad"), "delta_grid_rad needs at least two phases");
    }
  } else if (command == "fisher-curve" || command == "resources") {
    if (command == "fisher-curve" && !(epsilon > 0.0)) {
      throw ConfigError(line_of("epsilon"), "fisher-curve needs epsilon > 0");
    }
    if (command == "resources" && (observatory.wavelength_m < 500e-9 || observatory.wavelength_m > 600e-9)) {
      throw ConfigError(line_of("lambda_m"), "lambda_m must lie in the V band [5e-7, 6e-7]");
    }
  } else if (command == "optimize") {
    for (double e : epsilons()) {
      if (e > 0.1) {
        throw ConfigError(line_of("epsilon_grid"), "optimize needs epsilon_grid entries in (0, 0.1]");
      }
    }
  } else if (command != "entropy") {
    throw ConfigError(0, "unknown command '" + command + "'");
  }
}

noise::ErrorBudget RunConfig::effective_budget() const {
  return nu.has_value() ? noise::ErrorBudget::from_nu(*nu) : budget;
}

source::ThermalSource RunConfig::source() const {
  return source::ThermalSource::from_polar(epsilon, g_abs, g_phase_rad);
}

codec::MemoryLayout RunConfig::layout() const { return codec::MemoryLayout::from_bins(bins); }

std::vector<double> RunConfig::deltas() const {
  const std::vector<double> offsets =
      delta_grid_rad.empty() ? std::vector<double>{0.0, std::numbers::pi / 2.0} : delta_grid_rad;
  std::vector<double> out;
  for (double o : offsets) {
    out.push_back(delta0_rad + o);
  }
  return out;
}

std::vector<double> RunConfig::epsilons() const {
  if (!epsilon_grid.empty()) {
    return epsilon_grid;
  }
  return {1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2};
}

std::vector<double> RunConfig::nus() const { return nu_grid.empty() ? std::vector<double>{1.0, 0.8, 0.6} : nu_grid; }

std::vector<double> RunConfig::bin_values() const {
  if (!bins_grid.empty()) {
    return bins_grid;
  }
  std::vector<double> out;
  for (int k = 1; k <= 24; ++k) {
    out.push_back(std::ldexp(1.0, k) - 1.0);
  }
  return out;
}

}  // namespace qnetinterf
