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

// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qnetinterf/qnetinterf.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

int exit_code_for(qni_status status) {
  switch (status) {
    case QNI_OK:
      return kExitOk;
    case QNI_ERR_CONFIG:
    case QNI_ERR_INVALID_ARGUMENT:
    case QNI_ERR_OUT_OF_RANGE:
      return kExitConfig;
    case QNI_ERR_NUMERICAL:
      return kExitNumerical;
    case QNI_ERR_INTERNAL:
      break;
  }
  return kExitFailure;
}

int report(qni_status status) {
  std::cerr << "qnetinterf: " << qni_status_name(status) << ": " << qni_last_error() << "\n";
  return exit_code_for(status);
}

struct Handles {
  qni_config* config = nullptr;
  qni_table* table = nullptr;
  char* text = nullptr;

  ~Handles() {
    qni_string_free(text);
    qni_table_free(table);
    qni_config_free(config);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement-assisted interferometry: simulation, Fisher analysis and resource planning"};
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  std::uint64_t seed = 0;
  int threads = 1;

  app.add_option("--config", config_path, "Run configuration file (key = value)")->check(CLI::ExistingFile);
  auto* seed_opt = app.add_option("--seed", seed, "Random seed; overrides the config's seed");
  app.add_option("--out", out_path, "Write the result here instead of stdout");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  app.require_subcommand(1);

  const char* names[][2] = {{"simulate", "Estimation campaign over the codec simulator"},
                            {"fisher-curve", "Fisher bound versus block length"},
                            {"optimize", "Optimal block length and Bell-pair cost per (epsilon, nu)"},
                            {"entropy", "Conditional entropy and minimum ebits per photon"},
                            {"resources", "Observatory resource estimate"}};
  for (const auto& n : names) {
    app.add_subcommand(n[0], n[1])->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  Handles h;
  qni_status st = config_path.empty() ? qni_config_create(&h.config) : qni_config_load_file(config_path.c_str(), &h.config);
  if (st != QNI_OK) {
    return report(st);
  }
  if (*seed_opt) {
    st = qni_config_set(h.config, "seed", std::to_string(seed).c_str());
    if (st != QNI_OK) {
      return report(st);
    }
  }
  if ((st = qni_config_validate(h.config, command.c_str())) != QNI_OK) {
    return report(st);
  }
  if ((st = qni_run_command(h.config, command.c_str(), threads, &h.table)) != QNI_OK) {
    return report(st);
  }
  st = format == "json" ? qni_table_to_json(h.table, &h.text) : qni_table_to_csv(h.table, &h.text);
  if (st != QNI_OK) {
    return report(st);
  }

  if (out_path.empty()) {
    std::fputs(h.text, stdout);
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << h.text;
  if (!out) {
    std::cerr << "qnetinterf: cannot write '" << out_path << "'\n";
    return kExitFailure;
  }
  return kExitOk;
}
