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

#include "qnetinterf/qnetinterf.h"

#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "qnetinterf/codec.h"
#include "qnetinterf/commands.h"
#include "qnetinterf/config.h"
#include "qnetinterf/entropy.h"
#include "qnetinterf/fisher.h"
#include "qnetinterf/noise.h"
#include "qnetinterf/planner.h"
#include "qnetinterf/source.h"
#include "qnetinterf/table.h"

struct qni_config {
  qnetinterf::RunConfig config;
};

struct qni_table {
  qnetinterf::Table table;
};

struct qni_simulator {
  qnetinterf::source::ThermalSource source;
  qnetinterf::codec::MemoryLayout layout;
  std::optional<qnetinterf::noise::DepolarizingInjector> injector;
  qnetinterf::Rng rng;
};

namespace {

thread_local std::string last_error;

qni_status fail(qni_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
qni_status guarded(Fn&& fn) {
  try {
    fn();
    return QNI_OK;
  } catch (const qnetinterf::ConfigError& e) {
    return fail(QNI_ERR_CONFIG, e.what());
  } catch (const qnetinterf::commands::NumericalFailure& e) {
    return fail(QNI_ERR_NUMERICAL, e.what());
  } catch (const qnetinterf::planner::NoFeasiblePlan& e) {
    return fail(QNI_ERR_NUMERICAL, e.what());
  } catch (const std::out_of_range& e) {
    return fail(QNI_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QNI_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(QNI_ERR_NUMERICAL, e.what());
  } catch (const std::exception& e) {
    return fail(QNI_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QNI_ERR_INTERNAL, "unknown error");
  }
}

#define QNI_REQUIRE(ptr)                                                 \
  do {                                                                   \
    if ((ptr) == nullptr) {                                              \
      return fail(QNI_ERR_INVALID_ARGUMENT, #ptr " must not be null");  \
    }                                                                    \
  } while (0)

qnetinterf::noise::ErrorBudget to_budget(const qni_budget& b) { return {b.p_t, b.f_t, b.f_1, b.f_2, b.f_e}; }

qni_budget from_budget(const qnetinterf::noise::ErrorBudget& b) { return {b.p_t, b.f_t, b.f_1, b.f_2, b.f_e}; }

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* qni_version(void) { return "0.1.0"; }

const char* qni_last_error(void) { return last_error.c_str(); }

const char* qni_status_name(qni_status status) {
  switch (status) {
    case QNI_OK:
      return "ok";
    case QNI_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case QNI_ERR_CONFIG:
      return "config error";
    case QNI_ERR_NUMERICAL:
      return "numerical failure";
    case QNI_ERR_OUT_OF_RANGE:
      return "out of range";
    case QNI_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

qni_status qni_config_create(qni_config** out) {
  QNI_REQUIRE(out);
  return guarded([&] { *out = new qni_config{}; });
}

qni_status qni_config_parse(const char* text, qni_config** out) {
  QNI_REQUIRE(text);
  QNI_REQUIRE(out);
  return guarded([&] { *out = new qni_config{qnetinterf::RunConfig::parse(text)}; });
}

qni_status qni_config_load_file(const char* path, qni_config** out) {
  QNI_REQUIRE(path);
  QNI_REQUIRE(out);
  return guarded([&] { *out = new qni_config{qnetinterf::RunConfig::load_file(path)}; });
}

qni_status qni_config_set(qni_config* config, const char* key, const char* value) {
  QNI_REQUIRE(config);
  QNI_REQUIRE(key);
  QNI_REQUIRE(value);
  return guarded([&] { config->config.set(key, value); });
}

qni_status qni_config_validate(const qni_config* config, const char* command) {
  QNI_REQUIRE(config);
  QNI_REQUIRE(command);
  return guarded([&] { config->config.validate(command); });
}

void qni_config_free(qni_config* config) { delete config; }

qni_status qni_run_command(const qni_config* config, const char* command, int threads, qni_table** out) {
  QNI_REQUIRE(config);
  QNI_REQUIRE(command);
  QNI_REQUIRE(out);
  if (threads < 1) {
    return fail(QNI_ERR_INVALID_ARGUMENT, "threads must be at least 1");
  }
  return guarded([&] {
    qnetinterf::commands::RunOptions options;
    options.threads = threads;
    *out = new qni_table{qnetinterf::commands::run_command(command, config->config, options)};
  });
}

qni_status qni_table_num_rows(const qni_table* table, size_t* out) {
  QNI_REQUIRE(table);
  QNI_REQUIRE(out);
  *out = table->table.rows.size();
  return QNI_OK;
}

qni_status qni_table_num_columns(const qni_table* table, size_t* out) {
  QNI_REQUIRE(table);
  QNI_REQUIRE(out);
  *out = table->table.columns.size();
  return QNI_OK;
}

qni_status qni_table_column_name(const qni_table* table, size_t column, const char** out) {
  QNI_REQUIRE(table);
  QNI_REQUIRE(out);
  if (column >= table->table.columns.size()) {
    return fail(QNI_ERR_OUT_OF_RANGE, "column index out of range");
  }
  *out = table->table.columns[column].c_str();
  return QNI_OK;
}

qni_status qni_table_value(const qni_table* table, size_t row, size_t column, double* out) {
  QNI_REQUIRE(table);
  QNI_REQUIRE(out);
  if (row >= table->table.rows.size() || column >= table->table.columns.size()) {
    return fail(QNI_ERR_OUT_OF_RANGE, "table index out of range");
  }
  *out = table->table.rows[row][column];
  return QNI_OK;
}

qni_status qni_table_to_csv(const qni_table* table, char** out) {
  QNI_REQUIRE(table);
  QNI_REQUIRE(out);
  return guarded([&] { *out = copy_string(table->table.to_csv()); });
}

qni_status qni_table_to_json(const qni_table* table, char** out) {
  QNI_REQUIRE(table);
  QNI_REQUIRE(out);
  return guarded([&] { *out = copy_string(table->table.to_json()); });
}

void qni_table_free(qni_table* table) { delete table; }

void qni_string_free(char* s) { delete[] s; }

void qni_budget_ideal(qni_budget* out) {
  if (out != nullptr) {
    *out = from_budget(qnetinterf::noise::ErrorBudget::ideal());
  }
}

qni_status qni_budget_from_nu(double nu, qni_budget* out) {
  QNI_REQUIRE(out);
  return guarded([&] { *out = from_budget(qnetinterf::noise::ErrorBudget::from_nu(nu)); });
}

qni_status qni_block_statistics(double epsilon, uint64_t bins, double* p_vacuum, double* p_single, double* p_multi) {
  QNI_REQUIRE(p_vacuum);
  QNI_REQUIRE(p_single);
  QNI_REQUIRE(p_multi);
  return guarded([&] {
    const auto s = qnetinterf::source::block_statistics(epsilon, bins);
    *p_vacuum = s.p_vacuum;
    *p_single = s.p_single;
    *p_multi = s.p_multi;
  });
}

qni_status qni_ideal_readout_state(double epsilon, double bins, double* p, double* c) {
  QNI_REQUIRE(p);
  QNI_REQUIRE(c);
  return guarded([&] {
    const auto rs = qnetinterf::noise::ideal_readout_state(epsilon, bins);
    *p = rs.p;
    *c = rs.c;
  });
}

qni_status qni_apply_budget(double p, double c, const qni_budget* budget, uint64_t bins, double* p_out,
                            double* c_out) {
  QNI_REQUIRE(budget);
  QNI_REQUIRE(p_out);
  QNI_REQUIRE(c_out);
  return guarded([&] {
    const auto rs = qnetinterf::noise::apply_budget({p, c}, to_budget(*budget), bins);
    *p_out = rs.p;
    *c_out = rs.c;
  });
}

qni_status qni_fisher_lower_bound(double epsilon, double bins, const qni_budget* budget, double* out) {
  QNI_REQUIRE(budget);
  QNI_REQUIRE(out);
  return guarded([&] { *out = qnetinterf::fisher::fisher_lower_bound(epsilon, bins, to_budget(*budget)); });
}

qni_status qni_optimize_block(double epsilon, const qni_budget* budget, double max_bins, qni_plan* out) {
  QNI_REQUIRE(budget);
  QNI_REQUIRE(out);
  return guarded([&] {
    qnetinterf::planner::PlanQuery q;
    q.epsilon = epsilon;
    q.budget = to_budget(*budget);
    q.max_bins = max_bins;
    const auto r = qnetinterf::planner::optimize_block(q);
    *out = {r.bins, r.pairs_per_block, r.fisher_bound, r.blocks_needed, r.total_pairs, r.expected_pairs,
            r.qubits_per_site};
  });
}

qni_status qni_conditional_entropy(double epsilon, double g_re, double g_im, double* out) {
  QNI_REQUIRE(out);
  return guarded([&] { *out = qnetinterf::entropy::conditional_entropy(epsilon, {g_re, g_im}); });
}

qni_status qni_min_ebits_per_photon(double epsilon, double* out) {
  QNI_REQUIRE(out);
  return guarded([&] { *out = qnetinterf::entropy::min_ebits_per_photon(epsilon); });
}

qni_status qni_simulator_create(double epsilon, double g_re, double g_im, uint64_t bins, const qni_budget* budget,
                                uint64_t seed, qni_simulator** out) {
  QNI_REQUIRE(out);
  return guarded([&] {
    const qnetinterf::source::ThermalSource src{epsilon, {g_re, g_im}};
    src.validate();
    const auto layout = qnetinterf::codec::MemoryLayout::from_bins(bins);
    auto sim = std::make_unique<qni_simulator>(qni_simulator{src, layout, std::nullopt, qnetinterf::Rng(seed)});
    if (budget != nullptr) {
      sim->injector.emplace(to_budget(*budget), layout.qubits_per_site);
    }
    *out = sim.release();
  });
}

qni_status qni_simulator_run_block(qni_simulator* sim, double delta, qni_block_result* out) {
  QNI_REQUIRE(sim);
  QNI_REQUIRE(out);
  return guarded([&] {
    const auto r = qnetinterf::codec::run_block(sim->source, sim->layout, delta, sim->rng,
                                                sim->injector ? &*sim->injector : nullptr);
    out->kind = static_cast<qni_block_kind>(r.kind);
    out->raw_plus = r.outcome == qnetinterf::qsim::XOutcome::Plus ? 1 : 0;
    out->corrected_plus = r.corrected() == qnetinterf::qsim::XOutcome::Plus ? 1 : 0;
    out->arrival_bin = r.arrival_bin;
    out->sign_flips = r.sign_flips;
    out->depolarized = r.depolarized ? 1 : 0;
  });
}

void qni_simulator_free(qni_simulator* sim) { delete sim; }

}  // extern "C"
