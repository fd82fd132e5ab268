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

#ifndef QNETINTERF_QNETINTERF_H_
#define QNETINTERF_QNETINTERF_H_

/* C interface to the qnetinterf library.
 *
 * Objects are opaque handles created and destroyed through this API. Every
 * fallible call returns a qni_status; on failure a message for the calling
 * thread is available from qni_last_error() until the next failing call.
 * Strings returned through char** are owned by the caller and must be
 * released with qni_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(QNI_BUILDING_LIBRARY)
#define QNI_API __declspec(dllexport)
#else
#define QNI_API __declspec(dllimport)
#endif
#else
#define QNI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qni_status {
  QNI_OK = 0,
  QNI_ERR_INVALID_ARGUMENT = 1,
  QNI_ERR_CONFIG = 2,
  QNI_ERR_NUMERICAL = 3,
  QNI_ERR_OUT_OF_RANGE = 4,
  QNI_ERR_INTERNAL = 5
} qni_status;

typedef struct qni_config qni_config;
typedef struct qni_table qni_table;
typedef struct qni_simulator qni_simulator;

/* Transfer success probability and operation fidelities. */
typedef struct qni_budget {
  double p_t;
  double f_t;
  double f_1;
  double f_2;
  double f_e;
} qni_budget;

typedef struct qni_plan {
  double bins;
  double pairs_per_block;
  double fisher_bound;
  double blocks_needed;
  double total_pairs;
  double expected_pairs;
  int qubits_per_site;
} qni_plan;

typedef enum qni_block_kind { QNI_BLOCK_VACUUM = 0, QNI_BLOCK_SAMPLE = 1, QNI_BLOCK_MULTI = 2 } qni_block_kind;

typedef struct qni_block_result {
  qni_block_kind kind;
  int raw_plus;       /* 1 if the readout qubit gave +, before sign correction */
  int corrected_plus; /* 1 if + after undoing the recorded sign */
  uint64_t arrival_bin;
  int sign_flips;
  int depolarized;
} qni_block_result;

QNI_API const char* qni_version(void);
QNI_API const char* qni_last_error(void);
QNI_API const char* qni_status_name(qni_status status);

/* Configuration. */
QNI_API qni_status qni_config_create(qni_config** out);
QNI_API qni_status qni_config_parse(const char* text, qni_config** out);
QNI_API qni_status qni_config_load_file(const char* path, qni_config** out);
QNI_API qni_status qni_config_set(qni_config* config, const char* key, const char* value);
QNI_API qni_status qni_config_validate(const qni_config* config, const char* command);
QNI_API void qni_config_free(qni_config* config);

/* Runs a subcommand (simulate, fisher-curve, optimize, entropy, resources). */
QNI_API qni_status qni_run_command(const qni_config* config, const char* command, int threads, qni_table** out);

/* Result tables. */
QNI_API qni_status qni_table_num_rows(const qni_table* table, size_t* out);
QNI_API qni_status qni_table_num_columns(const qni_table* table, size_t* out);
QNI_API qni_status qni_table_column_name(const qni_table* table, size_t column, const char** out);
QNI_API qni_status qni_table_value(const qni_table* table, size_t row, size_t column, double* out);
QNI_API qni_status qni_table_to_csv(const qni_table* table, char** out);
QNI_API qni_status qni_table_to_json(const qni_table* table, char** out);
QNI_API void qni_table_free(qni_table* table);
QNI_API void qni_string_free(char* s);

/* Analytic quantities. */
QNI_API void qni_budget_ideal(qni_budget* out);
QNI_API qni_status qni_budget_from_nu(double nu, qni_budget* out);
QNI_API qni_status qni_block_statistics(double epsilon, uint64_t bins, double* p_vacuum, double* p_single,
                                        double* p_multi);
QNI_API qni_status qni_ideal_readout_state(double epsilon, double bins, double* p, double* c);
QNI_API qni_status qni_apply_budget(double p, double c, const qni_budget* budget, uint64_t bins, double* p_out,
                                    double* c_out);
QNI_API qni_status qni_fisher_lower_bound(double epsilon, double bins, const qni_budget* budget, double* out);
QNI_API qni_status qni_optimize_block(double epsilon, const qni_budget* budget, double max_bins, qni_plan* out);
QNI_API qni_status qni_conditional_entropy(double epsilon, double g_re, double g_im, double* out);
QNI_API qni_status qni_min_ebits_per_photon(double epsilon, double* out);

/* Block simulator. `budget` may be NULL for an ideal run. */
QNI_API qni_status qni_simulator_create(double epsilon, double g_re, double g_im, uint64_t bins,
                                        const qni_budget* budget, uint64_t seed, qni_simulator** out);
QNI_API qni_status qni_simulator_run_block(qni_simulator* sim, double delta, qni_block_result* out);
QNI_API void qni_simulator_free(qni_simulator* sim);

#ifdef __cplusplus
}
#endif

#endif /* QNETINTERF_QNETINTERF_H_ */
