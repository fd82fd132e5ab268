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

#include <cmath>
#include <cstring>
#include <string>

#include "gtest/gtest.h"

namespace {

TEST(c_api, VersionAndStatusNames) {
  EXPECT_STREQ(qni_version(), "0.1.0");
  EXPECT_STREQ(qni_status_name(QNI_OK), "ok");
  EXPECT_STREQ(qni_status_name(QNI_ERR_CONFIG), "config error");
}

TEST(c_api, NullArgumentsAreRejected) {
  EXPECT_EQ(qni_config_create(nullptr), QNI_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(qni_last_error()).find("must not be null"), std::string::npos);
  EXPECT_EQ(qni_config_parse(nullptr, nullptr), QNI_ERR_INVALID_ARGUMENT);
  qni_config_free(nullptr);
  qni_table_free(nullptr);
  qni_simulator_free(nullptr);
  qni_string_free(nullptr);
}

TEST(c_api, ConfigErrorsMapToStatus) {
  qni_config* cfg = nullptr;
  EXPECT_EQ(qni_config_parse("epsilon = 0.1\nbogus = 1\n", &cfg), QNI_ERR_CONFIG);
  EXPECT_EQ(cfg, nullptr);
  EXPECT_NE(std::string(qni_last_error()).find("line 2"), std::string::npos);

  ASSERT_EQ(qni_config_create(&cfg), QNI_OK);
  EXPECT_EQ(qni_config_set(cfg, "M", "six"), QNI_ERR_CONFIG);
  EXPECT_EQ(qni_config_validate(cfg, "simulate"), QNI_ERR_CONFIG);  // no seed
  EXPECT_EQ(qni_config_set(cfg, "seed", "9"), QNI_OK);
  EXPECT_EQ(qni_config_validate(cfg, "simulate"), QNI_OK);
  EXPECT_EQ(qni_config_validate(cfg, "bogus"), QNI_ERR_CONFIG);
  qni_config_free(cfg);
}

TEST(c_api, RunCommandProducesTable) {
  qni_config* cfg = nullptr;
  ASSERT_EQ(qni_config_parse("epsilon_grid = 0.5, 1e-6\n", &cfg), QNI_OK);
  qni_table* table = nullptr;
  ASSERT_EQ(qni_run_command(cfg, "entropy", 1, &table), QNI_OK);
  size_t rows = 0;
  size_t cols = 0;
  ASSERT_EQ(qni_table_num_rows(table, &rows), QNI_OK);
  ASSERT_EQ(qni_table_num_columns(table, &cols), QNI_OK);
  EXPECT_EQ(rows, 2u);
  EXPECT_EQ(cols, 8u);
  const char* name = nullptr;
  ASSERT_EQ(qni_table_column_name(table, 1, &name), QNI_OK);
  EXPECT_STREQ(name, "S_AB");
  double v = 0.0;
  ASSERT_EQ(qni_table_value(table, 0, 1, &v), QNI_OK);
  EXPECT_NEAR(v, 1.0, 1e-12);
  EXPECT_EQ(qni_table_value(table, 5, 1, &v), QNI_ERR_OUT_OF_RANGE);
  EXPECT_EQ(qni_table_column_name(table, 99, &name), QNI_ERR_OUT_OF_RANGE);

  char* csv = nullptr;
  char* json = nullptr;
  ASSERT_EQ(qni_table_to_csv(table, &csv), QNI_OK);
  ASSERT_EQ(qni_table_to_json(table, &json), QNI_OK);
  EXPECT_EQ(std::strncmp(csv, "epsilon,S_AB", 12), 0);
  EXPECT_NE(std::string(json).find("\"S_A_given_B\""), std::string::npos);
  qni_string_free(csv);
  qni_string_free(json);
  qni_table_free(table);

  EXPECT_EQ(qni_run_command(cfg, "entropy", 0, &table), QNI_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(qni_run_command(cfg, "bogus", 1, &table), QNI_ERR_CONFIG);
  qni_config_free(cfg);
}

TEST(c_api, NumericalFailureStatus) {
  qni_config* cfg = nullptr;
  ASSERT_EQ(qni_config_parse("seed = 1\nf_1 = 0.5\nevents = 100\nbatches = 10\n", &cfg), QNI_OK);
  qni_table* table = nullptr;
  EXPECT_EQ(qni_run_command(cfg, "simulate", 1, &table), QNI_ERR_NUMERICAL);
  EXPECT_EQ(table, nullptr);
  qni_config_free(cfg);
}

TEST(c_api, AnalyticHelpers) {
  qni_budget ideal;
  qni_budget_ideal(&ideal);
  EXPECT_EQ(ideal.p_t, 1.0);
  double f = 0.0;
  ASSERT_EQ(qni_fisher_lower_bound(1e-3, 1000, &ideal, &f), QNI_OK);
  EXPECT_NEAR(f / 0.214, 1.0, 0.02);
  EXPECT_EQ(qni_fisher_lower_bound(0.0, 1000, &ideal, &f), QNI_ERR_INVALID_ARGUMENT);

  qni_budget b;
  ASSERT_EQ(qni_budget_from_nu(0.8, &b), QNI_OK);
  EXPECT_EQ(qni_budget_from_nu(2.0, &b), QNI_ERR_INVALID_ARGUMENT);

  double pv = 0, ps = 0, pm = 0;
  ASSERT_EQ(qni_block_statistics(0.05, 7, &pv, &ps, &pm), QNI_OK);
  EXPECT_NEAR(pv + ps + pm, 1.0, 1e-12);

  double p = 0, c = 0, p2 = 0, c2 = 0;
  ASSERT_EQ(qni_ideal_readout_state(0.05, 7, &p, &c), QNI_OK);
  EXPECT_NEAR(p * c, ps, 1e-14);
  ASSERT_EQ(qni_apply_budget(p, c, &ideal, 7, &p2, &c2), QNI_OK);
  EXPECT_DOUBLE_EQ(p2, p);
  EXPECT_EQ(qni_apply_budget(p, c, &ideal, 6, &p2, &c2), QNI_ERR_INVALID_ARGUMENT);

  qni_plan plan;
  ASSERT_EQ(qni_optimize_block(1e-4, &ideal, 1099511627775.0, &plan), QNI_OK);
  EXPECT_NEAR(plan.bins * 1e-4, 0.7, 0.2);
  qni_budget dead = ideal;
  dead.f_e = 0.5;
  EXPECT_EQ(qni_optimize_block(1e-4, &dead, 1099511627775.0, &plan), QNI_ERR_NUMERICAL);

  double s = 0.0;
  ASSERT_EQ(qni_conditional_entropy(0.5, 1.0, 0.0, &s), QNI_OK);
  EXPECT_NEAR(s, 0.1887, 1e-4);
  ASSERT_EQ(qni_min_ebits_per_photon(1e-6, &s), QNI_OK);
  EXPECT_NEAR(s / (0.5 * std::log2(1e6)), 1.0, 0.05);
}

TEST(c_api, SimulatorIsReproducible) {
  qni_simulator* a = nullptr;
  qni_simulator* b = nullptr;
  ASSERT_EQ(qni_simulator_create(0.1, 0.5, 0.5, 7, nullptr, 17, &a), QNI_OK);
  ASSERT_EQ(qni_simulator_create(0.1, 0.5, 0.5, 7, nullptr, 17, &b), QNI_OK);
  int samples = 0;
  for (int i = 0; i < 500; ++i) {
    qni_block_result ra;
    qni_block_result rb;
    ASSERT_EQ(qni_simulator_run_block(a, 0.3, &ra), QNI_OK);
    ASSERT_EQ(qni_simulator_run_block(b, 0.3, &rb), QNI_OK);
    EXPECT_EQ(ra.kind, rb.kind);
    EXPECT_EQ(ra.corrected_plus, rb.corrected_plus);
    EXPECT_EQ(ra.arrival_bin, rb.arrival_bin);
    if (ra.kind == QNI_BLOCK_SAMPLE) {
      ++samples;
      EXPECT_EQ(ra.corrected_plus, (ra.sign_flips % 2 == 0) ? ra.raw_plus : 1 - ra.raw_plus);
    }
  }
  EXPECT_GT(samples, 50);
  qni_simulator_free(a);
  qni_simulator_free(b);
}

TEST(c_api, SimulatorValidation) {
  qni_simulator* sim = nullptr;
  EXPECT_EQ(qni_simulator_create(0.1, 1.0, 0.0, 6, nullptr, 1, &sim), QNI_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(qni_simulator_create(0.1, 2.0, 0.0, 7, nullptr, 1, &sim), QNI_ERR_INVALID_ARGUMENT);
  qni_budget bad;
  qni_budget_ideal(&bad);
  bad.f_1 = 0.2;
  EXPECT_EQ(qni_simulator_create(0.1, 1.0, 0.0, 7, &bad, 1, &sim), QNI_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sim, nullptr);
}

}  // namespace
