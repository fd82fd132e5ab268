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

#ifndef QNETINTERF_COMMANDS_H_
#define QNETINTERF_COMMANDS_H_

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "qnetinterf/config.h"
#include "qnetinterf/table.h"

/// The CLI subcommands as library calls. Each validates its configuration
/// completely before doing any work.
namespace qnetinterf::commands {

/// A run that cannot produce finite results (e.g. no post-selected events).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  int threads = 1;
};

struct CampaignResult {
  std::complex<double> g_hat;
  double var_g1 = 0.0;  // variance of the full-run estimate, from batch spread
  double var_g2 = 0.0;
  double crb_g1 = 0.0;  // (F^{-1})_11 with F summed over every simulated block
  double crb_g2 = 0.0;
  double fisher_trace_norm = 0.0;
  std::uint64_t events = 0;  // post-selected blocks used
  std::uint64_t blocks = 0;
  std::uint64_t batches = 0;
  double postselection_rate = 0.0;
  double calibrated_c = 0.0;

  /// Relative standard error of a batch variance estimate, sqrt(2/(B-1)).
  double variance_rel_stderr() const;
};

/// Runs `batches` independent batches of codec blocks, each until it holds
/// events / batches post-selected blocks, cycling the readout phase through
/// the delta grid block by block. Each batch fits (g1, g2) by least squares
/// to the sign-corrected plus fractions using the calibrated contrast c.
CampaignResult cmd_simulate(const RunConfig& config, const RunOptions& options = {});
Table campaign_table(const CampaignResult& result);

/// Columns M, p, c, p_c2, fisher_bound, nonlocal, local, pairs_per_block.
Table cmd_fisher_curve(const RunConfig& config);
/// Columns epsilon, nu, M_star, pairs_per_block, blocks_needed, total_pairs.
Table cmd_optimize(const RunConfig& config, const RunOptions& options = {});
Table cmd_entropy(const RunConfig& config);
Table cmd_resources(const RunConfig& config);

/// Dispatches on the subcommand name; throws ConfigError for unknown names.
Table run_command(const std::string& command, const RunConfig& config, const RunOptions& options = {});

}  // namespace qnetinterf::commands

#endif  // QNETINTERF_COMMANDS_H_
