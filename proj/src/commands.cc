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

#include "qnetinterf/commands.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "qnetinterf/codec.h"
#include "qnetinterf/entropy.h"
#include "qnetinterf/fisher.h"
#include "qnetinterf/parallel.h"
#include "qnetinterf/planner.h"

namespace qnetinterf::commands {

namespace {

struct BatchResult {
  double g1 = 0.0;
  double g2 = 0.0;
  std::uint64_t blocks = 0;
  std::vector<std::uint64_t> blocks_per_delta;
};

BatchResult run_batch(const source::ThermalSource& src, const codec::MemoryLayout& layout,
                      const noise::DepolarizingInjector& injector, const std::vector<double>& deltas, double c,
                      std::uint64_t target, std::uint64_t max_blocks, Rng& rng) {
  const std::size_t nd = deltas.size();
  BatchResult r;
  r.blocks_per_delta.assign(nd, 0);
  std::vector<std::uint64_t> total(nd, 0);
  std::vector<std::int64_t> signed_sum(nd, 0);
  std::uint64_t kept = 0;
  while (kept < target) {
    if (r.blocks >= max_blocks) {
      throw NumericalFailure("post-selection rate too low: " + std::to_string(kept) + " events in " +
                             std::to_string(r.blocks) + " blocks");
    }
    const std::size_t d = r.blocks % nd;
    const codec::BlockOutcome out = codec::run_block(src, layout, deltas[d], rng, &injector);
    ++r.blocks;
    ++r.blocks_per_delta[d];
    if (out.postselected()) {
      ++kept;
      ++total[d];
      signed_sum[d] += out.corrected() == qsim::XOutcome::Plus ? 1 : -1;
    }
  }
  // Weighted least squares of y_d = c (g1 cos d + g2 sin d).
  double a11 = 0.0, a12 = 0.0, a22 = 0.0, b1 = 0.0, b2 = 0.0;
  for (std::size_t d = 0; d < nd; ++d) {
    const double n = static_cast<double>(total[d]);
    const double cs = c * std::cos(deltas[d]);
    const double sn = c * std::sin(deltas[d]);
    a11 += n * cs * cs;
    a12 += n * cs * sn;
    a22 += n * sn * sn;
    b1 += cs * static_cast<double>(signed_sum[d]);
    b2 += sn * static_cast<double>(signed_sum[d]);
  }
  const double det = a11 * a22 - a12 * a12;
  if (!(std::abs(det) > 1e-12 * (a11 * a22 + 1e-300))) {
    throw NumericalFailure("delta grid does not determine both quadratures");
  }
  r.g1 = (a22 * b1 - a12 * b2) / det;
  r.g2 = (a11 * b2 - a12 * b1) / det;
  return r;
}

double sample_variance(const std::vector<double>& x) {
  double mean = 0.0;
  for (double v : x) {
    mean += v;
  }
  mean /= static_cast<double>(x.size());
  double ss = 0.0;
  for (double v : x) {
    ss += (v - mean) * (v - mean);
  }
  return ss / static_cast<double>(x.size() - 1);
}

}  // namespace

double CampaignResult::variance_rel_stderr() const {
  return batches > 1 ? std::sqrt(2.0 / static_cast<double>(batches - 1)) : 0.0;
}

CampaignResult cmd_simulate(const RunConfig& config, const RunOptions& options) {
  config.validate("simulate");
  const source::ThermalSource src = config.source();
  const codec::MemoryLayout layout = config.layout();
  const noise::ErrorBudget budget = config.effective_budget();
  const std::vector<double> deltas = config.deltas();
  const noise::ReadoutState rs =
      noise::apply_budget(noise::ideal_readout_state(src.epsilon, static_cast<double>(layout.bins)), budget, layout.bins);
  if (!(rs.p > 0.0) || !(rs.c > 0.0)) {
    throw NumericalFailure("readout carries no information (p = 0 or c = 0)");
  }
  const noise::DepolarizingInjector injector(budget, layout.qubits_per_site);

  const std::uint64_t nb = config.batches;
  std::vector<BatchResult> results(nb);
  parallel_for_chunks(nb, options.threads, [&](std::uint64_t b) {
    const std::uint64_t target = config.events / nb + (b < config.events % nb ? 1 : 0);
    const double expected = static_cast<double>(target) / rs.p;
    const auto max_blocks = static_cast<std::uint64_t>(std::min(9.0e15, 100.0 * expected + 1000.0));
    Rng rng = derive_stream(*config.seed, b);
    results[b] = run_batch(src, layout, injector, deltas, rs.c, target, max_blocks, rng);
  });

  CampaignResult out;
  out.batches = nb;
  out.events = config.events;
  out.calibrated_c = rs.c;
  std::vector<double> g1s, g2s;
  std::vector<std::uint64_t> per_delta(deltas.size(), 0);
  for (const BatchResult& r : results) {
    g1s.push_back(r.g1);
    g2s.push_back(r.g2);
    out.blocks += r.blocks;
    for (std::size_t d = 0; d < deltas.size(); ++d) {
      per_delta[d] += r.blocks_per_delta[d];
    }
  }
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < nb; ++i) {
    m1 += g1s[i];
    m2 += g2s[i];
  }
  out.g_hat = {m1 / static_cast<double>(nb), m2 / static_cast<double>(nb)};
  out.var_g1 = sample_variance(g1s) / static_cast<double>(nb);
  out.var_g2 = sample_variance(g2s) / static_cast<double>(nb);
  out.postselection_rate = static_cast<double>(out.events) / static_cast<double>(out.blocks);

  fisher::FisherMatrix total;
  for (std::size_t d = 0; d < deltas.size(); ++d) {
    total += static_cast<double>(per_delta[d]) * fisher::analytic_fisher(rs, src.g, deltas[d]);
  }
  out.fisher_trace_norm = total.trace_norm();
  out.crb_g1 = total.inverse_diagonal(0);
  out.crb_g2 = total.inverse_diagonal(1);
  if (!std::isfinite(out.crb_g1) || !std::isfinite(out.crb_g2)) {
    throw NumericalFailure("Fisher matrix is singular for this delta grid");
  }
  return out;
}

Table campaign_table(const CampaignResult& r) {
  Table t;
  t.name = "simulate";
  t.columns = {"g1_hat",         "g2_hat",   "var_g1",   "var_g2", "crb_g1",
               "crb_g2",         "ratio_g1", "ratio_g2", "ratio_rel_stderr",
               "fisher_trace_norm", "events", "blocks",  "batches", "postselection_rate", "calibrated_c"};
  t.add_row({r.g_hat.real(), r.g_hat.imag(), r.var_g1, r.var_g2, r.crb_g1, r.crb_g2, r.var_g1 / r.crb_g1,
             r.var_g2 / r.crb_g2, r.variance_rel_stderr(), r.fisher_trace_norm, static_cast<double>(r.events),
             static_cast<double>(r.blocks), static_cast<double>(r.batches), r.postselection_rate, r.calibrated_c});
  return t;
}

Table cmd_fisher_curve(const RunConfig& config) {
  config.validate("fisher-curve");
  const noise::ErrorBudget budget = config.effective_budget();
  Table t;
  t.name = "fisher-curve";
  t.columns = {"M", "p", "c", "p_c2", "fisher_bound", "nonlocal", "local", "pairs_per_block"};
  for (double m : config.bin_values()) {
    const noise::ReadoutState rs =
        noise::apply_budget_continuous(noise::ideal_readout_state(config.epsilon, m), budget, m);
    const fisher::BenchmarkBounds bb = fisher::benchmark_bounds(config.epsilon, m);
    t.add_row({m, rs.p, rs.c, rs.p * rs.c * rs.c, fisher::fisher_lower_bound(config.epsilon, m, budget), bb.nonlocal,
               bb.local, std::log2(m + 1.0)});
  }
  return t;
}

Table cmd_optimize(const RunConfig& config, const RunOptions& options) {
  config.validate("optimize");
  Table t;
  t.name = "optimize";
  t.columns = {"epsilon", "nu", "M_star", "pairs_per_block", "blocks_needed", "total_pairs"};
  const std::vector<double> eps = config.epsilons();
  const std::vector<double> nus = config.nus();
  std::vector<planner::CurveRow> rows;
  try {
    rows = planner::pairs_curve(eps, nus, options.threads);
  } catch (const planner::NoFeasiblePlan& e) {
    throw NumericalFailure(e.what());
  }
  for (const auto& r : rows) {
    t.add_row({r.epsilon, r.nu, r.plan.bins, r.plan.pairs_per_block, r.plan.blocks_needed, r.plan.total_pairs});
  }
  return t;
}

Table cmd_entropy(const RunConfig& config) {
  config.validate("entropy");
  const std::complex<double> g = std::polar(config.g_abs, config.g_phase_rad);
  Table t;
  t.name = "entropy";
  t.columns = {"epsilon",   "S_AB",       "S_B",            "S_A_given_B",
               "min_ebits", "asymptote", "protocol_pairs", "protocol_over_bound"};
  for (double e : config.epsilons()) {
    const double s_ab = entropy::von_neumann_entropy(entropy::joint_spectrum(e, g));
    const double s_b = entropy::von_neumann_entropy(entropy::reduced_spectrum(e));
    const double ebits = entropy::min_ebits_per_photon(e);
    const double pairs = std::log2(1.0 / e + 1.0);
    t.add_row({e, s_ab, s_b, s_ab - s_b, ebits, entropy::min_ebits_asymptote(e), pairs, pairs / ebits});
  }
  return t;
}

Table cmd_resources(const RunConfig& config) {
  config.validate("resources");
  planner::ResourceReport r;
  try {
    r = planner::resource_report(config.observatory, config.effective_budget());
  } catch (const planner::NoFeasiblePlan& e) {
    throw NumericalFailure(e.what());
  }
  constexpr double kRadToMas = 180.0 / std::numbers::pi * 3600.0 * 1000.0;
  Table t;
  t.name = "resources";
  t.columns = {"epsilon",          "qubits_per_site",        "entanglement_rate_hz", "angular_resolution_rad",
               "angular_resolution_mas", "memoryless_improvement", "M_star",        "total_pairs"};
  t.add_row({r.epsilon, static_cast<double>(r.qubits_per_site), r.entanglement_rate_hz, r.angular_resolution_rad,
             r.angular_resolution_rad * kRadToMas, r.memoryless_improvement, r.plan.bins, r.plan.total_pairs});
  return t;
}

Table run_command(const std::string& command, const RunConfig& config, const RunOptions& options) {
  if (command == "simulate") {
    return campaign_table(cmd_simulate(config, options));
  }
  if (command == "fisher-curve") {
    return cmd_fisher_curve(config);
  }
  if (command == "optimize") {
    return cmd_optimize(config, options);
  }
  if (command == "entropy") {
    return cmd_entropy(config);
  }
  if (command == "resources") {
    return cmd_resources(config);
  }
  throw ConfigError(0, "unknown command '" + command + "'");
}

}  // namespace qnetinterf::commands
