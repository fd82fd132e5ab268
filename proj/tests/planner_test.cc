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

#include "qnetinterf/planner.h"

#include <cmath>

#include "gtest/gtest.h"
#include "qnetinterf/fisher.h"

namespace qnetinterf::planner {
namespace {

PlanQuery query(double eps, double nu) {
  PlanQuery q;
  q.epsilon = eps;
  q.budget = noise::ErrorBudget::from_nu(nu);
  return q;
}

// Brute-force integer minimizer of the cost, ties to the smaller M.
double brute_force_best(const PlanQuery& q, double upper) {
  double best_m = 1.0;
  double best = pairs_per_unit_fisher(q.epsilon, 1.0, q.budget);
  for (double m = 2.0; m <= upper; m += 1.0) {
    const double c = pairs_per_unit_fisher(q.epsilon, m, q.budget);
    if (c < best) {
      best = c;
      best_m = m;
    }
  }
  return best_m;
}

TEST(planner, OptimizerMatchesBruteForce) {
  for (double eps : {0.1, 0.02, 3e-3}) {
    for (double nu : {1.0, 0.9, 0.8, 0.6}) {
      const PlanQuery q = query(eps, nu);
      const double expected = brute_force_best(q, std::ceil(64.0 / eps));
      EXPECT_EQ(optimize_block(q).bins, expected) << "eps " << eps << " nu " << nu;
    }
  }
}

TEST(planner, IdealOptimumNearUnitOccupation) {
  for (double eps : {1e-3, 1e-5, 1e-7}) {
    const PlanResult r = optimize_block(query(eps, 1.0));
    EXPECT_NEAR(r.bins * eps, 0.7, 0.2);
  }
}

TEST(planner, PlanFieldsAreConsistent) {
  const PlanResult r = evaluate_plan(1e-3, 700, noise::ErrorBudget::ideal());
  EXPECT_DOUBLE_EQ(r.pairs_per_block, std::log2(701.0));
  EXPECT_DOUBLE_EQ(r.fisher_bound, fisher::fisher_lower_bound(1e-3, 700, noise::ErrorBudget::ideal()));
  EXPECT_DOUBLE_EQ(r.blocks_needed, std::ceil(1.0 / r.fisher_bound));
  EXPECT_DOUBLE_EQ(r.total_pairs, r.blocks_needed * r.pairs_per_block);
  EXPECT_DOUBLE_EQ(r.expected_pairs, r.pairs_per_block / r.fisher_bound);
  EXPECT_EQ(r.qubits_per_site, 10);
}

TEST(planner, TotalPairsNonIncreasingInNu) {
  for (double eps : {1e-2, 1e-4, 1e-6}) {
    double previous = 0.0;
    for (double nu : {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
      const double pairs = optimize_block(query(eps, nu)).expected_pairs;
      if (previous > 0.0) {
        EXPECT_LE(pairs, previous * (1.0 + 1e-12));
      }
      previous = pairs;
    }
  }
}

TEST(planner, LowNuPrefersSinglePairBlocks) {
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    EXPECT_EQ(optimize_block(query(eps, 0.6)).bins, 1.0);
  }
}

TEST(planner, EncodedBlockLengthIsLargestLocalMinimum) {
  const PlanQuery q = query(1e-6, 0.6);
  const PlanResult encoded = encoded_block_length(q);
  EXPECT_GT(encoded.bins, 1000.0);
  EXPECT_LE(optimize_block(q).expected_pairs, encoded.expected_pairs);
  const PlanQuery ideal = query(1e-4, 1.0);
  EXPECT_EQ(encoded_block_length(ideal).bins, optimize_block(ideal).bins);
}

TEST(planner, MaxBinsCapsSearch) {
  PlanQuery q = query(1e-6, 1.0);
  q.max_bins = 1000;
  EXPECT_LE(optimize_block(q).bins, 1000.0);
}

TEST(planner, NoFeasiblePlan) {
  PlanQuery q;
  q.epsilon = 1e-3;
  q.budget = noise::ErrorBudget{1, 1, 1, 1, 0.5};
  EXPECT_THROW(optimize_block(q), NoFeasiblePlan);
  EXPECT_THROW(evaluate_plan(1e-3, 3, q.budget), NoFeasiblePlan);
}

TEST(planner, QueryValidation) {
  EXPECT_THROW(optimize_block(query(0.0, 1.0)), std::invalid_argument);
  PlanQuery q = query(1e-3, 1.0);
  q.max_bins = 10.5;
  EXPECT_THROW(optimize_block(q), std::invalid_argument);
}

TEST(planner, PairsCurveShape) {
  const std::vector<double> eps = {1e-2, 1e-3};
  const std::vector<double> nus = {1.0, 0.8};
  const auto rows = pairs_curve(eps, nus, 2);
  ASSERT_EQ(rows.size(), 4u);
  for (const CurveRow& r : rows) {
    EXPECT_EQ(r.plan.bins, optimize_block(query(r.epsilon, r.nu)).bins);
  }
  const std::vector<double> bad = {0.5};
  EXPECT_THROW(pairs_curve(bad, nus), std::invalid_argument);
}

TEST(planner, MagnitudeAnchor) {
  ObservatorySpec spec;
  EXPECT_DOUBLE_EQ(epsilon_from_magnitude(spec), 7e-7);
  spec.magnitude = 12.5;
  EXPECT_NEAR(epsilon_from_magnitude(spec), 7e-8, 1e-20);
  spec.magnitude = 10.0;
  spec.area_m2 = 20.0;
  EXPECT_NEAR(epsilon_from_magnitude(spec), 1.4e-6, 1e-20);
}

TEST(planner, ObservatoryValidation) {
  ObservatorySpec spec;
  spec.wavelength_m = 700e-9;
  EXPECT_NO_THROW(spec.validate());
  EXPECT_THROW(epsilon_from_magnitude(spec), std::invalid_argument);
  spec.wavelength_m = 555e-9;
  spec.baseline_m = 0.0;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
}

TEST(planner, ResourceReportReference) {
  const ResourceReport r = resource_report(ObservatorySpec{}, noise::ErrorBudget::ideal());
  EXPECT_DOUBLE_EQ(r.epsilon, 7e-7);
  EXPECT_EQ(r.qubits_per_site, 21);
  EXPECT_GE(r.entanglement_rate_hz, 1e5);
  EXPECT_LE(r.entanglement_rate_hz, 3e5);
  EXPECT_NEAR(r.angular_resolution_rad, 1.68e-9, 0.01e-9);
  EXPECT_GT(r.memoryless_improvement, 5e4 / 2.0);
  EXPECT_LT(r.memoryless_improvement, 5e4 * 2.0);
  EXPECT_NEAR(r.plan.bins * r.epsilon, 0.7, 0.2);
}

TEST(planner, ResolutionScalesWithBaseline) {
  ObservatorySpec spec;
  spec.baseline_m = 10e3;
  const ResourceReport r = resource_report(spec, noise::ErrorBudget::ideal());
  const double micro_arcsec = r.angular_resolution_rad * 180.0 / M_PI * 3600.0 * 1e6;
  EXPECT_NEAR(micro_arcsec, 11.0, 0.5);
}

}  // namespace
}  // namespace qnetinterf::planner
