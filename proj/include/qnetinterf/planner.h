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

#ifndef QNETINTERF_PLANNER_H_
#define QNETINTERF_PLANNER_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qnetinterf/noise.h"

/// Block-length optimization and observatory arithmetic.
namespace qnetinterf::planner {

/// Raised when no block length gives a positive Fisher bound.
class NoFeasiblePlan : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kDefaultMaxBins = 1099511627775.0;  // 2^40 - 1

struct PlanQuery {
  double epsilon = 0.0;
  noise::ErrorBudget budget;
  double max_bins = kDefaultMaxBins;  // M_max; integer-valued

  void validate() const;
};

struct PlanResult {
  double bins = 1.0;               // M_star
  double pairs_per_block = 1.0;    // log2(M_star + 1)
  double fisher_bound = 0.0;       // per-block trace-norm bound at M_star
  double blocks_needed = 1.0;      // ceil(1 / fisher_bound)
  double total_pairs = 0.0;        // blocks_needed * pairs_per_block
  double expected_pairs = 0.0;     // pairs_per_block / fisher_bound
  int qubits_per_site = 1;         // ceil(log2(M_star + 1))
};

/// Expected Bell pairs per unit of Fisher information, log2(M+1) / F(M),
/// with F the closed-form bound at real-valued M. Infinite where F = 0.
double pairs_per_unit_fisher(double epsilon, double bins, const noise::ErrorBudget& budget);

/// Integer M in [1, M_max] minimizing pairs_per_unit_fisher; ties go to the
/// smaller M. Throws NoFeasiblePlan if the bound vanishes for every M.
PlanResult optimize_block(const PlanQuery& query);

/// The largest-M local minimum of pairs_per_unit_fisher: the encoded
/// operating point even when memoryless operation (M = 1) wins globally.
PlanResult encoded_block_length(const PlanQuery& query);

/// Evaluates every quantity of PlanResult at a fixed integer M.
PlanResult evaluate_plan(double epsilon, double bins, const noise::ErrorBudget& budget);

struct CurveRow {
  double epsilon = 0.0;
  double nu = 0.0;
  PlanResult plan;
};

/// optimize_block for every (epsilon, nu) cell with ErrorBudget::from_nu.
/// Rows are ordered by nu, then epsilon. Requires epsilons in (0, 0.1].
std::vector<CurveRow> pairs_curve(std::span<const double> epsilons, std::span<const double> nus, int threads = 1);

struct ObservatorySpec {
  double bandwidth_hz = 10e9;      // detector bandwidth delta_f
  double area_m2 = 10.0;           // total collection area
  double wavelength_m = 555e-9;    // band center
  double magnitude = 10.0;         // V-band apparent magnitude
  double baseline_m = 330.0;

  void validate() const;
};

/// Mean photon number per temporal mode at the calibration anchor
/// (magnitude 10, 10 m^2).
inline constexpr double kAnchorEpsilon = 7e-7;
inline constexpr double kAnchorMagnitude = 10.0;
inline constexpr double kAnchorArea = 10.0;

/// e = 7e-7 10^{-0.4 (mag - 10)} (area / 10 m^2). Photons per temporal mode do
/// not depend on the bandwidth. Throws std::invalid_argument for wavelengths
/// outside the V band [500, 600] nm.
double epsilon_from_magnitude(const ObservatorySpec& spec);

struct ResourceReport {
  double epsilon = 0.0;
  int qubits_per_site = 0;            // ceil(log2(1/e))
  double entanglement_rate_hz = 0.0;  // delta_f e log2(1/e)
  double angular_resolution_rad = 0.0;
  double memoryless_improvement = 0.0;  // (1/e) / log2(1/e)
  PlanResult plan;                      // optimize_block at this e and budget
};

ResourceReport resource_report(const ObservatorySpec& spec, const noise::ErrorBudget& budget);

}  // namespace qnetinterf::planner

#endif  // QNETINTERF_PLANNER_H_
