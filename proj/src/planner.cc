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

#include <algorithm>
#include <cmath>
#include <limits>

#include "qnetinterf/fisher.h"
#include "qnetinterf/parallel.h"

namespace qnetinterf::planner {

namespace {

constexpr double kDenseScanLimit = 256.0;
constexpr double kGridPointsPerDecade = 64.0;
// The bound decays like x^2 e^{-2x} in x = M e; nothing past this is useful.
constexpr double kMaxOccupation = 64.0;

struct Sample {
  double bins;
  double cost;
};

double cost_at(const PlanQuery& q, double bins) { return pairs_per_unit_fisher(q.epsilon, bins, q.budget); }

// Integer minimizer of a unimodal cost on [lo, hi]; ties go to the smaller M.
Sample refine(const PlanQuery& q, double lo, double hi) {
  while (hi - lo > 4.0) {
    const double m1 = std::floor(lo + (hi - lo) / 3.0);
    const double m2 = std::ceil(hi - (hi - lo) / 3.0);
    if (cost_at(q, m1) <= cost_at(q, m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  Sample best{lo, cost_at(q, lo)};
  for (double m = lo + 1.0; m <= hi; m += 1.0) {
    const double c = cost_at(q, m);
    if (c < best.cost) {
      best = {m, c};
    }
  }
  return best;
}

// All local minima of the cost over [1, M_max], in increasing M.
std::vector<Sample> local_minima(const PlanQuery& q) {
  const double upper = std::min(q.max_bins, std::max(kDenseScanLimit, std::ceil(kMaxOccupation / q.epsilon)));
  std::vector<Sample> grid;
  for (double m = 1.0; m <= std::min(upper, kDenseScanLimit); m += 1.0) {
    grid.push_back({m, cost_at(q, m)});
  }
  if (upper > kDenseScanLimit) {
    const double step = std::pow(10.0, 1.0 / kGridPointsPerDecade);
    for (double x = kDenseScanLimit * step;; x *= step) {
      const double m = std::min(upper, std::round(x));
      if (m > grid.back().bins) {
        grid.push_back({m, cost_at(q, m)});
      }
      if (m >= upper) {
        break;
      }
    }
  }

  std::vector<Sample> minima;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const bool left_ok = i == 0 || grid[i].cost < grid[i - 1].cost;
    const bool right_ok = i + 1 == grid.size() || grid[i].cost <= grid[i + 1].cost;
    if (!left_ok || !right_ok || !std::isfinite(grid[i].cost)) {
      continue;
    }
    const double lo = i > 0 ? grid[i - 1].bins : grid[i].bins;
    const double hi = i + 1 < grid.size() ? grid[i + 1].bins : grid[i].bins;
    minima.push_back(hi - lo <= 2.0 ? grid[i] : refine(q, lo, hi));
  }
  if (minima.empty()) {
    throw NoFeasiblePlan("no block length gives a positive Fisher bound (nu or mu is zero)");
  }
  return minima;
}

}  // namespace

void PlanQuery::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be a finite positive number");
  }
  if (!(max_bins >= 1.0) || max_bins != std::floor(max_bins)) {
    throw std::invalid_argument("M_max must be an integer >= 1");
  }
  budget.validate();
}

double pairs_per_unit_fisher(double epsilon, double bins, const noise::ErrorBudget& budget) {
  const double f = fisher::fisher_lower_bound(epsilon, bins, budget);
  if (!(f > 0.0)) {
    return std::numeric_limits<double>::infinity();
  }
  return std::log2(bins + 1.0) / f;
}

PlanResult evaluate_plan(double epsilon, double bins, const noise::ErrorBudget& budget) {
  PlanResult r;
  r.bins = bins;
  r.pairs_per_block = std::log2(bins + 1.0);
  r.fisher_bound = fisher::fisher_lower_bound(epsilon, bins, budget);
  if (!(r.fisher_bound > 0.0)) {
    throw NoFeasiblePlan("Fisher bound vanishes at M = " + std::to_string(bins));
  }
  r.blocks_needed = std::ceil(1.0 / r.fisher_bound);
  r.total_pairs = r.blocks_needed * r.pairs_per_block;
  r.expected_pairs = r.pairs_per_block / r.fisher_bound;
  r.qubits_per_site = static_cast<int>(std::ceil(r.pairs_per_block));
  return r;
}

PlanResult optimize_block(const PlanQuery& query) {
  query.validate();
  const std::vector<Sample> minima = local_minima(query);
  Sample best = minima.front();
  for (const Sample& s : minima) {
    if (s.cost < best.cost) {
      best = s;
    }
  }
  return evaluate_plan(query.epsilon, best.bins, query.budget);
}

PlanResult encoded_block_length(const PlanQuery& query) {
  query.validate();
  return evaluate_plan(query.epsilon, local_minima(query).back().bins, query.budget);
}

std::vector<CurveRow> pairs_curve(std::span<const double> epsilons, std::span<const double> nus, int threads) {
  for (double e : epsilons) {
    if (!(e > 0.0 && e <= 0.1)) {
      throw std::invalid_argument("curve epsilons must lie in (0, 0.1]");
    }
  }
  std::vector<CurveRow> rows(epsilons.size() * nus.size());
  parallel_for_chunks(rows.size(), threads, [&](std::uint64_t i) {
    const double nu = nus[i / epsilons.size()];
    const double e = epsilons[i % epsilons.size()];
    PlanQuery q;
    q.epsilon = e;
    q.budget = noise::ErrorBudget::from_nu(nu);
    rows[i] = {e, nu, optimize_block(q)};
  });
  return rows;
}

void ObservatorySpec::validate() const {
  if (!(bandwidth_hz > 0.0) || !(area_m2 > 0.0) || !(wavelength_m > 0.0) || !(baseline_m > 0.0) ||
      !std::isfinite(magnitude)) {
    throw std::invalid_argument("observatory bandwidth, area, wavelength and baseline must be positive");
  }
}

double epsilon_from_magnitude(const ObservatorySpec& spec) {
  spec.validate();
  if (spec.wavelength_m < 500e-9 || spec.wavelength_m > 600e-9) {
    throw std::invalid_argument("only the V band (500 to 600 nm) is calibrated");
  }
  return kAnchorEpsilon * std::pow(10.0, -0.4 * (spec.magnitude - kAnchorMagnitude)) * (spec.area_m2 / kAnchorArea);
}

ResourceReport resource_report(const ObservatorySpec& spec, const noise::ErrorBudget& budget) {
  ResourceReport r;
  r.epsilon = epsilon_from_magnitude(spec);
  const double bits = std::log2(1.0 / r.epsilon);
  r.qubits_per_site = static_cast<int>(std::ceil(bits));
  r.entanglement_rate_hz = spec.bandwidth_hz * r.epsilon * bits;
  r.angular_resolution_rad = spec.wavelength_m / spec.baseline_m;
  r.memoryless_improvement = (1.0 / r.epsilon) / bits;
  PlanQuery q;
  q.epsilon = r.epsilon;
  q.budget = budget;
  r.plan = optimize_block(q);
  return r;
}

}  // namespace qnetinterf::planner
