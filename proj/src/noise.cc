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

#include "qnetinterf/noise.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qnetinterf::noise {

namespace {

void check_fidelity(double f, const char* name) {
  if (!(f >= 0.5 && f <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0.5, 1]");
  }
}

}  // namespace

ErrorBudget ErrorBudget::from_nu(double nu_target) {
  if (!(nu_target > 0.0 && nu_target <= 1.0)) {
    throw std::invalid_argument("nu must lie in (0, 1]");
  }
  ErrorBudget b;
  const double contrast = std::pow(nu_target, 1.0 / 8.0);
  b.f_1 = (1.0 + contrast) / 2.0;
  b.f_2 = b.f_1;
  return b;
}

void ErrorBudget::validate() const {
  if (!(p_t >= 0.0 && p_t <= 1.0)) {
    throw std::invalid_argument("p_t must lie in [0, 1]");
  }
  check_fidelity(f_t, "f_t");
  check_fidelity(f_1, "f_1");
  check_fidelity(f_2, "f_2");
  check_fidelity(f_e, "f_e");
}

double mu(const ErrorBudget& b) {
  const double t = 2.0 * b.f_t - 1.0;
  const double m = 2.0 * b.f_1 - 1.0;
  return b.p_t * t * t * m * m;
}

double nu(const ErrorBudget& b) {
  const double m = 2.0 * b.f_1 - 1.0;
  const double g = 2.0 * b.f_2 - 1.0;
  return std::pow(m, 4) * std::pow(g, 4) * (2.0 * b.f_e - 1.0);
}

ReadoutState ideal_readout_state(double epsilon, double bins) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (!(bins >= 1.0)) {
    throw std::invalid_argument("block length must be at least 1");
  }
  // x = log (1+e)^M; p = 1 - e^{-x} and c = M e / ((e^x - 1)(1 + e)), both
  // evaluated without cancellation or overflow.
  const double x = bins * std::log1p(epsilon);
  const double log_grown = x > 30.0 ? x + std::log1p(-std::exp(-x)) : std::log(std::expm1(x));
  return {-std::expm1(-x), std::exp(std::log(bins * epsilon) - log_grown - std::log1p(epsilon))};
}

ReadoutState apply_budget_continuous(const ReadoutState& rs, const ErrorBudget& b, double bins) {
  b.validate();
  if (!(bins >= 1.0)) {
    throw std::invalid_argument("block length must be at least 1");
  }
  const double k = std::log2(bins + 1.0);
  const double t = 2.0 * b.f_t - 1.0;
  const double m = 2.0 * b.f_1 - 1.0;
  const double g = 2.0 * b.f_2 - 1.0;
  const double e = 2.0 * b.f_e - 1.0;
  const double c_factor = t * t * std::pow(m, 2.0 * (1.0 + k)) * std::pow(g, 2.0 * k) * std::pow(e, k / 2.0);
  return {rs.p * b.p_t * b.p_t, rs.c * c_factor};
}

ReadoutState apply_budget(const ReadoutState& rs, const ErrorBudget& b, std::uint64_t bins) {
  if (bins < 1 || !std::has_single_bit(bins + 1)) {
    throw std::invalid_argument("M + 1 must be a power of two, got M = " + std::to_string(bins));
  }
  return apply_budget_continuous(rs, b, static_cast<double>(bins));
}

qsim::Mixture depolarize_mixture(const qsim::Mixture& state, double p_ideal) {
  if (!(p_ideal >= 0.0 && p_ideal <= 1.0)) {
    throw std::invalid_argument("p_ideal must lie in [0, 1]");
  }
  qsim::Mixture out = state;
  const double trace = state.trace();
  for (auto& b : out.branches) {
    b.weight *= p_ideal;
  }
  out.depolarized_weight = p_ideal * state.depolarized_weight + (1.0 - p_ideal) * trace;
  return out;
}

double fidelity(const qsim::PureState& reference, const qsim::Mixture& rho) {
  double f = rho.depolarized_weight / std::ldexp(1.0, static_cast<int>(rho.layout.size()));
  for (const auto& b : rho.branches) {
    f += b.weight * qsim::fidelity(reference, b.state);
  }
  return f;
}

OperationTally tally_for(int qubits_per_site) {
  if (qubits_per_site < 1) {
    throw std::invalid_argument("need at least one qubit per site");
  }
  const int k = qubits_per_site;
  return {2, 2 * (1 + k), 2 * k, k};
}

DepolarizingInjector::DepolarizingInjector(const ErrorBudget& budget, int qubits_per_site)
    : budget_(budget), tally_(tally_for(qubits_per_site)) {
  budget_.validate();
}

DepolarizingInjector::Draw DepolarizingInjector::draw(Rng& rng) const {
  Draw d;
  for (int i = 0; i < tally_.transfers; ++i) {
    d.transferred &= uniform01(rng) < budget_.p_t;
  }
  auto sites = [&](int count, double keep) {
    for (int i = 0; i < count; ++i) {
      d.coherent &= uniform01(rng) < keep;
    }
  };
  sites(tally_.transfers, 2.0 * budget_.f_t - 1.0);
  sites(tally_.one_qubit_measurements, 2.0 * budget_.f_1 - 1.0);
  sites(tally_.two_qubit_gates, 2.0 * budget_.f_2 - 1.0);
  sites(tally_.entangled_pairs, std::sqrt(2.0 * budget_.f_e - 1.0));
  return d;
}

double DepolarizingInjector::coherent_probability() const {
  return std::pow(2.0 * budget_.f_t - 1.0, tally_.transfers) *
         std::pow(2.0 * budget_.f_1 - 1.0, tally_.one_qubit_measurements) *
         std::pow(2.0 * budget_.f_2 - 1.0, tally_.two_qubit_gates) *
         std::pow(2.0 * budget_.f_e - 1.0, tally_.entangled_pairs / 2.0);
}

double DepolarizingInjector::transfer_probability() const {
  return std::pow(budget_.p_t, tally_.transfers);
}

int DepolarizingInjector::draws_per_block() const {
  return 2 * tally_.transfers + tally_.one_qubit_measurements + tally_.two_qubit_gates + tally_.entangled_pairs;
}

}  // namespace qnetinterf::noise
