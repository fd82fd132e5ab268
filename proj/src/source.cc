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

#include "qnetinterf/source.h"

#include <cmath>
#include <stdexcept>

namespace qnetinterf::source {

using qsim::Mixture;
using qsim::PureState;
using qsim::QubitId;
using qsim::Site;

ThermalSource ThermalSource::from_polar(double epsilon, double magnitude, double phase) {
  return {epsilon, std::polar(magnitude, phase)};
}

void ThermalSource::validate() const {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be a finite non-negative number");
  }
  if (!(std::abs(g) <= 1.0 + 1e-12)) {
    throw std::invalid_argument("visibility magnitude |g| must not exceed 1");
  }
}

QubitId photon_qubit(Site site) { return {site, qsim::Role::Photon, 0}; }

PureState psi_state(bool plus, double theta) {
  const double r = 1.0 / std::sqrt(2.0);
  const std::complex<double> rel = std::polar(plus ? r : -r, theta);
  // Bit 0 is site A, bit 1 is site B.
  return PureState::from_terms({photon_qubit(Site::A), photon_qubit(Site::B)},
                               {{0b10, {r, 0.0}}, {0b01, rel}});
}

Mixture single_bin_state(const ThermalSource& src, Expansion mode) {
  src.validate();
  const double mag = std::min(1.0, src.visibility());
  Mixture m;
  m.layout = {photon_qubit(Site::A), photon_qubit(Site::B)};
  const PureState vac = PureState::basis_state(m.layout, 0);

  if (mode == Expansion::FirstOrder) {
    if (src.epsilon > 1.0) {
      throw std::invalid_argument("first-order expansion needs epsilon <= 1");
    }
    m.branches.push_back({1.0 - src.epsilon, vac});
    m.branches.push_back({src.epsilon * (1.0 + mag) / 2.0, psi_state(true, src.theta())});
    m.branches.push_back({src.epsilon * (1.0 - mag) / 2.0, psi_state(false, src.theta())});
    return m;
  }

  // Exact mode: the single-photon block has populations (1 + eps(1-|g|^2)/2)/2
  // on each site and coherence g/2, both scaled by eps/D^2. Its psi+/- split
  // uses the effective coherence g / (1 + eps(1-|g|^2)/2).
  const FockWeights w = fock_coefficients_exact(src);
  const double a = (1.0 - mag * mag) / 4.0;
  const double g_eff = mag / (1.0 + 2.0 * src.epsilon * a);
  m.branches.push_back({w.vacuum, vac});
  m.branches.push_back({w.single * (1.0 + g_eff) / 2.0, psi_state(true, src.theta())});
  m.branches.push_back({w.single * (1.0 - g_eff) / 2.0, psi_state(false, src.theta())});
  return m;
}

FockWeights fock_coefficients(const ThermalSource& src) {
  src.validate();
  if (std::abs(src.visibility() - 1.0) > 1e-12) {
    throw std::invalid_argument("closed-form Fock weights require |g| = 1");
  }
  const double e = src.epsilon;
  const double d = 1.0 + e;
  return {1.0 / d, e / (d * d), e * e / (d * d)};
}

FockWeights fock_coefficients_exact(const ThermalSource& src) {
  src.validate();
  const double e = src.epsilon;
  const double mag = std::min(1.0, src.visibility());
  const double a = (1.0 - mag * mag) / 4.0;
  const double d = 1.0 + e + e * e * a;
  const double d2 = d * d;
  return {1.0 / d, e * (1.0 + e * (1.0 - mag * mag) / 2.0) / d2,
          e * e * (1.0 + (2.0 * e - 1.0) * a + e * e * a * a) / d2};
}

BlockStatistics block_statistics(double epsilon, std::uint64_t bins) {
  if (bins < 1) {
    throw std::invalid_argument("block needs at least one bin");
  }
  if (!(epsilon >= 0.0)) {
    throw std::invalid_argument("epsilon must be non-negative");
  }
  const double m = static_cast<double>(bins);
  const double log1pe = std::log1p(epsilon);
  const double p_vac = std::exp(-m * log1pe);
  const double p_single = m * epsilon * std::exp(-(m + 1.0) * log1pe);
  const double p_nonvac = -std::expm1(-m * log1pe);
  return {p_vac, p_single, std::max(0.0, p_nonvac - p_single)};
}

BinEvent sample_bin(const ThermalSource& src, std::uint64_t bin_index, Rng& rng) {
  const double e = src.epsilon;
  const double d = 1.0 + e;
  const double w0 = 1.0 / d;
  const double w1 = e / (d * d);
  const double u_kind = uniform01(rng);
  const double u_sign = uniform01(rng);
  if (u_kind < w0) {
    return {BinKind::Vacuum, 0};
  }
  if (u_kind < w0 + w1) {
    const double plus = (1.0 + std::min(1.0, src.visibility())) / 2.0;
    return {u_sign < plus ? BinKind::PsiPlus : BinKind::PsiMinus, bin_index};
  }
  return {BinKind::Multi, bin_index};
}

std::vector<BinEvent> sample_block(const ThermalSource& src, std::uint64_t bins, Rng& rng) {
  src.validate();
  if (bins < 1) {
    throw std::invalid_argument("block needs at least one bin");
  }
  std::vector<BinEvent> events;
  events.reserve(bins);
  for (std::uint64_t m = 1; m <= bins; ++m) {
    events.push_back(sample_bin(src, m, rng));
  }
  return events;
}

}  // namespace qnetinterf::source
