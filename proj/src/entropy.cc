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

#include "qnetinterf/entropy.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qnetinterf::entropy {

namespace {

constexpr double kNegativeTolerance = 1e-14;

void check_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("first-order spectra need epsilon in [0, 1)");
  }
}

double clamp_small(double x) { return (x < 0.0 && x >= -kNegativeTolerance) ? 0.0 : x; }

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

void SpectralState::validate() const {
  if (!labels.empty() && labels.size() != eigenvalues.size()) {
    throw std::invalid_argument("one label per eigenvalue");
  }
  for (double v : eigenvalues) {
    if (!(v >= -kNegativeTolerance)) {
      throw std::invalid_argument("negative eigenvalue in spectrum");
    }
  }
  const double total = std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("spectrum does not sum to 1");
  }
}

SpectralState joint_spectrum(double epsilon, std::complex<double> g) {
  check_epsilon(epsilon);
  const double mag = std::abs(g);
  if (!(mag <= 1.0 + 1e-12)) {
    throw std::invalid_argument("visibility magnitude |g| must not exceed 1");
  }
  const double m = std::min(mag, 1.0);
  SpectralState s{{1.0 - epsilon, clamp_small(epsilon * (1.0 + m) / 2.0), clamp_small(epsilon * (1.0 - m) / 2.0)},
                  {"vacuum", "psi+", "psi-"}};
  s.validate();
  return s;
}

SpectralState reduced_spectrum(double epsilon) {
  check_epsilon(epsilon);
  SpectralState s{{1.0 - epsilon / 2.0, epsilon / 2.0}, {"empty", "photon"}};
  s.validate();
  return s;
}

double von_neumann_entropy(const SpectralState& s) {
  double h = 0.0;
  for (double v : s.eigenvalues) {
    h -= xlog2x(v);
  }
  return h < 0.0 ? 0.0 : h;
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("binary entropy argument must lie in [0, 1]");
  }
  return -xlog2x(x) - xlog2x(1.0 - x);
}

double conditional_entropy(double epsilon, std::complex<double> g) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("conditional entropy needs epsilon > 0");
  }
  return von_neumann_entropy(joint_spectrum(epsilon, g)) - von_neumann_entropy(reduced_spectrum(epsilon));
}

double min_ebits_per_photon(double epsilon) { return conditional_entropy(epsilon, {1.0, 0.0}) / epsilon; }

double min_ebits_asymptote(double epsilon) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("asymptote needs epsilon > 0");
  }
  return 0.5 * std::log2(1.0 / epsilon);
}

}  // namespace qnetinterf::entropy
