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

#ifndef QNETINTERF_ENTROPY_H_
#define QNETINTERF_ENTROPY_H_

#include <complex>
#include <string>
#include <vector>

/// Von Neumann entropies of the first-order single-bin state shared by the
/// two sites, and the state-merging bound on entanglement per photon.
/// All logarithms are base 2.
namespace qnetinterf::entropy {

struct SpectralState {
  std::vector<double> eigenvalues;  // non-negative, summing to 1
  std::vector<std::string> labels;

  /// Throws std::invalid_argument unless the eigenvalues are >= -1e-14 and
  /// sum to 1 within 1e-12. Tiny negatives are clamped to 0 by the builders.
  void validate() const;
};

/// {1 - e, e(1+|g|)/2, e(1-|g|)/2}: vacuum, psi+ and psi-.
/// Throws for e outside [0, 1) or |g| > 1.
SpectralState joint_spectrum(double epsilon, std::complex<double> g);

/// {1 - e/2, e/2} for site B alone; independent of g. Requires e in [0, 1).
SpectralState reduced_spectrum(double epsilon);

/// -sum lambda log2 lambda with 0 log 0 = 0.
double von_neumann_entropy(const SpectralState& s);

/// H2(x) = -x log2 x - (1-x) log2(1-x).
double binary_entropy(double x);

/// S(AB) - S(B) in bits. Requires 0 < e < 1 and |g| <= 1.
double conditional_entropy(double epsilon, std::complex<double> g);

/// S(A|B) / e at |g| = 1: ebits needed per detected photon.
double min_ebits_per_photon(double epsilon);

/// (1/2) log2(1/e), the weak-source limit of min_ebits_per_photon.
double min_ebits_asymptote(double epsilon);

}  // namespace qnetinterf::entropy

#endif  // QNETINTERF_ENTROPY_H_
