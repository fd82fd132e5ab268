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

#ifndef QNETINTERF_FISHER_H_
#define QNETINTERF_FISHER_H_

#include <complex>
#include <cstdint>
#include <span>
#include <utility>

#include "qnetinterf/codec.h"
#include "qnetinterf/noise.h"
#include "qnetinterf/source.h"

/// Classical Fisher information of the post-selected readout with respect to
/// the two visibility quadratures (g1, g2) = (Re g, Im g).
namespace qnetinterf::fisher {

/// Real symmetric 2x2 matrix over (g1, g2).
struct FisherMatrix {
  double g1g1 = 0.0;
  double g1g2 = 0.0;
  double g2g2 = 0.0;

  /// Trace norm; equal to the trace because the matrix is positive semidefinite.
  double trace_norm() const { return g1g1 + g2g2; }
  double determinant() const { return g1g1 * g2g2 - g1g2 * g1g2; }
  /// Diagonal entry i of the inverse; infinite for a singular matrix.
  double inverse_diagonal(int i) const;
  /// Numerical rank with a relative tolerance on the eigenvalues.
  int rank(double rel_tol = 1e-10) const;

  FisherMatrix& operator+=(const FisherMatrix& o);
  friend FisherMatrix operator+(FisherMatrix a, const FisherMatrix& b) { return a += b; }
  friend FisherMatrix operator*(double s, FisherMatrix a) {
    a.g1g1 *= s;
    a.g1g2 *= s;
    a.g2g2 *= s;
    return a;
  }
};

/// (P0, P1) = p (1 +- c Re(g e^{-i delta}))/2. The pair sums to p.
std::pair<double, double> outcome_probabilities(const noise::ReadoutState& rs, std::complex<double> g, double delta);

/// p / (1/c^2 - r^2) [[cos^2, cos sin], [cos sin, sin^2]] with r = Re(g e^{-i delta}).
/// Returns the zero matrix when c = 0.
FisherMatrix analytic_fisher(const noise::ReadoutState& rs, std::complex<double> g, double delta);

/// Closed-form lower bound on the trace norm of one block's Fisher matrix:
/// (M e)^2 / ([(1+e)^M - 1] (1+e)^{M+2}) mu^2 nu^{log2(M+1)}.
/// `bins` may be any real M >= 1.
double fisher_lower_bound(double epsilon, double bins, const noise::ErrorBudget& budget);

struct BenchmarkBounds {
  double nonlocal = 0.0;  // M e
  double local = 0.0;     // M e^2
};

BenchmarkBounds benchmark_bounds(double epsilon, double bins);

struct EmpiricalFisherOptions {
  std::uint64_t trials = 1000000;  // blocks, split evenly over the delta settings
  std::uint64_t seed = 1;
  int threads = 1;
};

inline constexpr std::uint64_t kMinEmpiricalTrials = 10000;

/// Monte-Carlo Fisher matrix summed over `deltas`, one block per trial.
///
/// Each trial is simulated at the target visibility and at the anchors g = 0,
/// 1 and i with the same random stream. The outcome probabilities are affine
/// in g, so anchor differences give the derivatives, and the common stream
/// cancels most of their sampling noise. Throws std::invalid_argument for
/// fewer than kMinEmpiricalTrials trials or fewer than two delta settings.
/// Results depend on (inputs, seed) only, not on the thread count.
FisherMatrix empirical_fisher(const source::ThermalSource& src, const codec::MemoryLayout& layout,
                              const noise::ErrorBudget& budget, std::span<const double> deltas,
                              const EmpiricalFisherOptions& options);

}  // namespace qnetinterf::fisher

#endif  // QNETINTERF_FISHER_H_
