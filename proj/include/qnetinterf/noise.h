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

#ifndef QNETINTERF_NOISE_H_
#define QNETINTERF_NOISE_H_

#include <cstdint>

#include "qnetinterf/qsim.h"
#include "qnetinterf/random.h"

/// Worst-case depolarizing error model for the readout qubit.
namespace qnetinterf::noise {

/// Success probability of the light-to-memory transfer and the fidelities of
/// transfer, one-qubit measurement, nontrivial two-qubit gate and shared pair.
struct ErrorBudget {
  double p_t = 1.0;
  double f_t = 1.0;
  double f_1 = 1.0;
  double f_2 = 1.0;
  double f_e = 1.0;

  static ErrorBudget ideal() { return {}; }

  /// Coding errors only: f_1 = f_2 with (2f - 1)^8 = nu, f_e = 1 and an
  /// ideal transfer (p_t = f_t = 1).
  static ErrorBudget from_nu(double nu);

  /// p_t in [0, 1]; every fidelity in [1/2, 1].
  void validate() const;
};

/// p_t (2f_t - 1)^2 (2f_1 - 1)^2: light-to-memory mapping at one site.
double mu(const ErrorBudget& b);
/// (2f_1 - 1)^4 (2f_2 - 1)^4 (2f_e - 1): coding and readout per register.
double nu(const ErrorBudget& b);

/// Post-selected readout qubit p (c rho1 + (1 - c) I/2).
struct ReadoutState {
  double p = 0.0;
  double c = 0.0;
};

/// p = ((1+e)^M - 1)/(1+e)^M, c = M e / ([(1+e)^M - 1](1+e)).
/// `bins` may be any real M >= 1.
ReadoutState ideal_readout_state(double epsilon, double bins);

/// Applies the per-operation depolarizing factors for a register of
/// log2(M+1) qubits per site. Requires M + 1 to be a power of two.
ReadoutState apply_budget(const ReadoutState& rs, const ErrorBudget& b, std::uint64_t bins);

/// Same transformation with a real-valued log2(M + 1); used by the planner.
ReadoutState apply_budget_continuous(const ReadoutState& rs, const ErrorBudget& b, double bins);

/// rho -> p rho + (1 - p) I/d over the mixture's layout.
qsim::Mixture depolarize_mixture(const qsim::Mixture& state, double p_ideal);

/// <psi| rho |psi> for a pure reference and a mixture on the same qubits.
double fidelity(const qsim::PureState& reference, const qsim::Mixture& rho);

/// Counted noisy operations for one two-site block with k qubits per site.
struct OperationTally {
  int transfers = 0;
  int one_qubit_measurements = 0;
  int two_qubit_gates = 0;
  int entangled_pairs = 0;
};

/// 2 transfers, 2(1+k) one-qubit measurements, 2k two-qubit gates and k pairs
/// (one per register), each pair contributing (2f_e - 1)^{1/2}.
OperationTally tally_for(int qubits_per_site);

/// Draws the depolarizing events of one block. The readout is coherent only
/// if every counted operation worked; the photon survives only if both
/// transfers succeeded. The number of uniforms consumed is fixed by k.
class DepolarizingInjector {
 public:
  DepolarizingInjector(const ErrorBudget& budget, int qubits_per_site);

  struct Draw {
    bool transferred = true;
    bool coherent = true;
  };

  Draw draw(Rng& rng) const;

  /// Analytic probability that a draw is coherent.
  double coherent_probability() const;
  double transfer_probability() const;
  int draws_per_block() const;

 private:
  ErrorBudget budget_;
  OperationTally tally_;
};

}  // namespace qnetinterf::noise

#endif  // QNETINTERF_NOISE_H_
