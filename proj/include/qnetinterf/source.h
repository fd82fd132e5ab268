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

#ifndef QNETINTERF_SOURCE_H_
#define QNETINTERF_SOURCE_H_

#include <complex>
#include <cstdint>
#include <vector>

#include "qnetinterf/qsim.h"
#include "qnetinterf/random.h"

/// Weak thermal light arriving at two collection sites.
namespace qnetinterf::source {

/// Mean photon number per time bin and complex visibility g = |g| e^{i theta}.
struct ThermalSource {
  double epsilon = 0.0;
  std::complex<double> g{1.0, 0.0};

  static ThermalSource from_polar(double epsilon, double magnitude, double phase);

  double visibility() const { return std::abs(g); }
  double theta() const { return std::arg(g); }

  /// Throws std::invalid_argument unless epsilon >= 0 and |g| <= 1.
  /// epsilon = 0 is accepted as a dark source.
  void validate() const;
};

enum class BinKind : std::uint8_t { Vacuum, PsiPlus, PsiMinus, Multi };

struct BinEvent {
  BinKind kind = BinKind::Vacuum;
  std::uint64_t bin_index = 0;  // 1-based; 0 for vacuum
};

struct BlockStatistics {
  double p_vacuum = 0.0;
  double p_single = 0.0;
  double p_multi = 0.0;
};

struct FockWeights {
  double vacuum = 0.0;
  double single = 0.0;
  double multi = 0.0;
};

enum class Expansion : std::uint8_t {
  FirstOrder,  // (1-eps) vac + eps(1+|g|)/2 psi+ + eps(1-|g|)/2 psi-
  Exact,       // full Fock expansion, multi-photon weight left out of the trace
};

/// The dual-rail photonic qubits, one per site; |1> means one photon there.
qsim::QubitId photon_qubit(qsim::Site site);

/// (|0,1> +- e^{i theta}|1,0>)/sqrt(2) over (photon A, photon B).
qsim::PureState psi_state(bool plus, double theta);

/// Per-bin photonic state. In FirstOrder mode requires epsilon <= 1.
qsim::Mixture single_bin_state(const ThermalSource& src, Expansion mode = Expansion::FirstOrder);

/// Exact Fock weights for |g| = 1: 1/(1+e), e/(1+e)^2, e^2/(1+e)^2.
/// Throws if |g| differs from 1 by more than 1e-12.
FockWeights fock_coefficients(const ThermalSource& src);

/// Exact Fock weights for arbitrary |g|.
FockWeights fock_coefficients_exact(const ThermalSource& src);

/// Trinomial block statistics over M bins using the |g| = 1 per-bin weights.
BlockStatistics block_statistics(double epsilon, std::uint64_t bins);

/// Samples one bin with the |g| = 1 Fock weights; within the single-photon
/// sector psi+ vs psi- is drawn with ratio (1+|g|):(1-|g|). Always consumes
/// two uniform draws so streams stay aligned across different g.
BinEvent sample_bin(const ThermalSource& src, std::uint64_t bin_index, Rng& rng);

/// M independent bins, in order. Vacuum bins are included with index 0.
std::vector<BinEvent> sample_block(const ThermalSource& src, std::uint64_t bins, Rng& rng);

}  // namespace qnetinterf::source

#endif  // QNETINTERF_SOURCE_H_
