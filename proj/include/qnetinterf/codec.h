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

#ifndef QNETINTERF_CODEC_H_
#define QNETINTERF_CODEC_H_

#include <cstdint>
#include <vector>

#include "qnetinterf/noise.h"
#include "qnetinterf/qsim.h"
#include "qnetinterf/random.h"
#include "qnetinterf/source.h"

/// The two-site protocol: binary time-bin encoding into memory, photonic
/// decoupling, Bell-pair parity checks, arrival decoding and the phase
/// readout of the surviving entangled qubit.
///
/// Bin m is stored LSB-first: memory qubit j at each site is flipped iff bit
/// j of m is set, so bin 5 flips registers 0 and 2.
namespace qnetinterf::codec {

using qsim::PureState;
using qsim::QubitId;
using qsim::XOutcome;

struct MemoryLayout {
  int qubits_per_site = 1;  // k
  std::uint64_t bins = 1;   // M = 2^k - 1

  static MemoryLayout from_qubits(int k);
  /// Throws unless M + 1 is a power of two.
  static MemoryLayout from_bins(std::uint64_t bins);
};

QubitId memory_qubit(qsim::Site site, int register_index);
/// Half 0 sits with site A's register, half 1 with site B's.
QubitId pair_qubit(int register_index, int half);

enum class ParityOutcome : std::uint8_t { PhiPlus, PhiMinus };

struct ParityRecord {
  std::vector<ParityOutcome> outcomes;  // one per register, index j = bit j
};

struct DecodeResult {
  std::uint64_t arrival_bin = 0;  // 0 = vacuum
  int sign_flips = 0;

  int sign() const { return (sign_flips % 2 == 0) ? 1 : -1; }
};

/// |0bar, 0bar> over both sites' memories: A registers first, then B.
PureState empty_memories(const MemoryLayout& layout);

/// Physical CX gates realizing the logical CX for bin m at both sites.
std::vector<qsim::Op> encode_ops(const MemoryLayout& layout, std::uint64_t bin);

/// Tensors the photon pair onto the memories and applies encode_ops.
/// Throws if bin is outside [1, M] or a qubit is missing.
PureState encode_bin(const PureState& memories, const PureState& photon_pair, std::uint64_t bin,
                     const MemoryLayout& layout);

struct Decoupled {
  PureState state;
  int sign = 1;  // +1 for {++, --}, -1 for {+-, -+}
  XOutcome site_a = XOutcome::Plus;
  XOutcome site_b = XOutcome::Plus;
};

/// Measures both photonic qubits in X. The sign is recorded, not corrected.
Decoupled decouple_photon(const PureState& state, Rng& rng);

/// Post-selected version of decouple_photon for circuit comparisons.
std::vector<qsim::Op> decouple_ops(XOutcome site_a, XOutcome site_b);

struct ParityCheck {
  PureState state;
  ParityOutcome outcome = ParityOutcome::PhiPlus;
};

/// CZ from each site's register-j qubit to its half of `bell`, then X on both
/// halves: equal outcomes mean even parity. `bell` must live on
/// pair_qubit(j, 0) and pair_qubit(j, 1).
ParityCheck parity_check_register(const PureState& state, int register_index, const PureState& bell, Rng& rng);

/// Appends a fresh |phi+> for register j and post-selects its halves.
std::vector<qsim::Op> parity_check_ops(int register_index, XOutcome first_half, XOutcome second_half);

/// arrival_bin = sum of 2^j over odd registers. `decoupling_sign` is the
/// sign recorded when the arrival bin was decoupled.
DecodeResult decode_arrival(const ParityRecord& record, int decoupling_sign = 1);

/// Entangled memory qubits for an arrival bin: A's then B's odd registers.
std::vector<QubitId> entangled_qubits(std::uint64_t arrival_bin);

/// The qubit kept for the phase measurement: B's highest odd register.
QubitId readout_qubit(std::uint64_t arrival_bin);

struct Readout {
  XOutcome outcome = XOutcome::Plus;  // raw, before sign correction
  DecodeResult decode;                // sign_flips now includes n-
  int minus_count = 0;
  double plus_probability = 0.5;  // Born probability of the raw plus outcome
};

/// X-measures every entangled qubit but the readout qubit, applies U_delta,
/// H and a Z measurement. P(plus) = (1 + s Re(g e^{-i delta}))/2 with
/// s = decode.sign(). Throws on a vacuum decode.
Readout readout_visibility(const PureState& state, const DecodeResult& decode, double delta, Rng& rng);

/// Post-selected X outcomes on the other entangled qubits (in
/// entangled_qubits order, readout qubit skipped), then U_delta and H on the
/// readout qubit.
std::vector<qsim::Op> readout_ops(std::uint64_t arrival_bin, const std::vector<XOutcome>& outcomes, double delta);

enum class BlockKind : std::uint8_t { VacuumDiscard, Sample, MultiEvent };

struct BlockOutcome {
  BlockKind kind = BlockKind::VacuumDiscard;
  XOutcome outcome = XOutcome::Plus;  // raw outcome of the readout qubit
  std::uint64_t arrival_bin = 0;
  int sign_flips = 0;
  bool depolarized = false;

  bool postselected() const { return kind != BlockKind::VacuumDiscard; }
  /// Outcome with the recorded sign undone: P(plus) = (1 + Re(g e^{-i delta}))/2
  /// for a clean single-photon block.
  XOutcome corrected() const;
};

/// Simulates one block end to end: samples bins, encodes them one at a time
/// reusing the photonic qubits, decouples, parity-checks every register,
/// decodes and reads out. Blocks holding more than one photon are simulated
/// through the parity checks and then reported as MultiEvent with a uniformly
/// random outcome. With an injector, a failed transfer discards the block and
/// any depolarizing event randomizes the outcome.
BlockOutcome run_block(const source::ThermalSource& src, const MemoryLayout& layout, double delta, Rng& rng,
                       const noise::DepolarizingInjector* injector = nullptr);

}  // namespace qnetinterf::codec

#endif  // QNETINTERF_CODEC_H_
