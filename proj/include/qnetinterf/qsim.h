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

#ifndef QNETINTERF_QSIM_H_
#define QNETINTERF_QSIM_H_

#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qnetinterf/random.h"

/// Minimal sparse state engine for the interferometry protocol.
///
/// Protocol states carry a handful of nonzero amplitudes per branch, so a
/// pure state is stored as a sorted list of (bitstring, amplitude) terms over
/// an ordered register layout. Bit i of a bitstring belongs to layout()[i].
/// All operations are value-returning; inputs are never mutated.
namespace qnetinterf::qsim {

using Complex = std::complex<double>;
using Bits = std::uint64_t;

inline constexpr std::size_t kMaxQubits = 64;

/// Amplitudes with magnitude at or below this are dropped from the map.
inline constexpr double kZeroAmplitude = 1e-14;

enum class Site : std::uint8_t { A, B, Shared };
enum class Role : std::uint8_t { Memory, Photon, Pair };

struct QubitId {
  Site site = Site::A;
  Role role = Role::Memory;
  std::uint32_t index = 0;

  auto operator<=>(const QubitId&) const = default;
};

std::string to_string(const QubitId& q);

enum class GateKind : std::uint8_t { X, H, CX, CZ, Phase };

struct Gate {
  GateKind kind = GateKind::X;
  double angle = 0.0;  // radians, Phase only: |0><0| + e^{i angle}|1><1|

  static Gate x() { return {GateKind::X, 0.0}; }
  static Gate h() { return {GateKind::H, 0.0}; }
  static Gate cx() { return {GateKind::CX, 0.0}; }
  static Gate cz() { return {GateKind::CZ, 0.0}; }
  static Gate phase(double radians) { return {GateKind::Phase, radians}; }

  std::size_t arity() const {
    return (kind == GateKind::CX || kind == GateKind::CZ) ? 2 : 1;
  }
};

enum class MeasureBasis : std::uint8_t { X, Z };

/// Outcome of an X-basis measurement.
enum class XOutcome : std::uint8_t { Plus, Minus };

inline int sign_of(XOutcome o) { return o == XOutcome::Plus ? 1 : -1; }

class PureState {
 public:
  struct Term {
    Bits bits = 0;
    Complex amplitude;
  };

  /// The zero-qubit state with amplitude 1.
  PureState();

  /// Computational basis state |bits> over `layout`.
  static PureState basis_state(std::vector<QubitId> layout, Bits bits);

  /// Builds a state from arbitrary terms: duplicates are summed, near-zero
  /// amplitudes dropped. No normalization is applied.
  static PureState from_terms(std::vector<QubitId> layout, std::vector<Term> terms);

  const std::vector<QubitId>& layout() const { return layout_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_qubits() const { return layout_.size(); }

  std::optional<std::size_t> position(const QubitId& q) const;
  std::size_t require_position(const QubitId& q) const;
  bool contains(const QubitId& q) const { return position(q).has_value(); }

  Complex amplitude(Bits bits) const;
  double norm_squared() const;

  /// Scales every amplitude so the state has unit norm. Throws on zero norm.
  PureState normalized() const&;
  PureState normalized() &&;

  /// Same state with its register reordered to `layout`, which must be a
  /// permutation of the current one.
  PureState reordered(const std::vector<QubitId>& layout) const;

 private:
  friend PureState apply_gate(const PureState&, const Gate&, std::span<const QubitId>);
  friend PureState project(const PureState&, const QubitId&, MeasureBasis, int);

  PureState(std::vector<QubitId> layout, std::vector<Term> terms);
  // from_terms without the layout check, for layouts derived from a valid one.
  static PureState assemble(std::vector<QubitId> layout, std::vector<Term> terms);

  std::vector<QubitId> layout_;
  std::vector<Term> terms_;  // sorted by bits, no duplicates, no zeros
};

/// |a> (x) |b>; b's qubits are appended after a's.
PureState tensor(const PureState& a, const PureState& b);

/// Applies `gate` to `targets` (control first for CX).
/// Throws std::invalid_argument on an unknown qubit, repeated target, or an
/// arity mismatch.
PureState apply_gate(const PureState& state, const Gate& gate, std::span<const QubitId> targets);
PureState apply_gate(const PureState& state, const Gate& gate, std::initializer_list<QubitId> targets);

/// Projects `target` onto an eigenstate of `basis` and removes it from the
/// register. The result is not renormalized; its squared norm is the Born
/// weight of the outcome relative to the input's norm. For X, outcome 0 is
/// |+> and 1 is |->.
PureState project(const PureState& state, const QubitId& target, MeasureBasis basis, int outcome);

/// Born probabilities of outcome 0 and 1 for `target` in `basis`, normalized
/// by the state's norm.
std::pair<double, double> outcome_probabilities(const PureState& state, const QubitId& target,
                                                MeasureBasis basis);

struct XMeasurement {
  XOutcome outcome;
  PureState collapsed;
  double probability;
};

struct ZMeasurement {
  int outcome;
  PureState collapsed;
  double probability;
};

/// Samples an X-basis measurement. The collapsed state is renormalized and no
/// longer contains `target`. Consumes exactly one uniform draw.
XMeasurement measure_x(const PureState& state, const QubitId& target, Rng& rng);
ZMeasurement measure_z(const PureState& state, const QubitId& target, Rng& rng);

enum class BellKind : std::uint8_t { PhiPlus, PhiMinus };

/// (|00> +- |11>)/sqrt(2) on the two given qubits.
PureState make_bell(BellKind kind, const QubitId& first, const QubitId& second);
/// Same, on fresh Shared pair qubits 0 and 1.
PureState make_bell(BellKind kind);

/// <a|b>, after aligning b to a's layout. Layouts must hold the same qubits.
Complex inner_product(const PureState& a, const PureState& b);

/// |<a|b>|^2 / (<a|a><b|b>).
double fidelity(const PureState& a, const PureState& b);

/// True when a = e^{i phi} b for some phi, within `tol` per amplitude.
bool equal_up_to_global_phase(const PureState& a, const PureState& b, double tol = 1e-12);

/// Weighted pure branches plus a maximally mixed component over the layout.
/// The trace is the sum of all weights; post-selected mixtures are left
/// subnormalized so their success probability stays visible.
struct Mixture {
  struct Branch {
    double weight = 0.0;
    PureState state;  // unit norm
  };

  std::vector<QubitId> layout;
  std::vector<Branch> branches;
  double depolarized_weight = 0.0;

  static Mixture pure(const PureState& state);

  double trace() const;
  Mixture normalized() const;

  /// Checks weights are in range and all branches share `layout`.
  void validate() const;
};

struct GateOp {
  Gate gate;
  std::vector<QubitId> targets;
};

/// Post-selects `target` on an outcome and removes it (trace decreases).
struct ProjectOp {
  QubitId target;
  MeasureBasis basis = MeasureBasis::X;
  int outcome = 0;
};

/// Appends a fresh pure register (e.g. a Bell pair) to the right.
struct AppendOp {
  PureState state;
};

using Op = std::variant<GateOp, ProjectOp, AppendOp>;

/// Runs a circuit on every branch of a mixture through the sparse engine.
Mixture run_circuit(const Mixture& input, std::span<const Op> ops);

}  // namespace qnetinterf::qsim

#endif  // QNETINTERF_QSIM_H_
