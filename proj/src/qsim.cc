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

#include "qnetinterf/qsim.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qnetinterf::qsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Bits bit_mask(std::size_t pos) { return Bits{1} << pos; }

bool bit_at(Bits bits, std::size_t pos) { return ((bits >> pos) & 1U) != 0; }

// Deletes bit `pos` and shifts the higher bits down by one.
Bits remove_bit(Bits bits, std::size_t pos) {
  Bits low = bits & (bit_mask(pos) - 1);
  Bits high = pos + 1 >= kMaxQubits ? 0 : bits >> (pos + 1);
  return low | (high << pos);
}

std::vector<QubitId> without(const std::vector<QubitId>& layout, std::size_t pos) {
  std::vector<QubitId> out = layout;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

std::uint64_t qubit_key(const QubitId& q) {
  return (static_cast<std::uint64_t>(q.site) << 40) | (static_cast<std::uint64_t>(q.role) << 32) | q.index;
}

void check_layout(const std::vector<QubitId>& layout) {
  if (layout.size() > kMaxQubits) {
    throw std::invalid_argument("register wider than 64 qubits");
  }
  std::uint64_t keys[kMaxQubits];
  for (std::size_t i = 0; i < layout.size(); ++i) {
    keys[i] = qubit_key(layout[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (keys[j] == keys[i]) {
        throw std::invalid_argument("duplicate qubit in register layout");
      }
    }
  }
}

const char* site_name(Site s) {
  switch (s) {
    case Site::A:
      return "A";
    case Site::B:
      return "B";
    case Site::Shared:
      return "S";
  }
  return "?";
}

const char* role_name(Role r) {
  switch (r) {
    case Role::Memory:
      return "mem";
    case Role::Photon:
      return "ph";
    case Role::Pair:
      return "pair";
  }
  return "?";
}

}  // namespace

std::string to_string(const QubitId& q) {
  return std::string(site_name(q.site)) + ":" + role_name(q.role) + std::to_string(q.index);
}

PureState::PureState() : terms_{{0, Complex(1.0, 0.0)}} {}

PureState PureState::basis_state(std::vector<QubitId> layout, Bits bits) {
  check_layout(layout);
  if (layout.size() < kMaxQubits && (bits >> layout.size()) != 0) {
    throw std::invalid_argument("basis bitstring wider than layout");
  }
  return PureState(std::move(layout), {{bits, Complex(1.0, 0.0)}});
}

PureState::PureState(std::vector<QubitId> layout, std::vector<Term> terms)
    : layout_(std::move(layout)), terms_(std::move(terms)) {}

PureState PureState::from_terms(std::vector<QubitId> layout, std::vector<Term> terms) {
  check_layout(layout);
  return assemble(std::move(layout), std::move(terms));
}

PureState PureState::assemble(std::vector<QubitId> layout, std::vector<Term> terms) {
  const auto by_bits = [](const Term& a, const Term& b) { return a.bits < b.bits; };
  if (!std::is_sorted(terms.begin(), terms.end(), by_bits)) {
    std::sort(terms.begin(), terms.end(), by_bits);
  }
  // Merge duplicates in place.
  std::vector<Term> merged = std::move(terms);
  std::size_t w = 0;
  for (std::size_t r = 0; r < merged.size(); ++r) {
    if (w > 0 && merged[w - 1].bits == merged[r].bits) {
      merged[w - 1].amplitude += merged[r].amplitude;
    } else {
      merged[w++] = merged[r];
    }
  }
  merged.resize(w);
  std::erase_if(merged, [](const Term& t) { return std::norm(t.amplitude) <= kZeroAmplitude * kZeroAmplitude; });
  return PureState(std::move(layout), std::move(merged));
}

std::optional<std::size_t> PureState::position(const QubitId& q) const {
  auto it = std::find(layout_.begin(), layout_.end(), q);
  if (it == layout_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - layout_.begin());
}

std::size_t PureState::require_position(const QubitId& q) const {
  auto pos = position(q);
  if (!pos) {
    throw std::invalid_argument("unknown qubit " + to_string(q));
  }
  return *pos;
}

Complex PureState::amplitude(Bits bits) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), bits,
                             [](const Term& t, Bits b) { return t.bits < b; });
  if (it == terms_.end() || it->bits != bits) {
    return {0.0, 0.0};
  }
  return it->amplitude;
}

double PureState::norm_squared() const {
  double total = 0.0;
  for (const Term& t : terms_) {
    total += std::norm(t.amplitude);
  }
  return total;
}

PureState PureState::normalized() const& { return PureState(*this).normalized(); }

PureState PureState::normalized() && {
  double n2 = norm_squared();
  if (!(n2 > 0.0)) {
    throw std::domain_error("cannot normalize a zero-norm state");
  }
  double scale = 1.0 / std::sqrt(n2);
  for (Term& t : terms_) {
    t.amplitude *= scale;
  }
  return std::move(*this);
}

PureState PureState::reordered(const std::vector<QubitId>& layout) const {
  if (layout.size() != layout_.size()) {
    throw std::invalid_argument("reorder: layouts differ in size");
  }
  std::vector<std::size_t> source(layout.size());
  for (std::size_t j = 0; j < layout.size(); ++j) {
    source[j] = require_position(layout[j]);
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    Bits b = 0;
    for (std::size_t j = 0; j < source.size(); ++j) {
      if (bit_at(t.bits, source[j])) {
        b |= bit_mask(j);
      }
    }
    terms.push_back({b, t.amplitude});
  }
  return from_terms(layout, std::move(terms));
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<QubitId> layout = a.layout();
  layout.insert(layout.end(), b.layout().begin(), b.layout().end());
  std::vector<PureState::Term> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  const std::size_t shift = a.num_qubits();
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      terms.push_back({ta.bits | (shift >= kMaxQubits ? 0 : tb.bits << shift), ta.amplitude * tb.amplitude});
    }
  }
  return PureState::from_terms(std::move(layout), std::move(terms));
}

PureState apply_gate(const PureState& state, const Gate& gate, std::span<const QubitId> targets) {
  if (targets.size() != gate.arity()) {
    throw std::invalid_argument("gate arity mismatch: expected " + std::to_string(gate.arity()) +
                                " targets, got " + std::to_string(targets.size()));
  }
  std::size_t p0 = state.require_position(targets[0]);
  std::size_t p1 = p0;
  if (gate.arity() == 2) {
    p1 = state.require_position(targets[1]);
    if (p1 == p0) {
      throw std::invalid_argument("gate targets must be distinct");
    }
  }

  std::vector<PureState::Term> out;
  out.reserve(state.terms().size() * (gate.kind == GateKind::H ? 2 : 1));
  const Complex phase = std::polar(1.0, gate.angle);
  for (const auto& t : state.terms()) {
    switch (gate.kind) {
      case GateKind::X:
        out.push_back({t.bits ^ bit_mask(p0), t.amplitude});
        break;
      case GateKind::H: {
        Complex a = t.amplitude * kInvSqrt2;
        Bits zero = t.bits & ~bit_mask(p0);
        out.push_back({zero, a});
        out.push_back({zero | bit_mask(p0), bit_at(t.bits, p0) ? -a : a});
        break;
      }
      case GateKind::CX:
        out.push_back({bit_at(t.bits, p0) ? t.bits ^ bit_mask(p1) : t.bits, t.amplitude});
        break;
      case GateKind::CZ:
        out.push_back({t.bits, (bit_at(t.bits, p0) && bit_at(t.bits, p1)) ? -t.amplitude : t.amplitude});
        break;
      case GateKind::Phase:
        out.push_back({t.bits, bit_at(t.bits, p0) ? t.amplitude * phase : t.amplitude});
        break;
    }
  }
  return PureState::assemble(state.layout(), std::move(out));
}

PureState apply_gate(const PureState& state, const Gate& gate, std::initializer_list<QubitId> targets) {
  return apply_gate(state, gate, std::span<const QubitId>(targets.begin(), targets.size()));
}

PureState project(const PureState& state, const QubitId& target, MeasureBasis basis, int outcome) {
  if (outcome != 0 && outcome != 1) {
    throw std::invalid_argument("measurement outcome must be 0 or 1");
  }
  const std::size_t pos = state.require_position(target);
  std::vector<PureState::Term> out;
  out.reserve(state.terms().size());
  for (const auto& t : state.terms()) {
    const bool bit = bit_at(t.bits, pos);
    const Bits reduced = remove_bit(t.bits, pos);
    if (basis == MeasureBasis::Z) {
      if (static_cast<int>(bit) == outcome) {
        out.push_back({reduced, t.amplitude});
      }
    } else {
      // <+|b> = 1/sqrt2, <-|b> = (-1)^b / sqrt2.
      Complex a = t.amplitude * kInvSqrt2;
      out.push_back({reduced, (bit && outcome == 1) ? -a : a});
    }
  }
  return PureState::assemble(without(state.layout(), pos), std::move(out));
}

std::pair<double, double> outcome_probabilities(const PureState& state, const QubitId& target,
                                                MeasureBasis basis) {
  double n0 = project(state, target, basis, 0).norm_squared();
  double n1 = project(state, target, basis, 1).norm_squared();
  double total = n0 + n1;
  if (!(total > 0.0)) {
    throw std::domain_error("measurement on a zero-norm state");
  }
  return {n0 / total, n1 / total};
}

namespace {

struct Sampled {
  int outcome;
  PureState collapsed;
  double probability;
};

Sampled sample(const PureState& state, const QubitId& target, MeasureBasis basis, Rng& rng) {
  PureState b0 = project(state, target, basis, 0);
  PureState b1 = project(state, target, basis, 1);
  double n0 = b0.norm_squared();
  double n1 = b1.norm_squared();
  double total = n0 + n1;
  if (!(total > 0.0)) {
    throw std::domain_error("both measurement branches vanish; state is corrupted");
  }
  double p0 = n0 / total;
  double u = uniform01(rng);
  int outcome = u < p0 ? 0 : 1;
  if (outcome == 1 && n1 <= 0.0) {
    outcome = 0;
  }
  if (outcome == 0) {
    return {0, std::move(b0).normalized(), p0};
  }
  return {1, std::move(b1).normalized(), n1 / total};
}

}  // namespace

XMeasurement measure_x(const PureState& state, const QubitId& target, Rng& rng) {
  Sampled s = sample(state, target, MeasureBasis::X, rng);
  return {s.outcome == 0 ? XOutcome::Plus : XOutcome::Minus, std::move(s.collapsed), s.probability};
}

ZMeasurement measure_z(const PureState& state, const QubitId& target, Rng& rng) {
  Sampled s = sample(state, target, MeasureBasis::Z, rng);
  return {s.outcome, std::move(s.collapsed), s.probability};
}

PureState make_bell(BellKind kind, const QubitId& first, const QubitId& second) {
  const double sign = kind == BellKind::PhiPlus ? 1.0 : -1.0;
  return PureState::from_terms({first, second},
                               {{0b00, Complex(kInvSqrt2, 0.0)}, {0b11, Complex(sign * kInvSqrt2, 0.0)}});
}

PureState make_bell(BellKind kind) {
  return make_bell(kind, {Site::Shared, Role::Pair, 0}, {Site::Shared, Role::Pair, 1});
}

Complex inner_product(const PureState& a, const PureState& b) {
  const PureState bb = a.layout() == b.layout() ? b : b.reordered(a.layout());
  Complex acc{0.0, 0.0};
  auto ia = a.terms().begin();
  auto ib = bb.terms().begin();
  while (ia != a.terms().end() && ib != bb.terms().end()) {
    if (ia->bits < ib->bits) {
      ++ia;
    } else if (ib->bits < ia->bits) {
      ++ib;
    } else {
      acc += std::conj(ia->amplitude) * ib->amplitude;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

double fidelity(const PureState& a, const PureState& b) {
  return std::norm(inner_product(a, b)) / (a.norm_squared() * b.norm_squared());
}

bool equal_up_to_global_phase(const PureState& a, const PureState& b, double tol) {
  if (a.num_qubits() != b.num_qubits()) {
    return false;
  }
  const PureState bb = a.layout() == b.layout() ? b : b.reordered(a.layout());
  if (a.terms().empty() || bb.terms().empty()) {
    return a.terms().empty() && bb.terms().empty();
  }
  auto largest = std::max_element(a.terms().begin(), a.terms().end(), [](const auto& x, const auto& y) {
    return std::abs(x.amplitude) < std::abs(y.amplitude);
  });
  Complex other = bb.amplitude(largest->bits);
  if (std::abs(other) <= tol) {
    return false;
  }
  Complex phase = other / largest->amplitude;
  phase /= std::abs(phase);
  for (const auto& t : a.terms()) {
    if (std::abs(t.amplitude * phase - bb.amplitude(t.bits)) > tol) {
      return false;
    }
  }
  for (const auto& t : bb.terms()) {
    if (std::abs(a.amplitude(t.bits) * phase - t.amplitude) > tol) {
      return false;
    }
  }
  return true;
}

Mixture Mixture::pure(const PureState& state) {
  Mixture m;
  m.layout = state.layout();
  m.branches.push_back({1.0, state});
  return m;
}

double Mixture::trace() const {
  double total = depolarized_weight;
  for (const Branch& b : branches) {
    total += b.weight;
  }
  return total;
}

Mixture Mixture::normalized() const {
  double t = trace();
  if (!(t > 0.0)) {
    throw std::domain_error("cannot normalize a zero-trace mixture");
  }
  Mixture out = *this;
  for (Branch& b : out.branches) {
    b.weight /= t;
  }
  out.depolarized_weight /= t;
  return out;
}

void Mixture::validate() const {
  if (depolarized_weight < 0.0 || depolarized_weight > 1.0 + 1e-12) {
    throw std::invalid_argument("depolarized weight outside [0, 1]");
  }
  for (const Branch& b : branches) {
    if (b.weight < 0.0 || b.weight > 1.0 + 1e-12) {
      throw std::invalid_argument("branch weight outside [0, 1]");
    }
    if (b.state.layout() != layout) {
      throw std::invalid_argument("branch layout differs from mixture layout");
    }
  }
  if (trace() > 1.0 + 1e-12) {
    throw std::invalid_argument("mixture trace exceeds 1");
  }
}

Mixture run_circuit(const Mixture& input, std::span<const Op> ops) {
  Mixture m = input;
  for (const Op& op : ops) {
    if (const auto* g = std::get_if<GateOp>(&op)) {
      for (auto& b : m.branches) {
        b.state = apply_gate(b.state, g->gate, g->targets);
      }
      // The maximally mixed part is invariant under unitaries.
      if (m.branches.empty()) {
        for (const QubitId& q : g->targets) {
          if (std::find(m.layout.begin(), m.layout.end(), q) == m.layout.end()) {
            throw std::invalid_argument("unknown qubit " + to_string(q));
          }
        }
      }
    } else if (const auto* p = std::get_if<ProjectOp>(&op)) {
      auto it = std::find(m.layout.begin(), m.layout.end(), p->target);
      if (it == m.layout.end()) {
        throw std::invalid_argument("unknown qubit " + to_string(p->target));
      }
      std::vector<Mixture::Branch> kept;
      for (auto& b : m.branches) {
        PureState s = project(b.state, p->target, p->basis, p->outcome);
        double w = s.norm_squared();
        if (w > 0.0) {
          kept.push_back({b.weight * w, s.normalized()});
        }
      }
      m.branches = std::move(kept);
      m.depolarized_weight *= 0.5;
      m.layout.erase(it);
    } else {
      const auto& a = std::get<AppendOp>(op);
      if (m.depolarized_weight > 0.0) {
        throw std::invalid_argument("cannot append a register to a depolarized mixture");
      }
      for (auto& b : m.branches) {
        b.state = tensor(b.state, a.state);
      }
      m.layout.insert(m.layout.end(), a.state.layout().begin(), a.state.layout().end());
    }
  }
  return m;
}

}  // namespace qnetinterf::qsim
