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

#include "qnetinterf/codec.h"

#include <bit>
#include <stdexcept>
#include <string>

namespace qnetinterf::codec {

using qsim::Gate;
using qsim::GateOp;
using qsim::MeasureBasis;
using qsim::ProjectOp;
using qsim::Site;

MemoryLayout MemoryLayout::from_qubits(int k) {
  if (k < 1 || k > 30) {
    throw std::invalid_argument("qubits per site must lie in [1, 30]");
  }
  return {k, (std::uint64_t{1} << k) - 1};
}

MemoryLayout MemoryLayout::from_bins(std::uint64_t bins) {
  if (bins < 1 || !std::has_single_bit(bins + 1)) {
    throw std::invalid_argument("M + 1 must be a power of two, got M = " + std::to_string(bins));
  }
  return from_qubits(std::countr_zero(bins + 1));
}

QubitId memory_qubit(Site site, int register_index) {
  return {site, qsim::Role::Memory, static_cast<std::uint32_t>(register_index)};
}

QubitId pair_qubit(int register_index, int half) {
  return {Site::Shared, qsim::Role::Pair, static_cast<std::uint32_t>(2 * register_index + half)};
}

PureState empty_memories(const MemoryLayout& layout) {
  std::vector<QubitId> qubits;
  for (Site s : {Site::A, Site::B}) {
    for (int j = 0; j < layout.qubits_per_site; ++j) {
      qubits.push_back(memory_qubit(s, j));
    }
  }
  return PureState::basis_state(std::move(qubits), 0);
}

std::vector<qsim::Op> encode_ops(const MemoryLayout& layout, std::uint64_t bin) {
  if (bin < 1 || bin > layout.bins) {
    throw std::invalid_argument("bin index " + std::to_string(bin) + " outside [1, " +
                                std::to_string(layout.bins) + "]");
  }
  std::vector<qsim::Op> ops;
  for (Site s : {Site::A, Site::B}) {
    for (int j = 0; j < layout.qubits_per_site; ++j) {
      if ((bin >> j) & 1U) {
        ops.emplace_back(GateOp{Gate::cx(), {source::photon_qubit(s), memory_qubit(s, j)}});
      }
    }
  }
  return ops;
}

PureState encode_bin(const PureState& memories, const PureState& photon_pair, std::uint64_t bin,
                     const MemoryLayout& layout) {
  const auto ops = encode_ops(layout, bin);
  PureState state = tensor(memories, photon_pair);
  for (const auto& op : ops) {
    const auto& g = std::get<GateOp>(op);
    state = apply_gate(state, g.gate, g.targets);
  }
  return state;
}

Decoupled decouple_photon(const PureState& state, Rng& rng) {
  auto a = qsim::measure_x(state, source::photon_qubit(Site::A), rng);
  auto b = qsim::measure_x(a.collapsed, source::photon_qubit(Site::B), rng);
  return {std::move(b.collapsed), qsim::sign_of(a.outcome) * qsim::sign_of(b.outcome), a.outcome, b.outcome};
}

std::vector<qsim::Op> decouple_ops(XOutcome site_a, XOutcome site_b) {
  return {ProjectOp{source::photon_qubit(Site::A), MeasureBasis::X, site_a == XOutcome::Plus ? 0 : 1},
          ProjectOp{source::photon_qubit(Site::B), MeasureBasis::X, site_b == XOutcome::Plus ? 0 : 1}};
}

ParityCheck parity_check_register(const PureState& state, int register_index, const PureState& bell, Rng& rng) {
  const QubitId h0 = pair_qubit(register_index, 0);
  const QubitId h1 = pair_qubit(register_index, 1);
  if (!bell.contains(h0) || !bell.contains(h1) || bell.num_qubits() != 2) {
    throw std::invalid_argument("Bell pair must live on the register's pair qubits");
  }
  PureState s = tensor(state, bell);
  s = apply_gate(s, Gate::cz(), {memory_qubit(Site::A, register_index), h0});
  s = apply_gate(s, Gate::cz(), {memory_qubit(Site::B, register_index), h1});
  auto m0 = qsim::measure_x(s, h0, rng);
  auto m1 = qsim::measure_x(m0.collapsed, h1, rng);
  return {std::move(m1.collapsed), m0.outcome == m1.outcome ? ParityOutcome::PhiPlus : ParityOutcome::PhiMinus};
}

std::vector<qsim::Op> parity_check_ops(int register_index, XOutcome first_half, XOutcome second_half) {
  const QubitId h0 = pair_qubit(register_index, 0);
  const QubitId h1 = pair_qubit(register_index, 1);
  return {qsim::AppendOp{qsim::make_bell(qsim::BellKind::PhiPlus, h0, h1)},
          GateOp{Gate::cz(), {memory_qubit(Site::A, register_index), h0}},
          GateOp{Gate::cz(), {memory_qubit(Site::B, register_index), h1}},
          ProjectOp{h0, MeasureBasis::X, first_half == XOutcome::Plus ? 0 : 1},
          ProjectOp{h1, MeasureBasis::X, second_half == XOutcome::Plus ? 0 : 1}};
}

DecodeResult decode_arrival(const ParityRecord& record, int decoupling_sign) {
  DecodeResult r;
  for (std::size_t j = 0; j < record.outcomes.size(); ++j) {
    if (record.outcomes[j] == ParityOutcome::PhiMinus) {
      r.arrival_bin |= std::uint64_t{1} << j;
    }
  }
  r.sign_flips = decoupling_sign < 0 ? 1 : 0;
  return r;
}

std::vector<QubitId> entangled_qubits(std::uint64_t arrival_bin) {
  std::vector<QubitId> out;
  for (Site s : {Site::A, Site::B}) {
    for (int j = 0; j < 64; ++j) {
      if ((arrival_bin >> j) & 1U) {
        out.push_back(memory_qubit(s, j));
      }
    }
  }
  return out;
}

QubitId readout_qubit(std::uint64_t arrival_bin) {
  if (arrival_bin == 0) {
    throw std::invalid_argument("no readout qubit for a vacuum block");
  }
  return memory_qubit(Site::B, std::bit_width(arrival_bin) - 1);
}

Readout readout_visibility(const PureState& state, const DecodeResult& decode, double delta, Rng& rng) {
  if (decode.arrival_bin == 0) {
    throw std::invalid_argument("readout called on a vacuum block");
  }
  const QubitId kept = readout_qubit(decode.arrival_bin);
  Readout r;
  r.decode = decode;
  PureState s = state;
  for (const QubitId& q : entangled_qubits(decode.arrival_bin)) {
    if (q == kept) {
      continue;
    }
    auto m = qsim::measure_x(s, q, rng);
    if (m.outcome == XOutcome::Minus) {
      ++r.minus_count;
    }
    s = std::move(m.collapsed);
  }
  r.decode.sign_flips += r.minus_count;
  s = apply_gate(s, Gate::phase(delta), {kept});
  s = apply_gate(s, Gate::h(), {kept});
  r.plus_probability = qsim::outcome_probabilities(s, kept, MeasureBasis::Z).first;
  auto z = qsim::measure_z(s, kept, rng);
  r.outcome = z.outcome == 0 ? XOutcome::Plus : XOutcome::Minus;
  return r;
}

std::vector<qsim::Op> readout_ops(std::uint64_t arrival_bin, const std::vector<XOutcome>& outcomes, double delta) {
  const QubitId kept = readout_qubit(arrival_bin);
  std::vector<qsim::Op> ops;
  std::size_t i = 0;
  for (const QubitId& q : entangled_qubits(arrival_bin)) {
    if (q == kept) {
      continue;
    }
    if (i >= outcomes.size()) {
      throw std::invalid_argument("not enough readout outcomes");
    }
    ops.emplace_back(ProjectOp{q, MeasureBasis::X, outcomes[i++] == XOutcome::Plus ? 0 : 1});
  }
  ops.emplace_back(GateOp{Gate::phase(delta), {kept}});
  ops.emplace_back(GateOp{Gate::h(), {kept}});
  return ops;
}

XOutcome BlockOutcome::corrected() const {
  if (sign_flips % 2 == 0) {
    return outcome;
  }
  return outcome == XOutcome::Plus ? XOutcome::Minus : XOutcome::Plus;
}

BlockOutcome run_block(const source::ThermalSource& src, const MemoryLayout& layout, double delta, Rng& rng,
                       const noise::DepolarizingInjector* injector) {
  const std::vector<source::BinEvent> events = source::sample_block(src, layout.bins, rng);

  const std::vector<QubitId> photons = {source::photon_qubit(Site::A), source::photon_qubit(Site::B)};
  const PureState dark = PureState::basis_state(photons, 0);
  const double theta = src.theta();

  PureState memories = empty_memories(layout);
  std::vector<int> decoupling_sign(layout.bins + 1, 1);
  int singles = 0;
  bool multi = false;
  for (const source::BinEvent& ev : events) {
    const std::uint64_t bin = &ev - events.data() + 1;
    PureState photon = dark;
    if (ev.kind == source::BinKind::PsiPlus || ev.kind == source::BinKind::PsiMinus) {
      photon = source::psi_state(ev.kind == source::BinKind::PsiPlus, theta);
      ++singles;
    } else if (ev.kind == source::BinKind::Multi) {
      // Multi-photon bins carry no simulated amplitudes.
      multi = true;
    }
    Decoupled d = decouple_photon(encode_bin(memories, photon, bin, layout), rng);
    memories = std::move(d.state);
    decoupling_sign[bin] = d.sign;
  }

  ParityRecord record;
  for (int j = 0; j < layout.qubits_per_site; ++j) {
    const PureState bell = qsim::make_bell(qsim::BellKind::PhiPlus, pair_qubit(j, 0), pair_qubit(j, 1));
    ParityCheck pc = parity_check_register(memories, j, bell, rng);
    memories = std::move(pc.state);
    record.outcomes.push_back(pc.outcome);
  }
  DecodeResult decoded = decode_arrival(record);

  BlockOutcome out;
  out.arrival_bin = decoded.arrival_bin;
  if (singles == 0 && !multi) {
    return out;
  }

  noise::DepolarizingInjector::Draw noise_draw;
  if (injector != nullptr) {
    noise_draw = injector->draw(rng);
    if (!noise_draw.transferred) {
      return out;
    }
  }
  const XOutcome coin = uniform01(rng) < 0.5 ? XOutcome::Plus : XOutcome::Minus;

  if (multi || singles > 1 || decoded.arrival_bin == 0) {
    out.kind = BlockKind::MultiEvent;
    out.outcome = coin;
    return out;
  }

  decoded.sign_flips = decoupling_sign[decoded.arrival_bin] < 0 ? 1 : 0;
  Readout r = readout_visibility(memories, decoded, delta, rng);
  out.kind = BlockKind::Sample;
  out.sign_flips = r.decode.sign_flips;
  out.outcome = r.outcome;
  if (!noise_draw.coherent) {
    out.depolarized = true;
    out.outcome = coin;
  }
  return out;
}

}  // namespace qnetinterf::codec
