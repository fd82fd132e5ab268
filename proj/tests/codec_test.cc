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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qnetinterf/dense_oracle.h"

namespace qnetinterf::codec {
namespace {

using qsim::Site;

// Memory register bits for site A then site B, photons last.
PureState decoupled_reference(const MemoryLayout& layout, std::uint64_t bin, int sign, double theta) {
  const int k = layout.qubits_per_site;
  const qsim::Bits a_term = bin;
  const qsim::Bits b_term = bin << k;
  return PureState::from_terms(empty_memories(layout).layout(),
                               {{b_term, {1.0, 0.0}}, {a_term, std::polar(static_cast<double>(sign), theta)}})
      .normalized();
}

TEST(codec, LayoutFromBins) {
  EXPECT_EQ(MemoryLayout::from_bins(7).qubits_per_site, 3);
  EXPECT_EQ(MemoryLayout::from_qubits(4).bins, 15u);
  EXPECT_THROW(MemoryLayout::from_bins(6), std::invalid_argument);
  EXPECT_THROW(MemoryLayout::from_qubits(0), std::invalid_argument);
  EXPECT_THROW(MemoryLayout::from_qubits(31), std::invalid_argument);
}

TEST(codec, EncodeBinFiveOfSeven) {
  const MemoryLayout layout = MemoryLayout::from_bins(7);
  const double theta = 0.8;
  const PureState s = encode_bin(empty_memories(layout), source::psi_state(true, theta), 5, layout);
  ASSERT_EQ(s.terms().size(), 2u);
  const double r = 1.0 / std::sqrt(2.0);
  // Photon at B: memB = 101. Photon at A: memA = 101.
  EXPECT_NEAR(std::abs(s.amplitude((qsim::Bits{1} << 7) | (0b101 << 3)) - qsim::Complex(r, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude((qsim::Bits{1} << 6) | 0b101) - std::polar(r, theta)), 0.0, 1e-15);
}

TEST(codec, EncodeRejectsBadBin) {
  const MemoryLayout layout = MemoryLayout::from_bins(3);
  EXPECT_THROW(encode_ops(layout, 0), std::invalid_argument);
  EXPECT_THROW(encode_ops(layout, 4), std::invalid_argument);
}

TEST(codec, VacuumBinLeavesMemoriesEmpty) {
  const MemoryLayout layout = MemoryLayout::from_bins(7);
  const PureState dark =
      PureState::basis_state({source::photon_qubit(Site::A), source::photon_qubit(Site::B)}, 0);
  const PureState s = encode_bin(empty_memories(layout), dark, 6, layout);
  ASSERT_EQ(s.terms().size(), 1u);
  EXPECT_EQ(s.terms()[0].bits, 0u);
}

TEST(codec, DecouplingSignCases) {
  const MemoryLayout layout = MemoryLayout::from_bins(7);
  const double theta = 1.3;
  Rng rng(21);
  int seen[2] = {0, 0};
  for (int i = 0; i < 200; ++i) {
    const PureState enc = encode_bin(empty_memories(layout), source::psi_state(true, theta), 5, layout);
    const Decoupled d = decouple_photon(enc, rng);
    EXPECT_EQ(d.sign, qsim::sign_of(d.site_a) * qsim::sign_of(d.site_b));
    EXPECT_TRUE(qsim::equal_up_to_global_phase(d.state, decoupled_reference(layout, 5, d.sign, theta)));
    ++seen[d.sign > 0];
  }
  EXPECT_GT(seen[0], 0);
  EXPECT_GT(seen[1], 0);
}

TEST(codec, ParityCheckTruthTable) {
  const MemoryLayout layout = MemoryLayout::from_bins(1);
  Rng rng(2);
  for (qsim::Bits in = 0; in < 4; ++in) {
    const PureState mem = PureState::basis_state(empty_memories(layout).layout(), in);
    for (int rep = 0; rep < 20; ++rep) {
      const ParityCheck pc =
          parity_check_register(mem, 0, qsim::make_bell(qsim::BellKind::PhiPlus, pair_qubit(0, 0), pair_qubit(0, 1)), rng);
      const bool odd = in == 0b01 || in == 0b10;
      EXPECT_EQ(pc.outcome, odd ? ParityOutcome::PhiMinus : ParityOutcome::PhiPlus);
      EXPECT_TRUE(qsim::equal_up_to_global_phase(pc.state, mem));
    }
  }
}

TEST(codec, ParityCheckRejectsForeignBell) {
  const MemoryLayout layout = MemoryLayout::from_bins(3);
  Rng rng(1);
  EXPECT_THROW(parity_check_register(empty_memories(layout), 1, qsim::make_bell(qsim::BellKind::PhiPlus), rng),
               std::invalid_argument);
}

TEST(codec, RoundTripEveryBin) {
  Rng rng(99);
  for (std::uint64_t bins : {3ULL, 7ULL, 15ULL}) {
    const MemoryLayout layout = MemoryLayout::from_bins(bins);
    for (std::uint64_t m = 1; m <= bins; ++m) {
      const PureState enc = encode_bin(empty_memories(layout), source::psi_state(true, 0.5), m, layout);
      Decoupled d = decouple_photon(enc, rng);
      PureState s = d.state;
      ParityRecord record;
      for (int j = 0; j < layout.qubits_per_site; ++j) {
        ParityCheck pc =
            parity_check_register(s, j, qsim::make_bell(qsim::BellKind::PhiPlus, pair_qubit(j, 0), pair_qubit(j, 1)), rng);
        s = pc.state;
        record.outcomes.push_back(pc.outcome);
      }
      const DecodeResult r = decode_arrival(record, d.sign);
      EXPECT_EQ(r.arrival_bin, m);
      EXPECT_EQ(r.sign(), d.sign);
      EXPECT_TRUE(qsim::equal_up_to_global_phase(s, decoupled_reference(layout, m, d.sign, 0.5)));
    }
  }
}

TEST(codec, BinFiveParityPattern) {
  const MemoryLayout layout = MemoryLayout::from_bins(7);
  Rng rng(5);
  PureState s = decouple_photon(encode_bin(empty_memories(layout), source::psi_state(true, 0.0), 5, layout), rng).state;
  std::vector<ParityOutcome> got;
  for (int j = 0; j < 3; ++j) {
    ParityCheck pc =
        parity_check_register(s, j, qsim::make_bell(qsim::BellKind::PhiPlus, pair_qubit(j, 0), pair_qubit(j, 1)), rng);
    s = pc.state;
    got.push_back(pc.outcome);
  }
  EXPECT_EQ(got, (std::vector<ParityOutcome>{ParityOutcome::PhiMinus, ParityOutcome::PhiPlus, ParityOutcome::PhiMinus}));
}

TEST(codec, PostCheckStateForBinThree) {
  const MemoryLayout layout = MemoryLayout::from_bins(3);
  const double theta = 2.1;
  Rng rng(8);
  for (int rep = 0; rep < 50; ++rep) {
    Decoupled d = decouple_photon(encode_bin(empty_memories(layout), source::psi_state(true, theta), 3, layout), rng);
    PureState s = d.state;
    for (int j = 0; j < 2; ++j) {
      s = parity_check_register(s, j, qsim::make_bell(qsim::BellKind::PhiPlus, pair_qubit(j, 0), pair_qubit(j, 1)), rng)
              .state;
    }
    // (|00,11> + sign e^{i theta} |11,00>) / sqrt 2
    const PureState expected = PureState::from_terms(
        s.layout(), {{0b1100, {1.0, 0.0}}, {0b0011, std::polar(static_cast<double>(d.sign), theta)}});
    EXPECT_TRUE(qsim::equal_up_to_global_phase(s, expected.normalized()));
  }
}

TEST(codec, ReadoutProbabilityFollowsProjectedVisibility) {
  const MemoryLayout layout = MemoryLayout::from_bins(7);
  Rng rng(44);
  for (std::uint64_t m = 1; m <= 7; ++m) {
    for (double theta : {0.0, 0.7, 2.5}) {
      for (double delta : {0.0, std::numbers::pi / 3, std::numbers::pi / 2}) {
        Decoupled d = decouple_photon(encode_bin(empty_memories(layout), source::psi_state(true, theta), m, layout), rng);
        DecodeResult dec;
        dec.arrival_bin = m;
        dec.sign_flips = d.sign < 0 ? 1 : 0;
        const Readout r = readout_visibility(d.state, dec, delta, rng);
        const double corrected_plus =
            r.decode.sign_flips % 2 == 0 ? r.plus_probability : 1.0 - r.plus_probability;
        EXPECT_NEAR(corrected_plus, (1.0 + std::cos(theta - delta)) / 2.0, 1e-12);
      }
    }
  }
}

TEST(codec, ReadoutOpsMatchDenseOracle) {
  const MemoryLayout layout = MemoryLayout::from_bins(3);
  const double theta = 0.9;
  const double delta = 0.4;
  const PureState decoupled = decoupled_reference(layout, 3, 1, theta);
  const std::vector<XOutcome> outs = {XOutcome::Minus, XOutcome::Plus, XOutcome::Minus};
  const auto ops = readout_ops(3, outs, delta);
  const qsim::Mixture sparse = qsim::run_circuit(qsim::Mixture::pure(decoupled), ops);
  const qsim::DenseMatrix dense = qsim::dense_oracle(decoupled, ops);
  EXPECT_LT(qsim::max_abs_difference(qsim::to_density_matrix(sparse), dense), 1e-12);
  EXPECT_THROW(readout_ops(0, outs, delta), std::invalid_argument);
}

TEST(codec, ReadoutQubitIsHighestBitAtSiteB) {
  EXPECT_EQ(readout_qubit(5), memory_qubit(Site::B, 2));
  EXPECT_EQ(readout_qubit(1), memory_qubit(Site::B, 0));
  EXPECT_EQ(entangled_qubits(6).size(), 4u);
}

TEST(codec, RunBlockDeterministicReadout) {
  // g = e^{i pi/3} read at delta = pi/3 always reports plus after correction.
  const source::ThermalSource src = source::ThermalSource::from_polar(0.05, 1.0, std::numbers::pi / 3);
  const MemoryLayout layout = MemoryLayout::from_bins(7);
  Rng rng(6);
  int samples = 0;
  for (int i = 0; i < 5000; ++i) {
    const BlockOutcome out = run_block(src, layout, std::numbers::pi / 3, rng);
    if (out.kind == BlockKind::Sample) {
      ++samples;
      EXPECT_EQ(out.corrected(), XOutcome::Plus);
      EXPECT_GE(out.arrival_bin, 1u);
      EXPECT_LE(out.arrival_bin, 7u);
    }
  }
  EXPECT_GT(samples, 500);
}

TEST(codec, RunBlockDarkSourceIsVacuum) {
  const MemoryLayout layout = MemoryLayout::from_bins(3);
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    EXPECT_EQ(run_block({0.0, {1.0, 0.0}}, layout, 0.0, rng).kind, BlockKind::VacuumDiscard);
  }
}

TEST(codec, RunBlockArrivalBinsUniform) {
  const source::ThermalSource src{0.05, {1.0, 0.0}};
  const MemoryLayout layout = MemoryLayout::from_bins(7);
  Rng rng(10);
  std::vector<int> counts(8, 0);
  int samples = 0;
  const int n = 60000;
  for (int i = 0; i < n; ++i) {
    const BlockOutcome out = run_block(src, layout, 0.0, rng);
    if (out.kind == BlockKind::Sample) {
      ++counts[out.arrival_bin];
      ++samples;
    }
  }
  const double p_single = source::block_statistics(0.05, 7).p_single;
  EXPECT_NEAR(samples / static_cast<double>(n), p_single, 3.0 * std::sqrt(p_single * (1 - p_single) / n));
  for (int m = 1; m <= 7; ++m) {
    const double p = 1.0 / 7.0;
    EXPECT_NEAR(counts[m] / static_cast<double>(samples), p, 4.0 * std::sqrt(p * (1 - p) / samples)) << "bin " << m;
  }
}

TEST(codec, RunBlockRandomDrawsIndependentOfVisibility) {
  const MemoryLayout layout = MemoryLayout::from_bins(7);
  Rng a(123);
  Rng b(123);
  for (int i = 0; i < 2000; ++i) {
    const BlockOutcome x = run_block({0.1, {1.0, 0.0}}, layout, 0.3, a);
    const BlockOutcome y = run_block({0.1, {0.0, 0.0}}, layout, 0.3, b);
    ASSERT_EQ(x.kind, y.kind);
    ASSERT_EQ(x.arrival_bin, y.arrival_bin);
  }
  EXPECT_EQ(a(), b());
}

TEST(codec, RunBlockWithFailedTransferDiscards) {
  const MemoryLayout layout = MemoryLayout::from_bins(3);
  const noise::DepolarizingInjector inj(noise::ErrorBudget{0.0, 1, 1, 1, 1}, layout.qubits_per_site);
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    EXPECT_EQ(run_block({0.2, {1.0, 0.0}}, layout, 0.0, rng, &inj).kind, BlockKind::VacuumDiscard);
  }
}

TEST(codec, RunBlockFullyDepolarizedIsCoin) {
  const MemoryLayout layout = MemoryLayout::from_bins(3);
  const noise::DepolarizingInjector inj(noise::ErrorBudget{1, 1, 0.5, 1, 1}, layout.qubits_per_site);
  Rng rng(3);
  int samples = 0;
  int plus = 0;
  for (int i = 0; i < 40000; ++i) {
    const BlockOutcome out = run_block({0.1, {1.0, 0.0}}, layout, 0.0, rng, &inj);
    if (out.kind == BlockKind::Sample) {
      EXPECT_TRUE(out.depolarized);
      ++samples;
      plus += out.corrected() == XOutcome::Plus;
    }
  }
  ASSERT_GT(samples, 1000);
  EXPECT_NEAR(plus / static_cast<double>(samples), 0.5, 3.0 * 0.5 / std::sqrt(samples));
}

}  // namespace
}  // namespace qnetinterf::codec
