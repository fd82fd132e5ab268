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

#include "qnetinterf/noise.h"

#include <cmath>

#include "gtest/gtest.h"

namespace qnetinterf::noise {
namespace {

TEST(noise, IdealBudgetHasUnitFactors) {
  const ErrorBudget b = ErrorBudget::ideal();
  EXPECT_DOUBLE_EQ(mu(b), 1.0);
  EXPECT_DOUBLE_EQ(nu(b), 1.0);
  const ReadoutState rs{0.3, 0.8};
  const ReadoutState out = apply_budget(rs, b, 7);
  EXPECT_DOUBLE_EQ(out.p, 0.3);
  EXPECT_DOUBLE_EQ(out.c, 0.8);
}

TEST(noise, FromNuReproducesNu) {
  for (double target : {1.0, 0.8, 0.6, 0.1}) {
    const ErrorBudget b = ErrorBudget::from_nu(target);
    EXPECT_NEAR(nu(b), target, 1e-14);
    EXPECT_NEAR(mu(b), std::pow(target, 0.25), 1e-14);
    EXPECT_EQ(b.f_1, b.f_2);
    EXPECT_NO_THROW(b.validate());
  }
  EXPECT_THROW(ErrorBudget::from_nu(0.0), std::invalid_argument);
  EXPECT_THROW(ErrorBudget::from_nu(1.5), std::invalid_argument);
}

TEST(noise, MuAndNuFromFidelities) {
  const ErrorBudget b{0.9, 0.95, 0.99, 0.98, 0.97};
  EXPECT_NEAR(mu(b), 0.9 * 0.9 * 0.9 * 0.98 * 0.98, 1e-15);
  EXPECT_NEAR(nu(b), std::pow(0.98, 4) * std::pow(0.96, 4) * 0.94, 1e-15);
}

TEST(noise, ApplyBudgetScalesContrast) {
  const ErrorBudget b{0.9, 0.95, 0.99, 0.98, 0.97};
  const ReadoutState rs{0.4, 0.5};
  for (std::uint64_t bins : {1ULL, 3ULL, 7ULL, 1023ULL}) {
    const double k = std::log2(static_cast<double>(bins) + 1.0);
    const ReadoutState out = apply_budget(rs, b, bins);
    EXPECT_NEAR(out.p, 0.4 * 0.81, 1e-15);
    const double expected_c =
        0.5 * std::pow(0.9, 2) * std::pow(0.98, 2.0 * (1.0 + k)) * std::pow(0.96, 2.0 * k) * std::pow(0.94, k / 2.0);
    EXPECT_NEAR(out.c, expected_c, 1e-15);
  }
  EXPECT_THROW(apply_budget(rs, b, 6), std::invalid_argument);
}

TEST(noise, IdealReadoutStateMatchesBlockStatistics) {
  for (double eps : {1e-6, 1e-3, 0.1}) {
    for (double bins : {1.0, 7.0, 1000.0}) {
      const ReadoutState rs = ideal_readout_state(eps, bins);
      const long double e = eps;
      const long double m = bins;
      const long double grown = std::pow(1.0L + e, m);
      EXPECT_NEAR(rs.p, static_cast<double>(1.0L - 1.0L / grown), 1e-12);
      EXPECT_NEAR(rs.p * rs.c / static_cast<double>(m * e / (grown * (1.0L + e))), 1.0, 1e-12);
    }
  }
  const ReadoutState saturated = ideal_readout_state(0.3, 1048575.0);
  EXPECT_EQ(saturated.p, 1.0);
  EXPECT_EQ(saturated.c, 0.0);
  const ReadoutState large = ideal_readout_state(0.3, 1023.0);
  EXPECT_NEAR(std::log(large.c), std::log(1023.0 * 0.3) - 1023.0 * std::log1p(0.3) - std::log1p(0.3), 1e-9);
  EXPECT_THROW(ideal_readout_state(0.0, 7), std::invalid_argument);
  EXPECT_THROW(ideal_readout_state(0.1, 0.5), std::invalid_argument);
}

TEST(noise, DepolarizeMixtureFidelity) {
  const qsim::PureState bell = qsim::make_bell(qsim::BellKind::PhiPlus);
  const qsim::Mixture m = depolarize_mixture(qsim::Mixture::pure(bell), 0.9);
  EXPECT_NEAR(m.trace(), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(bell, m), 0.9 + 0.1 / 4.0, 1e-15);
  EXPECT_THROW(depolarize_mixture(m, 1.2), std::invalid_argument);
}

TEST(noise, TallyCountsOperations) {
  const OperationTally t = tally_for(3);
  EXPECT_EQ(t.transfers, 2);
  EXPECT_EQ(t.one_qubit_measurements, 8);
  EXPECT_EQ(t.two_qubit_gates, 6);
  EXPECT_EQ(t.entangled_pairs, 3);
  EXPECT_THROW(tally_for(0), std::invalid_argument);
}

TEST(noise, InjectorMatchesBudgetContrast) {
  const ErrorBudget b{0.8, 0.97, 0.99, 0.98, 0.96};
  for (int k : {1, 3}) {
    const DepolarizingInjector inj(b, k);
    const ReadoutState scaled = apply_budget({1.0, 1.0}, b, (1ULL << k) - 1);
    EXPECT_NEAR(inj.coherent_probability(), scaled.c, 1e-14);
    EXPECT_NEAR(inj.transfer_probability(), scaled.p, 1e-14);
  }
}

TEST(noise, InjectorDrawFrequencies) {
  const ErrorBudget b{0.8, 0.97, 0.99, 0.98, 0.96};
  const DepolarizingInjector inj(b, 2);
  Rng rng(31);
  const int n = 200000;
  int transferred = 0;
  int coherent = 0;
  for (int i = 0; i < n; ++i) {
    const auto d = inj.draw(rng);
    transferred += d.transferred;
    coherent += d.coherent;
  }
  const double pt = inj.transfer_probability();
  const double pc = inj.coherent_probability();
  EXPECT_NEAR(transferred / static_cast<double>(n), pt, 3.0 * std::sqrt(pt * (1 - pt) / n));
  EXPECT_NEAR(coherent / static_cast<double>(n), pc, 3.0 * std::sqrt(pc * (1 - pc) / n));
}

TEST(noise, InjectorDrawCountIsFixed) {
  const DepolarizingInjector inj(ErrorBudget{0.5, 0.9, 0.9, 0.9, 0.9}, 3);
  Rng a(4);
  Rng b(4);
  inj.draw(a);
  b.discard(static_cast<unsigned long long>(inj.draws_per_block()));
  EXPECT_EQ(a(), b());
}

TEST(noise, BudgetValidation) {
  EXPECT_THROW((ErrorBudget{1.1, 1, 1, 1, 1}.validate()), std::invalid_argument);
  EXPECT_THROW((ErrorBudget{1, 0.4, 1, 1, 1}.validate()), std::invalid_argument);
  EXPECT_THROW(DepolarizingInjector(ErrorBudget{1, 1, 1, 1, 0.3}, 1), std::invalid_argument);
}

}  // namespace
}  // namespace qnetinterf::noise
