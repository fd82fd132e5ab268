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

#include "qnetinterf/fisher.h"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qnetinterf/parallel.h"

namespace qnetinterf::fisher {

namespace {

constexpr std::uint64_t kTrialsPerChunk = 4096;

double projected_visibility(std::complex<double> g, double delta) {
  return g.real() * std::cos(delta) + g.imag() * std::sin(delta);
}

}  // namespace

double FisherMatrix::inverse_diagonal(int i) const {
  const double det = determinant();
  if (!(det > 0.0)) {
    return std::numeric_limits<double>::infinity();
  }
  return (i == 0 ? g2g2 : g1g1) / det;
}

int FisherMatrix::rank(double rel_tol) const {
  const double tr = g1g1 + g2g2;
  const double disc = std::sqrt(std::max(0.0, (g1g1 - g2g2) * (g1g1 - g2g2) / 4.0 + g1g2 * g1g2));
  const double hi = tr / 2.0 + disc;
  const double lo = tr / 2.0 - disc;
  if (!(std::abs(hi) > 0.0)) {
    return 0;
  }
  return std::abs(lo) > rel_tol * std::abs(hi) ? 2 : 1;
}

FisherMatrix& FisherMatrix::operator+=(const FisherMatrix& o) {
  g1g1 += o.g1g1;
  g1g2 += o.g1g2;
  g2g2 += o.g2g2;
  return *this;
}

std::pair<double, double> outcome_probabilities(const noise::ReadoutState& rs, std::complex<double> g, double delta) {
  const double r = rs.c * projected_visibility(g, delta);
  return {rs.p * (1.0 + r) / 2.0, rs.p * (1.0 - r) / 2.0};
}

FisherMatrix analytic_fisher(const noise::ReadoutState& rs, std::complex<double> g, double delta) {
  if (rs.c == 0.0 || rs.p == 0.0) {
    return {};
  }
  const double r = projected_visibility(g, delta);
  const double denom = 1.0 / (rs.c * rs.c) - r * r;
  const double scale = denom > 0.0 ? rs.p / denom : std::numeric_limits<double>::infinity();
  const double cs = std::cos(delta);
  const double sn = std::sin(delta);
  return {scale * cs * cs, scale * cs * sn, scale * sn * sn};
}

double fisher_lower_bound(double epsilon, double bins, const noise::ErrorBudget& budget) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (!(bins >= 1.0)) {
    throw std::invalid_argument("block length must be at least 1");
  }
  budget.validate();
  const double mu = noise::mu(budget);
  const double nu = noise::nu(budget);
  if (mu == 0.0 || nu == 0.0) {
    return 0.0;
  }
  const double log1pe = std::log1p(epsilon);
  const double grown = std::expm1(bins * log1pe);
  const double log_value = 2.0 * std::log(bins * epsilon) - std::log(grown) - (bins + 2.0) * log1pe +
                           2.0 * std::log(mu) + std::log2(bins + 1.0) * std::log(nu);
  return std::exp(log_value);
}

BenchmarkBounds benchmark_bounds(double epsilon, double bins) {
  if (!(epsilon > 0.0) || !(bins >= 1.0)) {
    throw std::invalid_argument("benchmark bounds need epsilon > 0 and M >= 1");
  }
  return {bins * epsilon, bins * epsilon * epsilon};
}

FisherMatrix empirical_fisher(const source::ThermalSource& src, const codec::MemoryLayout& layout,
                              const noise::ErrorBudget& budget, std::span<const double> deltas,
                              const EmpiricalFisherOptions& options) {
  src.validate();
  budget.validate();
  if (options.trials < kMinEmpiricalTrials) {
    throw std::invalid_argument("empirical Fisher needs at least " + std::to_string(kMinEmpiricalTrials) +
                                " trials");
  }
  if (deltas.size() < 2) {
    throw std::invalid_argument("empirical Fisher needs at least two delta settings");
  }

  // Anchor 0 is the target; anchors 1..3 are g = 0, 1, i.
  const std::array<std::complex<double>, 4> anchors = {src.g, {0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  const noise::DepolarizingInjector injector(budget, layout.qubits_per_site);
  const std::size_t n_delta = deltas.size();
  const std::uint64_t num_chunks = (options.trials + kTrialsPerChunk - 1) / kTrialsPerChunk;

  // counts[chunk][delta][anchor][outcome]
  using Counts = std::vector<std::array<std::array<std::uint64_t, 2>, 4>>;
  std::vector<Counts> counts(num_chunks, Counts(n_delta));

  parallel_for_chunks(num_chunks, options.threads, [&](std::uint64_t chunk) {
    Rng rng = derive_stream(options.seed, chunk);
    const std::uint64_t begin = chunk * kTrialsPerChunk;
    const std::uint64_t end = std::min(options.trials, begin + kTrialsPerChunk);
    Counts& local = counts[chunk];
    for (std::uint64_t t = begin; t < end; ++t) {
      const std::size_t d = t % n_delta;
      Rng after = rng;
      for (std::size_t a = 0; a < anchors.size(); ++a) {
        Rng trial = rng;
        const source::ThermalSource s{src.epsilon, anchors[a]};
        const codec::BlockOutcome out = codec::run_block(s, layout, deltas[d], trial, &injector);
        if (out.postselected()) {
          ++local[d][a][out.corrected() == qsim::XOutcome::Plus ? 0 : 1];
        }
        after = trial;
      }
      rng = after;
    }
  });

  FisherMatrix total;
  for (std::size_t d = 0; d < n_delta; ++d) {
    std::array<std::array<std::uint64_t, 2>, 4> sum{};
    for (const Counts& c : counts) {
      for (std::size_t a = 0; a < 4; ++a) {
        sum[a][0] += c[d][a][0];
        sum[a][1] += c[d][a][1];
      }
    }
    const std::uint64_t n = options.trials / n_delta + (d < options.trials % n_delta ? 1 : 0);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (int y = 0; y < 2; ++y) {
      const double p_target = static_cast<double>(sum[0][y]) * inv_n;
      if (p_target == 0.0) {
        continue;
      }
      const double d1 = (static_cast<double>(sum[2][y]) - static_cast<double>(sum[1][y])) * inv_n;
      const double d2 = (static_cast<double>(sum[3][y]) - static_cast<double>(sum[1][y])) * inv_n;
      total += FisherMatrix{d1 * d1 / p_target, d1 * d2 / p_target, d2 * d2 / p_target};
    }
  }
  return total;
}

}  // namespace qnetinterf::fisher
