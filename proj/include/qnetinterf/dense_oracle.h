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

#ifndef QNETINTERF_DENSE_ORACLE_H_
#define QNETINTERF_DENSE_ORACLE_H_

#include <Eigen/Dense>
#include <span>

#include "qnetinterf/qsim.h"

/// Brute-force reference for the sparse engine. Every gate and projection is
/// built as an explicit Kronecker product of 2x2 (or 1x2) factors and applied
/// by matrix algebra, so it shares no code path with qsim's bit twiddling.
/// Qubit at layout position i corresponds to bit i of the dense index.
namespace qnetinterf::qsim {

using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

inline constexpr std::size_t kDenseOracleMaxQubits = 12;

DenseVector to_dense_vector(const PureState& state);
DenseMatrix to_density_matrix(const PureState& state);
DenseMatrix to_density_matrix(const Mixture& mixture);

/// Applies `ops` to `input` by dense matrix algebra and returns the final
/// (possibly subnormalized) density matrix over the surviving register.
/// Throws std::length_error if any intermediate register exceeds 12 qubits.
DenseMatrix dense_oracle(const Mixture& input, std::span<const Op> ops);
DenseMatrix dense_oracle(const PureState& input, std::span<const Op> ops);

/// Partial trace keeping the qubits at `keep` positions (in that order).
DenseMatrix partial_trace(const DenseMatrix& rho, std::size_t num_qubits, std::span<const std::size_t> keep);

double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace qnetinterf::qsim

#endif  // QNETINTERF_DENSE_ORACLE_H_
