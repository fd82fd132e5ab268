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

#include "qnetinterf/dense_oracle.h"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qnetinterf::qsim {

namespace {

using SparseOp = Eigen::SparseMatrix<Complex>;

SparseOp from_dense(const Eigen::MatrixXcd& m) { return m.sparseView(); }

SparseOp kron(const SparseOp& a, const SparseOp& b) {
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (int ka = 0; ka < a.outerSize(); ++ka) {
    for (SparseOp::InnerIterator ia(a, ka); ia; ++ia) {
      for (int kb = 0; kb < b.outerSize(); ++kb) {
        for (SparseOp::InnerIterator ib(b, kb); ib; ++ib) {
          triplets.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                                ia.value() * ib.value());
        }
      }
    }
  }
  SparseOp out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

Eigen::MatrixXcd mat2(Complex a, Complex b, Complex c, Complex d) {
  Eigen::MatrixXcd m(2, 2);
  m << a, b, c, d;
  return m;
}

const Eigen::MatrixXcd& identity2() {
  static const Eigen::MatrixXcd m = mat2(1, 0, 0, 1);
  return m;
}

// Kronecker chain over n qubits; factors[i] acts on position i. Position 0
// is the least significant index, so it is the rightmost factor.
SparseOp chain(const std::vector<Eigen::MatrixXcd>& factors) {
  SparseOp out(1, 1);
  out.insert(0, 0) = Complex(1.0, 0.0);
  for (std::size_t i = factors.size(); i-- > 0;) {
    out = kron(out, from_dense(factors[i]));
  }
  return out;
}

std::size_t position_in(const std::vector<QubitId>& layout, const QubitId& q) {
  auto it = std::find(layout.begin(), layout.end(), q);
  if (it == layout.end()) {
    throw std::invalid_argument("dense oracle: unknown qubit " + to_string(q));
  }
  return static_cast<std::size_t>(it - layout.begin());
}

SparseOp gate_operator(const Gate& gate, const std::vector<QubitId>& targets,
                       const std::vector<QubitId>& layout) {
  const std::size_t n = layout.size();
  if (targets.size() != gate.arity()) {
    throw std::invalid_argument("dense oracle: gate arity mismatch");
  }
  const double r = 1.0 / std::sqrt(2.0);
  const Eigen::MatrixXcd x = mat2(0, 1, 1, 0);
  const Eigen::MatrixXcd z = mat2(1, 0, 0, -1);
  const Eigen::MatrixXcd p0 = mat2(1, 0, 0, 0);
  const Eigen::MatrixXcd p1 = mat2(0, 0, 0, 1);

  std::vector<Eigen::MatrixXcd> f(n, identity2());
  const std::size_t a = position_in(layout, targets[0]);
  switch (gate.kind) {
    case GateKind::X:
      f[a] = x;
      return chain(f);
    case GateKind::H:
      f[a] = mat2(r, r, r, -r);
      return chain(f);
    case GateKind::Phase:
      f[a] = mat2(1, 0, 0, std::polar(1.0, gate.angle));
      return chain(f);
    case GateKind::CX:
    case GateKind::CZ: {
      const std::size_t b = position_in(layout, targets[1]);
      if (a == b) {
        throw std::invalid_argument("dense oracle: repeated target");
      }
      std::vector<Eigen::MatrixXcd> g = f;
      f[a] = p0;
      g[a] = p1;
      g[b] = gate.kind == GateKind::CX ? x : z;
      return chain(f) + chain(g);
    }
  }
  throw std::logic_error("unreachable");
}

SparseOp projector_operator(const ProjectOp& p, const std::vector<QubitId>& layout) {
  const std::size_t n = layout.size();
  const std::size_t pos = position_in(layout, p.target);
  std::vector<Eigen::MatrixXcd> f(n, identity2());
  Eigen::MatrixXcd bra(1, 2);
  if (p.basis == MeasureBasis::Z) {
    bra << (p.outcome == 0 ? 1.0 : 0.0), (p.outcome == 0 ? 0.0 : 1.0);
  } else {
    const double r = 1.0 / std::sqrt(2.0);
    bra << r, (p.outcome == 0 ? r : -r);
  }
  f[pos] = bra;
  return chain(f);
}

void check_width(std::size_t n) {
  if (n > kDenseOracleMaxQubits) {
    throw std::length_error("dense oracle limited to 12 qubits");
  }
}

}  // namespace

DenseVector to_dense_vector(const PureState& state) {
  check_width(state.num_qubits());
  DenseVector v = DenseVector::Zero(Eigen::Index{1} << state.num_qubits());
  for (const auto& t : state.terms()) {
    v(static_cast<Eigen::Index>(t.bits)) = t.amplitude;
  }
  return v;
}

DenseMatrix to_density_matrix(const PureState& state) {
  DenseVector v = to_dense_vector(state);
  return v * v.adjoint();
}

DenseMatrix to_density_matrix(const Mixture& mixture) {
  check_width(mixture.layout.size());
  const Eigen::Index dim = Eigen::Index{1} << mixture.layout.size();
  DenseMatrix rho = DenseMatrix::Identity(dim, dim) * (mixture.depolarized_weight / static_cast<double>(dim));
  for (const auto& b : mixture.branches) {
    const PureState s = b.state.layout() == mixture.layout ? b.state : b.state.reordered(mixture.layout);
    DenseVector v = to_dense_vector(s);
    rho += b.weight * (v * v.adjoint());
  }
  return rho;
}

DenseMatrix dense_oracle(const Mixture& input, std::span<const Op> ops) {
  std::vector<QubitId> layout = input.layout;
  check_width(layout.size());
  std::vector<std::pair<double, DenseVector>> branches;
  for (const auto& b : input.branches) {
    const PureState s = b.state.layout() == layout ? b.state : b.state.reordered(layout);
    branches.emplace_back(b.weight, to_dense_vector(s));
  }
  double depolarized = input.depolarized_weight;

  for (const Op& op : ops) {
    if (const auto* g = std::get_if<GateOp>(&op)) {
      SparseOp u = gate_operator(g->gate, g->targets, layout);
      for (auto& [w, v] : branches) {
        v = u * v;
      }
    } else if (const auto* p = std::get_if<ProjectOp>(&op)) {
      SparseOp proj = projector_operator(*p, layout);
      for (auto& [w, v] : branches) {
        v = proj * v;
      }
      depolarized *= 0.5;
      layout.erase(layout.begin() + static_cast<std::ptrdiff_t>(position_in(layout, p->target)));
    } else {
      const auto& a = std::get<AppendOp>(op);
      if (depolarized > 0.0) {
        throw std::invalid_argument("dense oracle: cannot append to a depolarized mixture");
      }
      check_width(layout.size() + a.state.num_qubits());
      DenseVector fresh = to_dense_vector(a.state);
      for (auto& [w, v] : branches) {
        DenseVector out(fresh.size() * v.size());
        for (Eigen::Index i = 0; i < fresh.size(); ++i) {
          out.segment(i * v.size(), v.size()) = fresh(i) * v;
        }
        v = std::move(out);
      }
      layout.insert(layout.end(), a.state.layout().begin(), a.state.layout().end());
    }
  }

  const Eigen::Index dim = Eigen::Index{1} << layout.size();
  DenseMatrix rho = DenseMatrix::Identity(dim, dim) * (depolarized / static_cast<double>(dim));
  for (const auto& [w, v] : branches) {
    rho += w * (v * v.adjoint());
  }
  return rho;
}

DenseMatrix dense_oracle(const PureState& input, std::span<const Op> ops) {
  return dense_oracle(Mixture::pure(input), ops);
}

DenseMatrix partial_trace(const DenseMatrix& rho, std::size_t num_qubits, std::span<const std::size_t> keep) {
  const std::size_t k = keep.size();
  std::vector<std::size_t> traced;
  for (std::size_t i = 0; i < num_qubits; ++i) {
    if (std::find(keep.begin(), keep.end(), i) == keep.end()) {
      traced.push_back(i);
    }
  }
  auto compose = [&](std::size_t kept_bits, std::size_t traced_bits) {
    std::size_t full = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((kept_bits >> j) & 1U) full |= std::size_t{1} << keep[j];
    }
    for (std::size_t j = 0; j < traced.size(); ++j) {
      if ((traced_bits >> j) & 1U) full |= std::size_t{1} << traced[j];
    }
    return static_cast<Eigen::Index>(full);
  };
  const std::size_t dk = std::size_t{1} << k;
  const std::size_t dt = std::size_t{1} << traced.size();
  DenseMatrix out = DenseMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  for (std::size_t r = 0; r < dk; ++r) {
    for (std::size_t c = 0; c < dk; ++c) {
      Complex acc{0.0, 0.0};
      for (std::size_t t = 0; t < dt; ++t) {
        acc += rho(compose(r, t), compose(c, t));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return out;
}

double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qnetinterf::qsim
