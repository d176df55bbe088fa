// Copyright 2026 The dacqo Authors
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

#include "dacqo/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "dacqo/error.hpp"

namespace dacqo {
namespace {

struct Masks {
  std::uint64_t flip = 0;
  std::uint64_t phase = 0;
  int n_y = 0;
};

Masks masks_of(int n_qubits, std::span<const PauliFactor> factors) {
  Masks m;
  std::uint64_t seen = 0;
  for (const auto& f : factors) {
    if (f.qubit < 0 || f.qubit >= n_qubits) {
      throw ArgumentError("pauli factor qubit " + std::to_string(f.qubit) + " out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << f.qubit;
    if (seen & bit) throw ArgumentError("repeated qubit in pauli string");
    seen |= bit;
    switch (f.op) {
      case Pauli::I:
        break;
      case Pauli::X:
        m.flip |= bit;
        break;
      case Pauli::Y:
        m.flip |= bit;
        m.phase |= bit;
        ++m.n_y;
        break;
      case Pauli::Z:
        m.phase |= bit;
        break;
    }
  }
  return m;
}

// i^k
Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

DenseOperator pauli_string(int n_qubits, std::span<const PauliFactor> factors) {
  require_dense_capacity(n_qubits, kMaxDenseQubits, "pauli_string");
  const Masks m = masks_of(n_qubits, factors);
  const auto dim = static_cast<Eigen::Index>(dimension_of(n_qubits));
  const Complex base = i_power(m.n_y);
  // Y = i X Z on one qubit: column b maps to row b ^ flip with (-1)^{popcount(b & phase)}.
  DenseOperator p = DenseOperator::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const auto col = static_cast<std::uint64_t>(b);
    const double sign = (std::popcount(col & m.phase) & 1) ? -1.0 : 1.0;
    p(static_cast<Eigen::Index>(col ^ m.flip), b) = base * sign;
  }
  return p;
}

DenseOperator pauli_string(int n_qubits, std::initializer_list<PauliFactor> factors) {
  return pauli_string(n_qubits, std::span<const PauliFactor>(factors.begin(), factors.size()));
}

void add_pauli_term(DenseOperator& m, Complex coeff, std::initializer_list<PauliFactor> factors) {
  const auto dim = m.rows();
  const int n = std::countr_zero(static_cast<std::uint64_t>(dim));
  const Masks mk = masks_of(n, std::span<const PauliFactor>(factors.begin(), factors.size()));
  const Complex base = coeff * i_power(mk.n_y);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const auto col = static_cast<std::uint64_t>(b);
    const double sign = (std::popcount(col & mk.phase) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(col ^ mk.flip), b) += base * sign;
  }
}

Complex pauli_coefficient(const DenseOperator& a, std::span<const PauliFactor> factors) {
  const auto dim = a.rows();
  const int n = std::countr_zero(static_cast<std::uint64_t>(dim));
  const Masks m = masks_of(n, factors);
  const Complex base = i_power(m.n_y);
  // Tr(P A) = sum_b P(b, b^flip) A(b^flip, b); P is real-or-imaginary with the row phase of column b^flip.
  Complex acc{0.0, 0.0};
  for (Eigen::Index b = 0; b < dim; ++b) {
    const auto col = static_cast<std::uint64_t>(b) ^ m.flip;
    const double sign = (std::popcount(col & m.phase) & 1) ? -1.0 : 1.0;
    acc += base * sign * a(static_cast<Eigen::Index>(col), b);
  }
  return acc / static_cast<double>(dim);
}

Complex pauli_coefficient(const DenseOperator& a, std::initializer_list<PauliFactor> factors) {
  return pauli_coefficient(a, std::span<const PauliFactor>(factors.begin(), factors.size()));
}

DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) { return a * b - b * a; }

double hs_norm_squared(const DenseOperator& a) {
  return a.squaredNorm() / static_cast<double>(a.rows());
}

DenseOperator expm(const DenseOperator& a) { return a.exp(); }

DenseOperator hermitian_expm(const DenseOperator& h, double t) {
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(h);
  if (es.info() != Eigen::Success) throw NumericalError("hermitian eigensolver failed");
  const Eigen::VectorXcd phases =
      (es.eigenvalues().cast<Complex>() * Complex(0.0, -t)).array().exp().matrix();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

DenseOperator unitary_generator(const DenseOperator& u) {
  Eigen::ComplexSchur<DenseOperator> schur(u);
  if (schur.info() != Eigen::Success) throw NumericalError("Schur decomposition failed");
  const auto& t = schur.matrixT();
  const auto& q = schur.matrixU();
  Eigen::VectorXd g(t.rows());
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    double phase = -std::arg(t(i, i));
    if (phase >= std::numbers::pi) phase -= 2.0 * std::numbers::pi;
    g(i) = phase;
  }
  DenseOperator gen = q * g.cast<Complex>().asDiagonal() * q.adjoint();
  return 0.5 * (gen + gen.adjoint());
}

double phase_invariant_distance(const DenseOperator& u, const DenseOperator& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw ArgumentError("phase_invariant_distance: dimension mismatch");
  }
  const DenseOperator w = v.adjoint() * u;
  Eigen::ComplexEigenSolver<DenseOperator> es(w, false);
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed");
  std::vector<double> phases(static_cast<std::size_t>(w.rows()));
  for (Eigen::Index i = 0; i < w.rows(); ++i) phases[static_cast<std::size_t>(i)] = std::arg(es.eigenvalues()(i));
  std::sort(phases.begin(), phases.end());
  // Shortest arc holding every eigenphase is 2 pi minus the widest gap.
  double widest = phases.front() + 2.0 * std::numbers::pi - phases.back();
  for (std::size_t i = 1; i < phases.size(); ++i) widest = std::max(widest, phases[i] - phases[i - 1]);
  const double arc = std::max(0.0, 2.0 * std::numbers::pi - widest);
  return 2.0 * std::sin(arc / 4.0);
}

double unitarity_defect(const DenseOperator& u) {
  const DenseOperator d = u.adjoint() * u - DenseOperator::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const DenseOperator& h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

DenseOperator hadamard_all(int n_qubits) {
  require_dense_capacity(n_qubits, kMaxDenseQubits, "hadamard_all");
  const auto dim = static_cast<Eigen::Index>(dimension_of(n_qubits));
  const double scale = std::pow(2.0, -0.5 * n_qubits);
  DenseOperator h(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const bool odd = std::popcount(static_cast<std::uint64_t>(r & c)) & 1;
      h(r, c) = odd ? -scale : scale;
    }
  }
  return h;
}

void require_dense_capacity(int n_qubits, int limit, const char* what) {
  if (n_qubits < 0) throw ArgumentError(std::string(what) + ": negative qubit count");
  if (n_qubits > limit) {
    throw CapabilityError(std::string(what) + ": " + std::to_string(n_qubits) +
                          " qubits exceeds the dense limit of " + std::to_string(limit));
  }
}

}  // namespace dacqo
