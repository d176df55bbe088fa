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

#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace dacqo {

using Complex = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;

// Largest register for which 2^N x 2^N operators are built.
inline constexpr int kMaxDenseQubits = 14;

enum class Pauli : std::uint8_t { I, X, Y, Z };

struct PauliFactor {
  int qubit;
  Pauli op;
};

// Qubit q is bit q of the basis index.
DenseOperator pauli_string(int n_qubits, std::span<const PauliFactor> factors);
DenseOperator pauli_string(int n_qubits, std::initializer_list<PauliFactor> factors);

// m += coeff * P without forming P densely.
void add_pauli_term(DenseOperator& m, Complex coeff, std::initializer_list<PauliFactor> factors);

// Tr(P A) / 2^N.
Complex pauli_coefficient(const DenseOperator& a, std::span<const PauliFactor> factors);
Complex pauli_coefficient(const DenseOperator& a, std::initializer_list<PauliFactor> factors);

DenseOperator commutator(const DenseOperator& a, const DenseOperator& b);

// Normalized Hilbert-Schmidt norm squared, Tr(A^dagger A) / d.
double hs_norm_squared(const DenseOperator& a);

// General matrix exponential (Pade scaling and squaring).
DenseOperator expm(const DenseOperator& a);

// exp(-i t H) for Hermitian H via its eigendecomposition.
DenseOperator hermitian_expm(const DenseOperator& h, double t);

// Hermitian G with U = exp(-i G); eigenphases taken in [-pi, pi).
DenseOperator unitary_generator(const DenseOperator& u);

// min over global phase of the spectral norm of U - e^{i a} V; both unitary.
double phase_invariant_distance(const DenseOperator& u, const DenseOperator& v);

// max |(U^dagger U - I)_{ij}|
double unitarity_defect(const DenseOperator& u);

// max |(H - H^dagger)_{ij}|
double hermiticity_defect(const DenseOperator& h);

DenseOperator hadamard_all(int n_qubits);

// Throws CapabilityError when n_qubits > limit.
void require_dense_capacity(int n_qubits, int limit, const char* what);

inline std::uint64_t dimension_of(int n_qubits) { return std::uint64_t{1} << n_qubits; }

}  // namespace dacqo
