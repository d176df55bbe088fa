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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dacqo {

struct Coupling {
  int i = 0;
  int j = 0;
  double value = 0.0;
};

// H_f = sum_{i<j} J_ij Z_i Z_j + sum_i h_i Z_i (+ offset, reported only).
// Couplings are stored with i < j, sorted, one entry per pair.
class IsingProblem {
 public:
  IsingProblem(int n_qubits, std::vector<Coupling> couplings, std::vector<double> fields,
               double offset = 0.0);

  // All-to-all uniform coupling J and field h.
  static IsingProblem homogeneous(int n_qubits, double coupling, double field);

  int n_qubits() const { return n_; }
  const std::vector<Coupling>& couplings() const { return couplings_; }
  const std::vector<double>& fields() const { return fields_; }
  double offset() const { return offset_; }

  // J_ij for any i != j; zero when the pair is not stored.
  double coupling(int i, int j) const;
  bool is_homogeneous() const;
  // Every unordered pair carries a nonzero coupling.
  bool is_complete() const;

  // Spin of qubit q in basis state `index`: bit 0 -> +1, bit 1 -> -1.
  static int spin_of(std::uint64_t index, int q) { return ((index >> q) & 1) ? -1 : 1; }

 private:
  int n_;
  std::vector<Coupling> couplings_;
  std::vector<double> fields_;
  double offset_;
  std::vector<double> dense_;  // row-major N x N, symmetric
};

double classical_energy(const IsingProblem& problem, const std::vector<int>& spins);
// Energy of the basis state `index` (excluding offset).
double basis_energy(const IsingProblem& problem, std::uint64_t index);
// Energies of all 2^N basis states; N <= 24.
std::vector<double> all_basis_energies(const IsingProblem& problem);

inline constexpr int kMaxEnumerationQubits = 24;

struct GroundTruth {
  double energy = 0.0;                   // min of H_f, offset excluded
  std::vector<std::uint64_t> indices;    // optimal basis states, ascending
  std::vector<std::vector<int>> bitstrings;  // same optima as +-1 spins
};

GroundTruth brute_force_ground_state(const IsingProblem& problem);

std::vector<int> spins_from_index(std::uint64_t index, int n_qubits);
std::uint64_t index_from_spins(const std::vector<int>& spins);

struct Graph {
  int n_nodes = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<double> weights;

  Graph() = default;
  // Validates and normalizes edges to (min, max), sorted, deduplicated.
  Graph(int n_nodes, std::vector<std::pair<int, int>> edges, std::vector<double> weights);

  int degree(int node) const;
  bool is_independent(const std::vector<int>& nodes) const;
};

double default_penalty(const Graph& graph);

// x_i = (1 - s_i) / 2; objective -sum w_i x_i + P sum_E x_i x_j.
IsingProblem mis_to_ising(const Graph& graph, double penalty);
IsingProblem mis_to_ising(const Graph& graph);

// Nodes selected (bit set, spin -1) in a basis state.
std::vector<int> mis_selection(std::uint64_t index, int n_nodes);
double selection_weight(const Graph& graph, const std::vector<int>& nodes);

enum class InstanceMode { homogeneous, mixed, fully_nonuniform };

InstanceMode parse_instance_mode(std::string_view name);
std::string to_string(InstanceMode mode);

IsingProblem random_spin_glass(int n, std::uint64_t seed, InstanceMode mode);

// Erdos-Renyi graph; weights: homogeneous -> 1, mixed -> {0.5, 1}, fully_nonuniform -> U(0.1, 1).
Graph random_graph(int n, double edge_probability, std::uint64_t seed, InstanceMode mode);

}  // namespace dacqo
