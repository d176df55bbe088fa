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
#include <map>
#include <span>
#include <vector>

#include "dacqo/gates.hpp"
#include "dacqo/linalg.hpp"
#include "dacqo/problem.hpp"
#include "dacqo/synthesis.hpp"

namespace dacqo {

inline constexpr int kMaxSimulationQubits = 14;

class StateVector {
 public:
  // |0...0>
  explicit StateVector(int n_qubits);
  static StateVector basis_state(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_; }
  std::uint64_t dimension() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  Complex amplitude(std::uint64_t index) const { return amps_[index]; }

  double norm_squared() const;
  double probability(std::uint64_t index) const { return std::norm(amps_[index]); }

  // Local bit j of u acts on qubits[j].
  void apply_matrix(std::span<const int> qubits, const DenseOperator& u);
  void apply_pauli(int qubit, Pauli p);
  void apply_hadamard_all();

 private:
  int n_;
  std::vector<Complex> amps_;
};

// Applies gate (or `override_unitary`, when given, on the gate's qubits).
void apply_gate(StateVector& state, const Gate& gate, const DenseOperator* override_unitary = nullptr);

struct NoiseModel {
  double analog_noise_amplitude = 0.0;  // c, random-matrix perturbation of each GMS gate
  double depolarizing_rate = 0.0;       // p, per touched qubit per gate
  double entangling_error_rate = 0.0;   // p_e, random non-identity Pauli after each GMS gate
  std::uint64_t seed = 0;

  void validate() const;
  bool is_noiseless() const {
    return analog_noise_amplitude == 0.0 && depolarizing_rate == 0.0 && entangling_error_rate == 0.0;
  }
};

// Polar projection of U + c G, G complex Gaussian with E|G_ij|^2 = 1.
DenseOperator perturb_analog_block(const DenseOperator& u, double c, std::uint64_t seed);

// Unitary factor W of the polar decomposition M = W P.
DenseOperator polar_unitary(const DenseOperator& m);

// |Tr(U^dagger V)| / d
double gate_fidelity(const DenseOperator& u, const DenseOperator& v);

// Initial state of every run: |1...1>, the ground state of sum Z_i.
StateVector initial_state(int n_qubits);

// Noiseless final state, measured basis unchanged (Hadamard frame).
StateVector final_state(const Circuit& circuit);

// Probability of the optimal set after the X-basis measurement.
double success_probability(const StateVector& frame_state, std::span<const std::uint64_t> optimal_indices);

struct RunOptions {
  int trajectories = 512;
  int shots = 0;         // > 0: sample bitstrings from the trajectory-averaged distribution
  int threads = 0;       // 0: hardware concurrency
};

struct RunResult {
  double success_probability = 0.0;
  double standard_error = 0.0;  // of the trajectory mean
  double gms_fidelity = 1.0;    // mean over perturbed analog blocks
  int trajectories = 0;
  std::map<std::uint64_t, int> shots;  // basis index -> count, X basis
};

RunResult run(const Circuit& circuit, std::span<const std::uint64_t> optimal_indices, const NoiseModel& noise,
              const RunOptions& options = {});

struct SweepPoint {
  double noise_amplitude = 0.0;
  double fidelity = 1.0;
  double success_probability = 0.0;
  double standard_error = 0.0;
};

// One run per c in `c_grid` (noise.analog_noise_amplitude is replaced); sorted by fidelity.
std::vector<SweepPoint> success_vs_fidelity_sweep(const IsingProblem& problem, const Schedule& schedule, int k,
                                                  const std::vector<double>& c_grid, const NoiseModel& noise,
                                                  const RunOptions& options = {});

}  // namespace dacqo
