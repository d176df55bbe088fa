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

#include <string>
#include <string_view>
#include <vector>

#include "dacqo/counterdiabatic.hpp"
#include "dacqo/linalg.hpp"
#include "dacqo/problem.hpp"

namespace dacqo {

enum class GateKind { gms, gms_dag, single };
enum class Axis { x, y, z };

std::string to_string(GateKind kind);
std::string to_string(Axis axis);
GateKind parse_gate_kind(std::string_view name);
Axis parse_axis(std::string_view name);

// gms:     exp(-i theta/4 (cos phi S_x + sin phi S_y)^2) on `qubits`
// gms_dag: inverse of gms(theta, phi)
// single:  exp(-i theta/2 sigma_axis) on qubits[0]
struct Gate {
  GateKind kind = GateKind::single;
  std::vector<int> qubits;
  double theta = 0.0;
  double phi = 0.0;
  Axis axis = Axis::z;

  static Gate gms(std::vector<int> qubits, double theta, double phi);
  static Gate gms_dag(std::vector<int> qubits, double theta, double phi);
  static Gate rotation(int qubit, Axis axis, double theta);

  bool is_entangling() const { return kind != GateKind::single; }
  int arity() const { return static_cast<int>(qubits.size()); }

  friend bool operator==(const Gate&, const Gate&) = default;
};

inline constexpr int kMaxGmsQubits = 10;

DenseOperator gms_unitary(int k, double theta, double phi);
DenseOperator rotation_unitary(Axis axis, double theta);
// Local unitary of a gate; local bit j acts on gate.qubits[j].
DenseOperator gate_unitary(const Gate& gate);

// Per-pair generator of gms(theta, phi): theta/2 (c^2 XX + cs (XY + YX) + s^2 YY).
struct PairGenerator {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;
};
PairGenerator gms_pair_generator(double theta, double phi);

// Angles of one trotter step (homogeneous problems).
struct AngleSet {
  double theta_xx = 0.0;
  double theta_xy = 0.0;
  double theta_x = 0.0;
  double theta_y = 0.0;
  double theta_z = 0.0;
};

// Frame coefficients at the midpoint of a step. cd = 2 lambda_dot alpha_1' with
// alpha_1' = -alpha_1 (Hadamard frame sign).
struct StepCoefficients {
  double time = 0.0;
  double lambda = 0.0;
  double lambda_dot = 0.0;
  double cd = 0.0;
  double dt = 0.0;

  double xx(double coupling) const { return lambda * coupling * dt; }
  double xy(double coupling) const { return cd * coupling * dt; }
  double x(double field) const { return lambda * field * dt; }
  double y(double field) const { return cd * field * dt; }
  double z() const { return (1.0 - lambda) * dt; }
};

StepCoefficients step_coefficients(const IsingProblem& problem, const Schedule& schedule, int step,
                                   bool include_cd = true);
AngleSet angle_map(const IsingProblem& problem, const Schedule& schedule, int step, bool include_cd = true);

struct GmsPrescription {
  GateKind kind = GateKind::gms;
  double theta = 0.0;
  double phi = 0.0;
};

inline constexpr double kAngleEpsilon = 1e-14;

// Gates realizing theta_xx XX + theta_xy (XY + YX) per pair; YY removed by a conjugate GMS.
std::vector<GmsPrescription> solve_gms_angles(double theta_xx, double theta_xy);

struct PauliTerm {
  double coefficient = 0.0;
  std::vector<PauliFactor> factors;
};
using PauliExpansion = std::vector<PauliTerm>;

// V Z_l V^dagger with V = prod_{j != l} exp(-i theta/4 X_l X_j) on k qubits, i.e. the
// XX part of gms_unitary(k, theta/2, 0) that touches l. Closed form:
//   Z_l prod_j (cos(theta/2) + i sin(theta/2) X_l X_j)
PauliExpansion gms_conjugate_pauli(int k, double theta, int target_qubit);

DenseOperator expansion_to_dense(int n_qubits, const PauliExpansion& expansion);

}  // namespace dacqo
