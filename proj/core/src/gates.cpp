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

#include "dacqo/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "dacqo/error.hpp"

namespace dacqo {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::gms: return "gms";
    case GateKind::gms_dag: return "gms_dag";
    case GateKind::single: return "1q";
  }
  return "?";
}

std::string to_string(Axis axis) {
  switch (axis) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    case Axis::z: return "z";
  }
  return "?";
}

GateKind parse_gate_kind(std::string_view name) {
  if (name == "gms") return GateKind::gms;
  if (name == "gms_dag") return GateKind::gms_dag;
  if (name == "1q") return GateKind::single;
  throw ArgumentError("unknown gate kind '" + std::string(name) + "'");
}

Axis parse_axis(std::string_view name) {
  if (name == "x") return Axis::x;
  if (name == "y") return Axis::y;
  if (name == "z") return Axis::z;
  throw ArgumentError("unknown axis '" + std::string(name) + "'");
}

namespace {

void check_gms_qubits(const std::vector<int>& qubits) {
  if (qubits.size() < 2) throw ArgumentError("GMS gate needs at least two qubits");
  std::set<int> s(qubits.begin(), qubits.end());
  if (s.size() != qubits.size()) throw ArgumentError("GMS gate qubits must be distinct");
  if (*s.begin() < 0) throw ArgumentError("negative qubit index");
}

}  // namespace

Gate Gate::gms(std::vector<int> qubits, double theta, double phi) {
  check_gms_qubits(qubits);
  return Gate{GateKind::gms, std::move(qubits), theta, phi, Axis::z};
}

Gate Gate::gms_dag(std::vector<int> qubits, double theta, double phi) {
  check_gms_qubits(qubits);
  return Gate{GateKind::gms_dag, std::move(qubits), theta, phi, Axis::z};
}

Gate Gate::rotation(int qubit, Axis axis, double theta) {
  if (qubit < 0) throw ArgumentError("negative qubit index");
  return Gate{GateKind::single, {qubit}, theta, 0.0, axis};
}

DenseOperator gms_unitary(int k, double theta, double phi) {
  if (k < 2) throw ArgumentError("gms_unitary needs k >= 2");
  require_dense_capacity(k, kMaxGmsQubits, "gms_unitary");
  const auto dim = static_cast<Eigen::Index>(dimension_of(k));
  DenseOperator s = DenseOperator::Zero(dim, dim);
  const double c = std::cos(phi), sn = std::sin(phi);
  for (int q = 0; q < k; ++q) {
    add_pauli_term(s, c, {{q, Pauli::X}});
    add_pauli_term(s, sn, {{q, Pauli::Y}});
  }
  return hermitian_expm(s * s, theta / 4.0);
}

DenseOperator rotation_unitary(Axis axis, double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  DenseOperator u(2, 2);
  switch (axis) {
    case Axis::x:
      u << Complex(c, 0), Complex(0, -s), Complex(0, -s), Complex(c, 0);
      break;
    case Axis::y:
      u << Complex(c, 0), Complex(-s, 0), Complex(s, 0), Complex(c, 0);
      break;
    case Axis::z:
      u << Complex(c, -s), Complex(0, 0), Complex(0, 0), Complex(c, s);
      break;
  }
  return u;
}

DenseOperator gate_unitary(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::gms: return gms_unitary(gate.arity(), gate.theta, gate.phi);
    case GateKind::gms_dag: return gms_unitary(gate.arity(), gate.theta, gate.phi).adjoint();
    case GateKind::single: return rotation_unitary(gate.axis, gate.theta);
  }
  throw ArgumentError("unknown gate kind");
}

PairGenerator gms_pair_generator(double theta, double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  return {theta / 2.0 * c * c, theta / 2.0 * c * s, theta / 2.0 * s * s};
}

StepCoefficients step_coefficients(const IsingProblem& problem, const Schedule& schedule, int step,
                                   bool include_cd) {
  StepCoefficients sc;
  sc.time = schedule.midpoint(step);
  sc.lambda = schedule.lambda(sc.time);
  sc.lambda_dot = schedule.lambda_dot(sc.time);
  sc.dt = schedule.dt();
  const bool trivial = std::all_of(problem.fields().begin(), problem.fields().end(), [](double h) { return h == 0.0; }) &&
                       std::all_of(problem.couplings().begin(), problem.couplings().end(),
                                   [](const Coupling& c) { return c.value == 0.0; });
  if (include_cd && sc.lambda_dot != 0.0 && !trivial) {
    sc.cd = -2.0 * sc.lambda_dot * alpha1_analytic(problem, sc.lambda);
  }
  return sc;
}

AngleSet angle_map(const IsingProblem& problem, const Schedule& schedule, int step, bool include_cd) {
  if (!problem.is_homogeneous()) throw ArgumentError("angle_map needs a homogeneous problem");
  const double j = problem.couplings().empty() ? 0.0 : problem.couplings().front().value;
  const double h = problem.fields().front();
  const StepCoefficients sc = step_coefficients(problem, schedule, step, include_cd);
  return {sc.xx(j), sc.xy(j), sc.x(h), sc.y(h), sc.z()};
}

std::vector<GmsPrescription> solve_gms_angles(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw ArgumentError("solve_gms_angles: non-finite target");
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  if (std::abs(a) < kAngleEpsilon && std::abs(b) < kAngleEpsilon) return {};
  if (std::abs(b) < kAngleEpsilon) return {{GateKind::gms, 2.0 * a, 0.0}};
  if (std::abs(a) < kAngleEpsilon) {
    // phi = pi/4 gives XX = XY = YY = theta/4; strip XX and YY with conjugate gates.
    return {{GateKind::gms, 4.0 * b, std::numbers::pi / 4.0},
            {GateKind::gms_dag, 2.0 * (b - a), 0.0},
            {GateKind::gms_dag, 2.0 * b, kHalfPi}};
  }
  const double phi = std::atan(b / a);
  const double c = std::cos(phi), s = std::sin(phi);
  const double theta = 2.0 * a / (c * c);
  return {{GateKind::gms, theta, phi}, {GateKind::gms_dag, theta * s * s, kHalfPi}};
}

PauliExpansion gms_conjugate_pauli(int k, double theta, int target) {
  if (k < 2 || k > 5) throw CapabilityError("gms_conjugate_pauli supports 2 <= k <= 5");
  if (target < 0 || target >= k) throw ArgumentError("target qubit outside the block");
  std::vector<int> others;
  for (int q = 0; q < k; ++q) {
    if (q != target) others.push_back(q);
  }
  const int m = static_cast<int>(others.size());
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  PauliExpansion out;
  // Subsets by size, then lexicographically; size n picks X on n partners.
  for (int n = 0; n <= m; ++n) {
    std::vector<bool> pick(static_cast<std::size_t>(m), false);
    std::fill(pick.begin(), pick.begin() + n, true);
    do {
      PauliTerm term;
      const bool odd = n % 2 == 1;
      // Z i^n for even n; Z X = i Y adds one more power of i for odd n.
      const int power = odd ? n + 1 : n;
      const double sign = (power / 2) % 2 == 0 ? 1.0 : -1.0;
      term.coefficient = sign * std::pow(c, m - n) * std::pow(s, n);
      term.factors.push_back({target, odd ? Pauli::Y : Pauli::Z});
      for (int idx = 0; idx < m; ++idx) {
        if (pick[static_cast<std::size_t>(idx)]) term.factors.push_back({others[static_cast<std::size_t>(idx)], Pauli::X});
      }
      if (term.coefficient != 0.0) out.push_back(std::move(term));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

DenseOperator expansion_to_dense(int n_qubits, const PauliExpansion& expansion) {
  const auto dim = static_cast<Eigen::Index>(dimension_of(n_qubits));
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (const auto& t : expansion) {
    m += t.coefficient * pauli_string(n_qubits, std::span<const PauliFactor>(t.factors));
  }
  return m;
}

}  // namespace dacqo
