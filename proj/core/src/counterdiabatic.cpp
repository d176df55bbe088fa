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

#include "dacqo/counterdiabatic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dacqo/error.hpp"

namespace dacqo {
namespace {

constexpr double kPi = std::numbers::pi;

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ArgumentError("lambda " + std::to_string(lambda) + " outside [0, 1]");
  }
}

DenseOperator zeros(int n) {
  const auto dim = static_cast<Eigen::Index>(dimension_of(n));
  return DenseOperator::Zero(dim, dim);
}

void add_driver(DenseOperator& m, int n, double coeff, Pauli axis) {
  for (int q = 0; q < n; ++q) add_pauli_term(m, coeff, {{q, axis}});
}

// sum h_i Y_i + sum J_ij (Y_i P_j + P_i Y_j), P = Z in the lab frame, X in the Hadamard frame.
void add_cd_terms(DenseOperator& m, const IsingProblem& problem, double coeff, Pauli partner) {
  for (int q = 0; q < problem.n_qubits(); ++q) {
    const double h = problem.fields()[static_cast<std::size_t>(q)];
    if (h != 0.0) add_pauli_term(m, coeff * h, {{q, Pauli::Y}});
  }
  for (const auto& c : problem.couplings()) {
    if (c.value == 0.0) continue;
    add_pauli_term(m, coeff * c.value, {{c.i, Pauli::Y}, {c.j, partner}});
    add_pauli_term(m, coeff * c.value, {{c.i, partner}, {c.j, Pauli::Y}});
  }
}

// The CD operator multiplies every term by h or J, so it vanishes with them.
bool has_terms(const IsingProblem& problem) {
  for (double h : problem.fields()) {
    if (h != 0.0) return true;
  }
  for (const auto& c : problem.couplings()) {
    if (c.value != 0.0) return true;
  }
  return false;
}

}  // namespace

ScheduleProfile parse_schedule_profile(std::string_view name) {
  if (name == "sin2sin2") return ScheduleProfile::sin2sin2;
  if (name == "linear-smoothstep") return ScheduleProfile::linear_smoothstep;
  throw ArgumentError("unknown schedule profile '" + std::string(name) + "'");
}

std::string to_string(ScheduleProfile profile) {
  return profile == ScheduleProfile::sin2sin2 ? "sin2sin2" : "linear-smoothstep";
}

Schedule::Schedule(double total_time, int trotter_steps, ScheduleProfile profile)
    : total_time_(total_time), steps_(trotter_steps), profile_(profile) {
  if (!(std::isfinite(total_time_) && total_time_ > 0.0)) throw ArgumentError("total time T must be positive");
  if (steps_ < 1) throw ArgumentError("trotter steps must be >= 1");
}

double Schedule::lambda(double t) const {
  const double tau = std::clamp(t, 0.0, total_time_) / total_time_;
  if (profile_ == ScheduleProfile::linear_smoothstep) return tau * tau * (3.0 - 2.0 * tau);
  const double v = std::sin(kPi * tau / 2.0);
  const double s = std::sin(kPi / 2.0 * v * v);
  return s * s;
}

double Schedule::lambda_dot(double t) const {
  const double tau = std::clamp(t, 0.0, total_time_) / total_time_;
  if (profile_ == ScheduleProfile::linear_smoothstep) return 6.0 * tau * (1.0 - tau) / total_time_;
  const double v = kPi * tau / 2.0;
  const double u = kPi / 2.0 * std::sin(v) * std::sin(v);
  return std::sin(2.0 * u) * (kPi / 2.0) * std::sin(2.0 * v) * kPi / (2.0 * total_time_);
}

double Schedule::midpoint(int step) const {
  if (step < 1 || step > steps_) {
    throw ArgumentError("step index " + std::to_string(step) + " outside [1, " + std::to_string(steps_) + "]");
  }
  return (step - 0.5) * dt();
}

DenseOperator problem_hamiltonian(const IsingProblem& problem) {
  const int n = problem.n_qubits();
  require_dense_capacity(n, kMaxDenseQubits, "problem_hamiltonian");
  DenseOperator h = zeros(n);
  for (Eigen::Index b = 0; b < h.rows(); ++b) h(b, b) = basis_energy(problem, static_cast<std::uint64_t>(b));
  return h;
}

DenseOperator adiabatic_hamiltonian(const IsingProblem& problem, double lambda) {
  check_lambda(lambda);
  DenseOperator h = lambda * problem_hamiltonian(problem);
  add_driver(h, problem.n_qubits(), 1.0 - lambda, Pauli::X);
  return h;
}

AgpTerms agp_terms(const IsingProblem& problem, double lambda) {
  check_lambda(lambda);
  const int n = problem.n_qubits();
  double h2 = 0.0, h4 = 0.0;
  for (double h : problem.fields()) {
    h2 += h * h;
    h4 += h * h * h * h;
  }
  double j2 = 0.0, j4 = 0.0, hj = 0.0;
  std::vector<double> row2(static_cast<std::size_t>(n), 0.0), row4(static_cast<std::size_t>(n), 0.0);
  for (const auto& c : problem.couplings()) {
    const double s = c.value * c.value;
    j2 += s;
    j4 += s * s;
    const double hi = problem.fields()[static_cast<std::size_t>(c.i)];
    const double hj_ = problem.fields()[static_cast<std::size_t>(c.j)];
    hj += (hi * hi + hj_ * hj_) * s;
    row2[static_cast<std::size_t>(c.i)] += s;
    row2[static_cast<std::size_t>(c.j)] += s;
    row4[static_cast<std::size_t>(c.i)] += s * s;
    row4[static_cast<std::size_t>(c.j)] += s * s;
  }
  // sum_{i<j<k} (J_ij^2 J_ik^2 + J_ij^2 J_jk^2 + J_ik^2 J_jk^2), grouped by the shared vertex.
  double tri = 0.0;
  for (int v = 0; v < n; ++v) {
    tri += 0.5 * (row2[static_cast<std::size_t>(v)] * row2[static_cast<std::size_t>(v)] - row4[static_cast<std::size_t>(v)]);
  }
  // Sums over i != j count each unordered pair twice.
  AgpTerms t;
  t.numerator = h2 + 2.0 * j2;
  const double a = 1.0 - lambda;
  t.denominator = a * a * (h2 + 8.0 * j2) + lambda * lambda * (h4 + 2.0 * j4 + 6.0 * hj + 6.0 * tri);
  return t;
}

double alpha1_analytic(const IsingProblem& problem, double lambda) {
  const AgpTerms t = agp_terms(problem, lambda);
  if (!(t.denominator > 0.0)) {
    throw SingularityError("alpha_1 denominator vanishes at lambda = " + std::to_string(lambda));
  }
  return -0.25 * t.numerator / t.denominator;
}

double AgpOracle::alpha1() const {
  if (!(gamma2 > 0.0)) throw SingularityError("second nested commutator vanishes");
  return -gamma1 / gamma2;
}

AgpOracle agp_oracle(const IsingProblem& problem, double lambda) {
  check_lambda(lambda);
  require_dense_capacity(problem.n_qubits(), kMaxOracleQubits, "alpha1_oracle");
  const DenseOperator hf = problem_hamiltonian(problem);
  DenseOperator hx = zeros(problem.n_qubits());
  add_driver(hx, problem.n_qubits(), 1.0, Pauli::X);
  const DenseOperator h = lambda * hf + (1.0 - lambda) * hx;
  const DenseOperator dh = hf - hx;
  AgpOracle o;
  o.o1 = commutator(h, dh);
  const DenseOperator o2 = commutator(h, o.o1);
  o.gamma1 = hs_norm_squared(o.o1);
  o.gamma2 = hs_norm_squared(o2);
  return o;
}

double alpha1_oracle(const IsingProblem& problem, double lambda) { return agp_oracle(problem, lambda).alpha1(); }

DenseOperator cd_generator(const IsingProblem& problem, double lambda) {
  require_dense_capacity(problem.n_qubits(), kMaxDenseQubits, "cd_generator");
  DenseOperator g = zeros(problem.n_qubits());
  if (!has_terms(problem)) return g;
  const double alpha = alpha1_analytic(problem, lambda);
  add_cd_terms(g, problem, 2.0 * alpha, Pauli::Z);
  return g;
}

DenseOperator full_hamiltonian(const IsingProblem& problem, const Schedule& schedule, double t, bool include_cd) {
  const double lambda = schedule.lambda(t);
  DenseOperator h = adiabatic_hamiltonian(problem, lambda);
  const double ldot = schedule.lambda_dot(t);
  if (include_cd && ldot != 0.0) h += ldot * cd_generator(problem, lambda);
  return h;
}

DenseOperator rotated_full_hamiltonian(const IsingProblem& problem, const Schedule& schedule, double t,
                                       bool include_cd) {
  if (!(t >= 0.0 && t <= schedule.total_time())) throw ArgumentError("time outside [0, T]");
  const int n = problem.n_qubits();
  require_dense_capacity(n, kMaxDenseQubits, "rotated_full_hamiltonian");
  const double lambda = schedule.lambda(t);
  DenseOperator h = zeros(n);
  for (const auto& c : problem.couplings()) {
    if (c.value != 0.0) add_pauli_term(h, lambda * c.value, {{c.i, Pauli::X}, {c.j, Pauli::X}});
  }
  for (int q = 0; q < n; ++q) {
    const double f = problem.fields()[static_cast<std::size_t>(q)];
    if (f != 0.0) add_pauli_term(h, lambda * f, {{q, Pauli::X}});
  }
  add_driver(h, n, 1.0 - lambda, Pauli::Z);
  const double ldot = schedule.lambda_dot(t);
  if (include_cd && ldot != 0.0 && has_terms(problem)) {
    // Hadamard conjugation sends Y to -Y; the frame coefficient is -2 lambda_dot alpha_1 > 0.
    const double coeff = -2.0 * ldot * alpha1_analytic(problem, lambda);
    add_cd_terms(h, problem, coeff, Pauli::X);
  }
  return h;
}

DenseOperator exact_evolution(const IsingProblem& problem, const Schedule& schedule, int steps, bool include_cd) {
  require_dense_capacity(problem.n_qubits(), kMaxEvolutionQubits, "exact_evolution");
  if (steps < 1) throw ArgumentError("exact_evolution needs steps >= 1");
  const double dt = schedule.total_time() / steps;
  const auto dim = static_cast<Eigen::Index>(dimension_of(problem.n_qubits()));
  DenseOperator u = DenseOperator::Identity(dim, dim);
  for (int k = 0; k < steps; ++k) {
    const double t = (k + 0.5) * dt;
    const DenseOperator h = rotated_full_hamiltonian(problem, schedule, t, include_cd);
    u = expm(Complex(0.0, -dt) * h) * u;
  }
  return u;
}

}  // namespace dacqo
