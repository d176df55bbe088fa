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

#include "dacqo/linalg.hpp"
#include "dacqo/problem.hpp"

namespace dacqo {

enum class ScheduleProfile { sin2sin2, linear_smoothstep };

ScheduleProfile parse_schedule_profile(std::string_view name);
std::string to_string(ScheduleProfile profile);

class Schedule {
 public:
  Schedule(double total_time, int trotter_steps, ScheduleProfile profile = ScheduleProfile::sin2sin2);

  double total_time() const { return total_time_; }
  int trotter_steps() const { return steps_; }
  ScheduleProfile profile() const { return profile_; }
  double dt() const { return total_time_ / steps_; }

  // t is clamped to [0, T].
  double lambda(double t) const;
  double lambda_dot(double t) const;
  // Midpoint of step s in [1, n]: (s - 1/2) T / n.
  double midpoint(int step) const;

 private:
  double total_time_;
  int steps_;
  ScheduleProfile profile_;
};

DenseOperator problem_hamiltonian(const IsingProblem& problem);
DenseOperator adiabatic_hamiltonian(const IsingProblem& problem, double lambda);

// Closed-form sums behind alpha_1; Gamma_1 = 4 * numerator, Gamma_2 = 16 * denominator.
struct AgpTerms {
  double numerator = 0.0;
  double denominator = 0.0;
  double gamma1() const { return 4.0 * numerator; }
  double gamma2() const { return 16.0 * denominator; }
};

AgpTerms agp_terms(const IsingProblem& problem, double lambda);
double alpha1_analytic(const IsingProblem& problem, double lambda);

struct AgpOracle {
  double gamma1 = 0.0;  // |O_1|^2, normalized Hilbert-Schmidt
  double gamma2 = 0.0;  // |O_2|^2
  DenseOperator o1;
  double alpha1() const;
};

AgpOracle agp_oracle(const IsingProblem& problem, double lambda);
double alpha1_oracle(const IsingProblem& problem, double lambda);

// 2 alpha_1 [sum h_i Y_i + sum J_ij (Y_i Z_j + Z_i Y_j)]
DenseOperator cd_generator(const IsingProblem& problem, double lambda);

// H(t) = H_ad(lambda) + lambda_dot * cd_generator.
DenseOperator full_hamiltonian(const IsingProblem& problem, const Schedule& schedule, double t,
                               bool include_cd = true);

// Hadamard frame: H^{(x)N} H(t) H^{(x)N} written out term by term.
DenseOperator rotated_full_hamiltonian(const IsingProblem& problem, const Schedule& schedule, double t,
                                       bool include_cd = true);

// prod_k exp(-i H'(t_k) dt), later slices on the left, midpoint grid of `steps` slices.
DenseOperator exact_evolution(const IsingProblem& problem, const Schedule& schedule, int steps,
                              bool include_cd = true);

inline constexpr int kMaxOracleQubits = 8;
inline constexpr int kMaxEvolutionQubits = 10;

}  // namespace dacqo
