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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dacqo/bench/config.hpp"
#include "dacqo/bench/report.hpp"
#include "dacqo/problem.hpp"
#include "dacqo/synthesis.hpp"

namespace dacqo::bench {

struct BuiltProblem {
  IsingProblem problem;
  std::optional<Graph> graph;  // MIS sources
};

// Random sources draw from derive_seed(seed, n); file sources ignore n.
BuiltProblem build_problem(const ProblemConfig& config, int n, std::uint64_t seed);

// Pauli error probability of a k-qubit stochastic channel with the given average gate fidelity.
double entangling_rate_for_fidelity(double average_fidelity, int qubits = 2);

struct SweepRow {
  int n = 0;
  double c = 0.0;
  double fidelity = 1.0;
  double success_probability = 0.0;
  double standard_error = 0.0;
  double digital_baseline = 0.0;
  double digital_standard_error = 0.0;
  double ideal_success = 0.0;
  double threshold = 0.0;
};

// Rows sorted by (N, fidelity). Every c point of one N reuses the same noise seed.
std::vector<SweepRow> fidelity_sweep_rows(const ExperimentConfig& config);

// Fidelity where `success - target` turns nonnegative for good, interpolated linearly between
// the bracketing points of `rows` (one N, sorted by fidelity). Empty when not bracketed.
std::optional<double> crossover_fidelity(const std::vector<SweepRow>& rows, bool against_threshold);

struct CommandOutput {
  CsvTable table{{}};
  std::string summary_json = "{}";
  std::vector<std::pair<std::string, CsvTable>> siblings;  // file suffix, table
  std::vector<std::pair<std::string, std::string>> files;  // file suffix with extension, contents
  std::string text;                                        // human-readable summary
};

Circuit build_circuit(const ExperimentConfig& config, const IsingProblem& problem);

CommandOutput cmd_solve(const ExperimentConfig& config);
CommandOutput cmd_fidelity_sweep(const ExperimentConfig& config);
CommandOutput cmd_scaling(const ExperimentConfig& config);
CommandOutput cmd_emit_circuit(const ExperimentConfig& config);
CommandOutput cmd_fit(const ExperimentConfig& config);
CommandOutput run_command(const ExperimentConfig& config);

// Writes the main CSV, sibling CSVs, extra files and a JSON sidecar per CSV.
void write_outputs(const ExperimentConfig& config, const CommandOutput& output);

std::string bitstring(std::uint64_t index, int n_qubits);

}  // namespace dacqo::bench
