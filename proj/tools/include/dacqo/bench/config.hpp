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
#include <optional>
#include <string>
#include <vector>

#include "dacqo/counterdiabatic.hpp"
#include "dacqo/hardware.hpp"
#include "dacqo/problem.hpp"
#include "dacqo/simulator.hpp"

namespace dacqo::bench {

enum class Command { solve, fidelity_sweep, scaling, emit_circuit, fit };

Command parse_command(std::string_view name);
std::string to_string(Command command);

enum class ProblemSource { homogeneous, spin_glass, mis, problem_file, graph_file };

ProblemSource parse_problem_source(std::string_view name);
std::string to_string(ProblemSource source);

struct ProblemConfig {
  ProblemSource source = ProblemSource::homogeneous;
  int n = 4;
  double coupling = 1.0;  // homogeneous J
  double field = 0.5;     // homogeneous h
  InstanceMode mode = InstanceMode::fully_nonuniform;
  double edge_probability = 0.5;
  std::string path;  // problem_file / graph_file
};

struct SweepConfig {
  std::vector<double> c_grid;
  std::vector<int> sizes;
  double digital_fidelity = 0.995;  // two-qubit gate fidelity of the digital baseline
  double threshold_fraction = 0.37;
};

struct ScalingConfig {
  int n_min = 4;
  int n_max = 100;
  int n_step = 4;
  int steps = 10;
  int mis_nodes = 16;
  double edge_probability = 0.5;
  std::vector<int> block_sizes;
};

struct FitConfig {
  std::string input;  // CSV with N and required_fidelity columns
  std::vector<std::pair<double, double>> points;
  int n_max = 52;
  int n_step = 4;
};

struct ExperimentConfig {
  Command command = Command::solve;
  std::uint64_t seed = 1;
  ProblemConfig problem;
  double total_time = 5.0;
  int trotter_steps = 10;
  ScheduleProfile profile = ScheduleProfile::sin2sin2;
  int block_size = 4;
  bool include_cd = true;
  bool digital = false;  // solve / emit-circuit on the digital baseline
  NoiseModel noise;      // seed is derived per run
  RunOptions run;
  HardwareSpec hardware;
  SweepConfig sweep;
  ScalingConfig scaling;
  FitConfig fit;
  std::string output;

  // Merged configuration as written, for the sidecar.
  std::string resolved_json;

  Schedule schedule() const { return Schedule(total_time, trotter_steps, profile); }
};

enum class ValueType { string, integer, real, boolean, real_list, int_list };

// A command-line value placed at a JSON pointer of the configuration document.
struct Override {
  std::string pointer;
  std::string value;
  ValueType type = ValueType::string;
};

// Reads the optional config file, applies overrides (flags win), validates. Errors are
// ConfigError; JSON syntax errors carry line and column.
ExperimentConfig load_config(Command command, const std::optional<std::string>& path,
                             const std::vector<Override>& overrides);
ExperimentConfig parse_config(Command command, std::string_view json_text, const std::vector<Override>& overrides = {});

// Relative paths inside the config are resolved against the working directory.
std::string read_text_file(const std::string& path);

}  // namespace dacqo::bench
