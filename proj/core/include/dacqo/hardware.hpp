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

#include <vector>

#include "dacqo/counterdiabatic.hpp"
#include "dacqo/problem.hpp"
#include "dacqo/synthesis.hpp"

namespace dacqo {

struct HardwareSpec {
  double t_multi = 930e-6;     // seconds per analog (multiqubit) layer
  double t_single = 130e-6;    // seconds per single-qubit layer
  double coherence_time = 1.0; // seconds
  int max_block = 4;

  void validate() const;
};

struct RuntimeReport {
  double runtime_seconds = 0.0;
  bool within_coherence = true;
  double enhancement_factor = 1.0;  // digital runtime / this runtime, when a baseline is known
};

double runtime_seconds(double multiqubit_layers, double single_qubit_layers, const HardwareSpec& spec);
RuntimeReport circuit_runtime(const DepthReport& report, const HardwareSpec& spec);
RuntimeReport circuit_runtime(const Circuit& circuit, const HardwareSpec& spec);
// Fills enhancement_factor = baseline / candidate runtime.
RuntimeReport compare_runtime(const Circuit& candidate, const Circuit& digital_baseline, const HardwareSpec& spec);

struct EnhancementEntry {
  int block_size = 0;
  double runtime_digital = 0.0;
  double runtime_daqc = 0.0;
  double ratio = 0.0;
};

// Synthesizes both circuits for each block size (block sizes above N are clamped to N).
std::vector<EnhancementEntry> enhancement_factor(const IsingProblem& problem, const Schedule& schedule,
                                                 const HardwareSpec& spec, const std::vector<int>& block_sizes);

// Closed-form runtimes for an all-to-all N-qubit problem over `steps` trotter steps.
struct AnalyticRuntime {
  int n = 0;
  double digital = 0.0;
  double daqc_homogeneous = 0.0;
  double daqc_inhomogeneous = 0.0;
};

AnalyticRuntime analytic_runtime(int n, int k, int steps, const HardwareSpec& spec);

}  // namespace dacqo
