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

#include "dacqo/hardware.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dacqo/error.hpp"

namespace dacqo {

void HardwareSpec::validate() const {
  if (!(t_multi > 0.0) || !(t_single > 0.0) || !(coherence_time > 0.0)) {
    throw ArgumentError("hardware durations must be positive");
  }
  if (max_block < 2) throw ArgumentError("hardware max_block must be >= 2");
}

double runtime_seconds(double multiqubit_layers, double single_qubit_layers, const HardwareSpec& spec) {
  return spec.t_multi * multiqubit_layers + spec.t_single * single_qubit_layers;
}

RuntimeReport circuit_runtime(const DepthReport& report, const HardwareSpec& spec) {
  spec.validate();
  RuntimeReport r;
  r.runtime_seconds = runtime_seconds(report.multiqubit_layers, report.single_qubit_layers, spec);
  r.within_coherence = r.runtime_seconds <= spec.coherence_time;
  return r;
}

RuntimeReport circuit_runtime(const Circuit& circuit, const HardwareSpec& spec) {
  return circuit_runtime(depth_report(circuit), spec);
}

RuntimeReport compare_runtime(const Circuit& candidate, const Circuit& digital_baseline, const HardwareSpec& spec) {
  RuntimeReport r = circuit_runtime(candidate, spec);
  const double base = circuit_runtime(digital_baseline, spec).runtime_seconds;
  if (r.runtime_seconds > 0.0) r.enhancement_factor = base / r.runtime_seconds;
  return r;
}

std::vector<EnhancementEntry> enhancement_factor(const IsingProblem& problem, const Schedule& schedule,
                                                 const HardwareSpec& spec, const std::vector<int>& block_sizes) {
  spec.validate();
  if (block_sizes.empty()) throw ArgumentError("no block sizes given");
  const Circuit digital = synthesize_digital_baseline(problem, schedule);
  const double rd = circuit_runtime(digital, spec).runtime_seconds;
  std::vector<EnhancementEntry> out;
  for (int k : block_sizes) {
    if (k < 2 || k > 6) throw ArgumentError("block size " + std::to_string(k) + " outside {2..6}");
    const int kk = std::min(k, problem.n_qubits());
    const Circuit daqc = synthesize(problem, schedule, std::max(2, kk));
    const double ra = circuit_runtime(daqc, spec).runtime_seconds;
    out.push_back({k, rd, ra, ra > 0.0 ? rd / ra : 1.0});
  }
  return out;
}

AnalyticRuntime analytic_runtime(int n, int k, int steps, const HardwareSpec& spec) {
  spec.validate();
  if (steps < 1) throw ArgumentError("steps must be >= 1");
  AnalyticRuntime r;
  r.n = n;
  const LayerSplit d = analytic_digital_split(n);
  r.digital = steps * runtime_seconds(d.multiqubit, d.single_qubit, spec);
  const int kk = std::min(k, n);
  if (kk >= 2) {
    const LayerSplit h = analytic_homogeneous_split(n, kk);
    const LayerSplit i = analytic_inhomogeneous_split(n, kk);
    r.daqc_homogeneous = steps * runtime_seconds(h.multiqubit, h.single_qubit, spec);
    r.daqc_inhomogeneous = steps * runtime_seconds(i.multiqubit, i.single_qubit, spec);
  } else {
    r.daqc_homogeneous = r.daqc_inhomogeneous = r.digital;
  }
  return r;
}

}  // namespace dacqo
