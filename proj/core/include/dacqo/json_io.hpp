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

#include "dacqo/counterdiabatic.hpp"
#include "dacqo/gates.hpp"
#include "dacqo/hardware.hpp"
#include "dacqo/problem.hpp"
#include "dacqo/synthesis.hpp"

namespace dacqo {

// JSON text in and out. Malformed text throws ConfigError with line and column;
// well-formed documents with bad content throw ArgumentError or ConfigError.

// {"n": int, "J": [[i, j, value]...], "h": [value...], "offset": value}
std::string problem_to_json(const IsingProblem& problem);
IsingProblem problem_from_json(std::string_view text);

// {"n": int, "edges": [[i, j]...], "weights": [...]}
std::string graph_to_json(const Graph& graph);
Graph graph_from_json(std::string_view text);

// {"kind": "gms"|"gms_dag"|"1q", "qubits": [...], "theta": r, "phi": r, "axis": "x"|"y"|"z"}
std::string gate_to_json(const Gate& gate);
Gate gate_from_json(std::string_view text);

// {"width": N, "step_starts": [...], "layers": [[gate...]...]}
std::string circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(std::string_view text);

// {"T": real, "steps": int, "profile": "sin2sin2" | "linear-smoothstep"}
std::string schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(std::string_view text);

// {"t_M_us": 930, "t_S_us": 130, "coherence_s": 1.0, "max_block": 4}
std::string hardware_to_json(const HardwareSpec& spec);
HardwareSpec hardware_from_json(std::string_view text);

}  // namespace dacqo
