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

#include "dacqo/json_io.hpp"

#include <algorithm>
#include <string>

#include "dacqo/error.hpp"
#include "json.hpp"

namespace dacqo {
namespace {

using nlohmann::json;

json parse(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    const auto nl = text.rfind('\n', upto == 0 ? 0 : upto - 1);
    const auto col = nl == std::string_view::npos || upto == 0 ? upto + 1 : upto - nl;
    throw ConfigError(std::string(what) + ": JSON syntax error at line " + std::to_string(line) + ", column " +
                      std::to_string(col));
  }
}

template <typename T>
T field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ConfigError(std::string(what) + ": missing field \"" + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string(what) + ": field \"" + key + "\" has the wrong type");
  }
}

template <typename T>
T field_or(const json& j, const char* key, T fallback, const char* what) {
  if (!j.contains(key)) return fallback;
  return field<T>(j, key, what);
}

json gate_json(const Gate& g) {
  json j;
  j["kind"] = to_string(g.kind);
  j["qubits"] = g.qubits;
  j["theta"] = g.theta;
  if (g.kind == GateKind::single) {
    j["axis"] = to_string(g.axis);
  } else {
    j["phi"] = g.phi;
  }
  return j;
}

Gate gate_of(const json& j) {
  const auto kind = parse_gate_kind(field<std::string>(j, "kind", "gate"));
  const auto qubits = field<std::vector<int>>(j, "qubits", "gate");
  const double theta = field<double>(j, "theta", "gate");
  if (kind == GateKind::single) {
    if (qubits.size() != 1) throw ConfigError("gate: single-qubit gate needs exactly one qubit");
    return Gate::rotation(qubits[0], parse_axis(field<std::string>(j, "axis", "gate")), theta);
  }
  const double phi = field<double>(j, "phi", "gate");
  return kind == GateKind::gms ? Gate::gms(qubits, theta, phi) : Gate::gms_dag(qubits, theta, phi);
}

}  // namespace

std::string problem_to_json(const IsingProblem& problem) {
  json j;
  j["n"] = problem.n_qubits();
  j["J"] = json::array();
  for (const auto& c : problem.couplings()) j["J"].push_back(json::array({c.i, c.j, c.value}));
  j["h"] = problem.fields();
  j["offset"] = problem.offset();
  return j.dump(2);
}

IsingProblem problem_from_json(std::string_view text) {
  const json j = parse(text, "problem");
  const int n = field<int>(j, "n", "problem");
  std::vector<Coupling> cs;
  if (j.contains("J")) {
    if (!j["J"].is_array()) throw ConfigError("problem: \"J\" must be an array of [i, j, value]");
    for (const auto& e : j["J"]) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() || !e[2].is_number()) {
        throw ConfigError("problem: each \"J\" entry must be [i, j, value]");
      }
      cs.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
    }
  }
  auto h = field<std::vector<double>>(j, "h", "problem");
  return IsingProblem(n, std::move(cs), std::move(h), field_or<double>(j, "offset", 0.0, "problem"));
}

std::string graph_to_json(const Graph& graph) {
  json j;
  j["n"] = graph.n_nodes;
  j["edges"] = json::array();
  for (auto [a, b] : graph.edges) j["edges"].push_back(json::array({a, b}));
  j["weights"] = graph.weights;
  return j.dump(2);
}

Graph graph_from_json(std::string_view text) {
  const json j = parse(text, "graph");
  const int n = field<int>(j, "n", "graph");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : field<json>(j, "edges", "graph")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ConfigError("graph: each edge must be [i, j]");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::vector<double> w = j.contains("weights") ? field<std::vector<double>>(j, "weights", "graph")
                                                : std::vector<double>(static_cast<std::size_t>(std::max(n, 0)), 1.0);
  return Graph(n, std::move(edges), std::move(w));
}

std::string gate_to_json(const Gate& gate) { return gate_json(gate).dump(); }

Gate gate_from_json(std::string_view text) { return gate_of(parse(text, "gate")); }

std::string circuit_to_json(const Circuit& circuit) {
  json j;
  j["width"] = circuit.width();
  j["step_starts"] = circuit.step_starts();
  j["layers"] = json::array();
  for (const auto& layer : circuit.layers()) {
    json l = json::array();
    for (const auto& g : layer) l.push_back(gate_json(g));
    j["layers"].push_back(std::move(l));
  }
  return j.dump(1);
}

Circuit circuit_from_json(std::string_view text) {
  const json j = parse(text, "circuit");
  Circuit c(field<int>(j, "width", "circuit"));
  const auto starts = field_or<std::vector<std::size_t>>(j, "step_starts", {}, "circuit");
  std::size_t next = 0;
  std::size_t index = 0;
  for (const auto& layer : field<json>(j, "layers", "circuit")) {
    while (next < starts.size() && starts[next] == index) {
      c.begin_step();
      ++next;
    }
    Layer l;
    for (const auto& g : layer) l.push_back(gate_of(g));
    if (l.empty()) throw ConfigError("circuit: empty layer");
    c.add_layer(std::move(l));
    ++index;
  }
  while (next < starts.size() && starts[next] == index) {
    c.begin_step();
    ++next;
  }
  if (next != starts.size()) throw ConfigError("circuit: step_starts out of order or out of range");
  return c;
}

std::string schedule_to_json(const Schedule& schedule) {
  json j;
  j["T"] = schedule.total_time();
  j["steps"] = schedule.trotter_steps();
  j["profile"] = to_string(schedule.profile());
  return j.dump();
}

Schedule schedule_from_json(std::string_view text) {
  const json j = parse(text, "schedule");
  return Schedule(field<double>(j, "T", "schedule"), field<int>(j, "steps", "schedule"),
                  parse_schedule_profile(field_or<std::string>(j, "profile", "sin2sin2", "schedule")));
}

std::string hardware_to_json(const HardwareSpec& spec) {
  json j;
  j["t_M_us"] = spec.t_multi * 1e6;
  j["t_S_us"] = spec.t_single * 1e6;
  j["coherence_s"] = spec.coherence_time;
  j["max_block"] = spec.max_block;
  return j.dump();
}

HardwareSpec hardware_from_json(std::string_view text) {
  const json j = parse(text, "hardware");
  HardwareSpec s;
  s.t_multi = field_or<double>(j, "t_M_us", 930.0, "hardware") * 1e-6;
  s.t_single = field_or<double>(j, "t_S_us", 130.0, "hardware") * 1e-6;
  s.coherence_time = field_or<double>(j, "coherence_s", 1.0, "hardware");
  s.max_block = field_or<int>(j, "max_block", 4, "hardware");
  s.validate();
  return s;
}

}  // namespace dacqo
