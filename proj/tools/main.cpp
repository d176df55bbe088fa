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

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dacqo/bench/config.hpp"
#include "dacqo/bench/experiments.hpp"
#include "dacqo/error.hpp"

namespace {

using dacqo::bench::Override;
using dacqo::bench::ValueType;

struct Binding {
  std::string flag;
  std::string pointer;
  ValueType type;
  std::string help;
};

const std::vector<Binding>& bindings() {
  static const std::vector<Binding> b = {
      {"--output,-o", "/output", ValueType::string, "CSV output path (sidecar is <path>.json)"},
      {"--seed", "/seed", ValueType::integer, "master seed"},
      {"--source", "/problem/source", ValueType::string,
       "homogeneous | spin_glass | mis | problem_file | graph_file"},
      {"--n", "/problem/n", ValueType::integer, "number of qubits"},
      {"--coupling", "/problem/J", ValueType::real, "homogeneous coupling"},
      {"--field", "/problem/h", ValueType::real, "homogeneous field"},
      {"--mode", "/problem/mode", ValueType::string, "homogeneous | mixed | fully_nonuniform"},
      {"--edge-probability", "/problem/edge_probability", ValueType::real, "random graph edge probability"},
      {"--T", "/schedule/T", ValueType::real, "total annealing time"},
      {"--steps", "/schedule/steps", ValueType::integer, "trotter steps"},
      {"--profile", "/schedule/profile", ValueType::string, "sin2sin2 | linear-smoothstep"},
      {"--block-size,-k", "/block_size", ValueType::integer, "analog block size (2..6)"},
      {"--noise", "/noise/c", ValueType::real, "analog noise amplitude"},
      {"--depolarizing", "/noise/p", ValueType::real, "single-qubit depolarizing rate per touched qubit"},
      {"--entangling-error", "/noise/pe", ValueType::real, "Pauli error rate after each entangling gate"},
      {"--trajectories", "/run/trajectories", ValueType::integer, "Monte Carlo trajectories"},
      {"--shots", "/run/shots", ValueType::integer, "sampled shots"},
      {"--threads", "/run/threads", ValueType::integer, "worker threads (0: all cores)"},
      {"--hardware", "/hardware", ValueType::string, "hardware profile JSON"},
      {"--c-grid", "/sweep/c_grid", ValueType::real_list, "comma-separated noise amplitudes"},
      {"--sizes", "/sweep/sizes", ValueType::int_list, "comma-separated sweep sizes"},
      {"--digital-fidelity", "/sweep/digital_fidelity", ValueType::real, "digital two-qubit gate fidelity"},
      {"--n-max", "/scaling/n_max", ValueType::integer, "largest N of the scaling table"},
      {"--scaling-steps", "/scaling/steps", ValueType::integer, "trotter steps of the scaling table"},
      {"--block-sizes", "/scaling/block_sizes", ValueType::int_list, "comma-separated block sizes"},
      {"--mis-nodes", "/scaling/mis_nodes", ValueType::integer, "nodes of the MIS enhancement instances"},
      {"--input", "/fit/input", ValueType::string, "crossover CSV with N and required_fidelity"},
      {"--fit-n-max", "/fit/n_max", ValueType::integer, "largest N of the extrapolation"},
  };
  return b;
}

struct Subcommand {
  CLI::App* app = nullptr;
  dacqo::bench::Command command{};
  std::optional<std::string> config;
  std::vector<std::string> values;
  std::optional<std::string> problem_path;
  std::optional<std::string> graph_path;
  bool no_cd = false;
  bool digital = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dacqo: digital-analog counterdiabatic optimization experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(DACQO_VERSION));

  const std::pair<std::string, std::string> commands[] = {
      {"solve", "simulate one instance and report success probability and samples"},
      {"fidelity-sweep", "success probability against analog block fidelity"},
      {"scaling", "runtime against problem size and enhancement factors"},
      {"emit-circuit", "write the synthesized circuit"},
      {"fit", "extrapolate the required fidelity to larger sizes"},
  };
  std::vector<Subcommand> subs(std::size(commands));
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    Subcommand& s = subs[i];
    s.command = dacqo::bench::parse_command(commands[i].first);
    s.app = app.add_subcommand(commands[i].first, commands[i].second);
    s.values.resize(bindings().size());
    s.app->add_option("--config", s.config, "JSON config file; flags override it");
    for (std::size_t b = 0; b < bindings().size(); ++b) {
      s.app->add_option(bindings()[b].flag, s.values[b], bindings()[b].help);
    }
    s.app->add_option("--problem", s.problem_path, "Ising problem JSON (sets source problem_file)");
    s.app->add_option("--graph", s.graph_path, "graph JSON for MIS (sets source graph_file)");
    s.app->add_flag("--no-cd", s.no_cd, "drop the counterdiabatic terms");
    s.app->add_flag("--digital", s.digital, "use the digital baseline circuit");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (auto& s : subs) {
    if (!s.app->parsed()) continue;
    try {
      std::vector<Override> overrides;
      if (s.problem_path) {
        overrides.push_back({"/problem/source", "problem_file", ValueType::string});
        overrides.push_back({"/problem/path", *s.problem_path, ValueType::string});
      }
      if (s.graph_path) {
        overrides.push_back({"/problem/source", "graph_file", ValueType::string});
        overrides.push_back({"/problem/path", *s.graph_path, ValueType::string});
      }
      for (std::size_t b = 0; b < bindings().size(); ++b) {
        const std::string name = bindings()[b].flag.substr(0, bindings()[b].flag.find(','));
        if (s.app->count(name) > 0) overrides.push_back({bindings()[b].pointer, s.values[b], bindings()[b].type});
      }
      if (s.no_cd) overrides.push_back({"/include_cd", "false", ValueType::boolean});
      if (s.digital) overrides.push_back({"/digital", "true", ValueType::boolean});
      const auto config = dacqo::bench::load_config(s.command, s.config, overrides);
      const auto output = dacqo::bench::run_command(config);
      dacqo::bench::write_outputs(config, output);
      std::cout << output.text << "wrote " << config.output << '\n';
      return 0;
    } catch (const dacqo::ConfigError& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return 2;
    } catch (const dacqo::ArgumentError& e) {
      std::cerr << "invalid argument: " << e.what() << '\n';
      return 2;
    } catch (const dacqo::CapabilityError& e) {
      std::cerr << "capability error: " << e.what() << '\n';
      return 3;
    } catch (const dacqo::Error& e) {
      std::cerr << "numerical error: " << e.what() << '\n';
      return 4;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
  }
  return 2;
}
