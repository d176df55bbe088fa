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

#include "dacqo/bench/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <thread>

#include <fmt/format.h>

#include "dacqo/bench/fit.hpp"
#include "dacqo/error.hpp"
#include "dacqo/hardware.hpp"
#include "dacqo/json_io.hpp"
#include "dacqo/random.hpp"
#include "dacqo/simulator.hpp"
#include "json.hpp"

namespace dacqo::bench {

using ojson = nlohmann::ordered_json;

namespace {

// Runs f(i) for i in [0, count) on a worker pool; results land by index.
template <typename F>
void parallel_for(std::size_t count, int threads, F&& f) {
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

ojson depth_json(const DepthReport& d) {
  return {{"multiqubit_layers", d.multiqubit_layers}, {"single_qubit_layers", d.single_qubit_layers}, {"total", d.total}};
}

std::string optional_cell(const std::optional<double>& v) { return v ? cell(*v) : std::string(); }

constexpr std::uint64_t kDigitalStream = 2;
constexpr std::uint64_t kIdealStream = 3;
constexpr std::uint64_t kMisClassStream = 100;

}  // namespace

std::string bitstring(std::uint64_t index, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q) {
    if ((index >> q) & 1) s[static_cast<std::size_t>(q)] = '1';
  }
  return s;
}

BuiltProblem build_problem(const ProblemConfig& config, int n, std::uint64_t seed) {
  const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(n));
  switch (config.source) {
    case ProblemSource::homogeneous:
      return {IsingProblem::homogeneous(n, config.coupling, config.field), std::nullopt};
    case ProblemSource::spin_glass:
      return {random_spin_glass(n, s, config.mode), std::nullopt};
    case ProblemSource::mis: {
      Graph g = random_graph(n, config.edge_probability, s, config.mode);
      IsingProblem p = mis_to_ising(g);
      return {std::move(p), std::move(g)};
    }
    case ProblemSource::problem_file:
      return {problem_from_json(read_text_file(config.path)), std::nullopt};
    case ProblemSource::graph_file: {
      Graph g = graph_from_json(read_text_file(config.path));
      IsingProblem p = mis_to_ising(g);
      return {std::move(p), std::move(g)};
    }
  }
  throw ConfigError("unknown problem source");
}

double entangling_rate_for_fidelity(double average_fidelity, int qubits) {
  if (!(average_fidelity > 0.0 && average_fidelity <= 1.0)) throw ArgumentError("fidelity must lie in (0, 1]");
  const double d = std::pow(2.0, qubits);
  return std::min(1.0, (1.0 - average_fidelity) * (d + 1.0) / d);
}

Circuit build_circuit(const ExperimentConfig& config, const IsingProblem& problem) {
  const Schedule schedule = config.schedule();
  if (config.digital) return synthesize_digital_baseline(problem, schedule, {config.include_cd});
  return synthesize(problem, schedule, config.block_size, {config.include_cd});
}

CommandOutput cmd_solve(const ExperimentConfig& config) {
  const BuiltProblem bp = build_problem(config.problem, config.problem.n, config.seed);
  const IsingProblem& p = bp.problem;
  const Circuit circuit = build_circuit(config, p);
  const GroundTruth gt = brute_force_ground_state(p);
  NoiseModel noise = config.noise;
  noise.seed = derive_seed(config.seed, 1);
  const RunResult r = run(circuit, gt.indices, noise, config.run);
  const DepthReport depth = depth_report(circuit);
  const RuntimeReport runtime = circuit_runtime(depth, config.hardware);

  CommandOutput out;
  out.table = CsvTable({"bitstring", "index", "count", "frequency", "energy", "optimal"});
  std::vector<std::pair<std::uint64_t, int>> samples(r.shots.begin(), r.shots.end());
  std::stable_sort(samples.begin(), samples.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  const double total = std::max(1, config.run.shots);
  for (const auto& [idx, count] : samples) {
    const bool optimal = std::binary_search(gt.indices.begin(), gt.indices.end(), idx);
    out.table.add_row({bitstring(idx, p.n_qubits()), cell(static_cast<std::size_t>(idx)), cell(count),
                       cell(count / total), cell(basis_energy(p, idx)), cell(optimal)});
  }

  ojson s;
  s["n_qubits"] = p.n_qubits();
  s["path"] = config.digital ? "digital" : (uses_homogeneous_path(p) ? "homogeneous" : "inhomogeneous");
  s["success_probability"] = r.success_probability;
  s["standard_error"] = r.standard_error;
  s["gms_fidelity"] = r.gms_fidelity;
  s["trajectories"] = r.trajectories;
  s["ground_energy"] = gt.energy;
  s["ground_energy_with_offset"] = gt.energy + p.offset();
  ojson opt = ojson::array();
  for (auto idx : gt.indices) opt.push_back(bitstring(idx, p.n_qubits()));
  s["optimal_bitstrings"] = opt;
  if (!samples.empty()) {
    s["most_frequent_bitstring"] = bitstring(samples.front().first, p.n_qubits());
    s["most_frequent_is_optimal"] =
        std::binary_search(gt.indices.begin(), gt.indices.end(), samples.front().first);
  }
  if (bp.graph) {
    const auto sel = mis_selection(gt.indices.front(), bp.graph->n_nodes);
    s["mis_size"] = sel.size();
    s["mis_weight"] = selection_weight(*bp.graph, sel);
    s["mis_independent"] = bp.graph->is_independent(sel);
  }
  s["depth"] = depth_json(depth);
  s["runtime_seconds"] = runtime.runtime_seconds;
  s["within_coherence"] = runtime.within_coherence;
  out.summary_json = s.dump();
  out.text = fmt::format("success probability {:.6f} +- {:.6f} ({} trajectories), ground energy {:.10g}, optima {}\n",
                         r.success_probability, r.standard_error, r.trajectories, gt.energy, opt.dump());
  if (bp.graph) out.text += fmt::format("maximum independent set size {}\n", s["mis_size"].get<std::size_t>());
  return out;
}

std::vector<SweepRow> fidelity_sweep_rows(const ExperimentConfig& config) {
  struct Instance {
    int n;
    std::uint64_t seed;
    Circuit da;
    Circuit digital;
    GroundTruth gt;
  };
  const Schedule schedule = config.schedule();
  std::vector<Instance> instances;
  for (int n : config.sweep.sizes) {
    const BuiltProblem bp = build_problem(config.problem, n, config.seed);
    instances.push_back({bp.problem.n_qubits(), derive_seed(config.seed, static_cast<std::uint64_t>(n)),
                         synthesize(bp.problem, schedule, config.block_size, {config.include_cd}),
                         synthesize_digital_baseline(bp.problem, schedule, {config.include_cd}),
                         brute_force_ground_state(bp.problem)});
  }
  const double digital_rate = entangling_rate_for_fidelity(config.sweep.digital_fidelity, 2);

  // Jobs per instance: ideal run, digital baseline, then every c point.
  const std::size_t per = config.sweep.c_grid.size() + 2;
  std::vector<RunResult> results(instances.size() * per);
  RunOptions opts = config.run;
  opts.shots = 0;
  opts.threads = 1;
  parallel_for(results.size(), config.run.threads, [&](std::size_t job) {
    const Instance& in = instances[job / per];
    const std::size_t slot = job % per;
    NoiseModel nm;
    if (slot == 0) {
      nm.seed = derive_seed(in.seed, kIdealStream);
      results[job] = run(in.da, in.gt.indices, nm, opts);
    } else if (slot == 1) {
      nm.depolarizing_rate = config.noise.depolarizing_rate;
      nm.entangling_error_rate = digital_rate;
      nm.seed = derive_seed(in.seed, kDigitalStream);
      results[job] = run(in.digital, in.gt.indices, nm, opts);
    } else {
      nm = config.noise;
      nm.analog_noise_amplitude = config.sweep.c_grid[slot - 2];
      nm.seed = in.seed;
      results[job] = run(in.da, in.gt.indices, nm, opts);
    }
  });

  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const RunResult& ideal = results[i * per];
    const RunResult& dig = results[i * per + 1];
    const std::size_t first = rows.size();
    for (std::size_t c = 0; c < config.sweep.c_grid.size(); ++c) {
      const RunResult& r = results[i * per + 2 + c];
      rows.push_back({instances[i].n, config.sweep.c_grid[c], r.gms_fidelity, r.success_probability, r.standard_error,
                      dig.success_probability, dig.standard_error, ideal.success_probability,
                      config.sweep.threshold_fraction * ideal.success_probability});
    }
    std::stable_sort(rows.begin() + static_cast<std::ptrdiff_t>(first), rows.end(),
                     [](const SweepRow& a, const SweepRow& b) { return a.fidelity < b.fidelity; });
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) { return a.n < b.n; });
  return rows;
}

std::optional<double> crossover_fidelity(const std::vector<SweepRow>& rows, bool against_threshold) {
  if (rows.empty()) return std::nullopt;
  auto gap = [&](const SweepRow& r) {
    return r.success_probability - (against_threshold ? r.threshold : r.digital_baseline);
  };
  // last failing point from the top of the grid
  std::ptrdiff_t last_fail = -1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (gap(rows[i]) < 0.0) last_fail = static_cast<std::ptrdiff_t>(i);
  }
  if (last_fail < 0 || last_fail + 1 >= static_cast<std::ptrdiff_t>(rows.size())) return std::nullopt;
  const SweepRow& a = rows[static_cast<std::size_t>(last_fail)];
  const SweepRow& b = rows[static_cast<std::size_t>(last_fail + 1)];
  const double ga = gap(a), gb = gap(b);
  const double w = gb - ga > 0.0 ? -ga / (gb - ga) : 0.0;
  return a.fidelity + w * (b.fidelity - a.fidelity);
}

CommandOutput cmd_fidelity_sweep(const ExperimentConfig& config) {
  const auto rows = fidelity_sweep_rows(config);
  CommandOutput out;
  out.table = CsvTable({"N", "c", "fidelity", "success_probability", "standard_error", "digital_baseline",
                        "digital_standard_error", "threshold_37pct"});
  for (const auto& r : rows) {
    out.table.add_row({cell(r.n), cell(r.c), cell(r.fidelity), cell(r.success_probability), cell(r.standard_error),
                       cell(r.digital_baseline), cell(r.digital_standard_error), cell(r.threshold)});
  }
  CsvTable cross({"N", "required_fidelity", "threshold_fidelity", "ideal_success", "digital_baseline"});
  ojson s;
  s["digital_entangling_error_rate"] = entangling_rate_for_fidelity(config.sweep.digital_fidelity, 2);
  ojson per = ojson::array();
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    while (j < rows.size() && rows[j].n == rows[i].n) ++j;
    const std::vector<SweepRow> group(rows.begin() + static_cast<std::ptrdiff_t>(i),
                                      rows.begin() + static_cast<std::ptrdiff_t>(j));
    const auto req = crossover_fidelity(group, false);
    const auto thr = crossover_fidelity(group, true);
    cross.add_row({cell(rows[i].n), optional_cell(req), optional_cell(thr), cell(rows[i].ideal_success),
                   cell(rows[i].digital_baseline)});
    per.push_back({{"N", rows[i].n},
                   {"required_fidelity", req ? ojson(*req) : ojson()},
                   {"threshold_fidelity", thr ? ojson(*thr) : ojson()}});
    out.text += fmt::format("N={}: ideal {:.4f}, digital {:.4f}, crossover fidelity {}\n", rows[i].n,
                            rows[i].ideal_success, rows[i].digital_baseline, req ? fmt::format("{:.4f}", *req) : "none");
    i = j;
  }
  s["crossovers"] = per;
  out.summary_json = s.dump();
  out.siblings.emplace_back("_crossover", std::move(cross));
  return out;
}

CommandOutput cmd_scaling(const ExperimentConfig& config) {
  const ScalingConfig& sc = config.scaling;
  CommandOutput out;
  out.table = CsvTable({"N", "runtime_digital", "runtime_daqc_homog", "runtime_daqc_inhomog", "within_coherence_homog"});
  std::vector<int> sizes;
  for (int n = sc.n_min; n <= sc.n_max; n += sc.n_step) sizes.push_back(n);
  if (sizes.back() != sc.n_max) sizes.push_back(sc.n_max);
  AnalyticRuntime last;
  for (int n : sizes) {
    last = analytic_runtime(n, config.block_size, sc.steps, config.hardware);
    out.table.add_row({cell(n), cell(last.digital), cell(last.daqc_homogeneous), cell(last.daqc_inhomogeneous),
                       cell(last.daqc_homogeneous <= config.hardware.coherence_time)});
  }

  CsvTable enh({"instance_class", "N", "block_size", "runtime_digital", "runtime_daqc", "ratio"});
  const Schedule schedule(config.total_time, sc.steps, config.profile);
  const InstanceMode modes[] = {InstanceMode::homogeneous, InstanceMode::mixed, InstanceMode::fully_nonuniform};
  std::vector<std::vector<EnhancementEntry>> tables(std::size(modes));
  parallel_for(std::size(modes), config.run.threads, [&](std::size_t m) {
    const Graph g = random_graph(sc.mis_nodes, sc.edge_probability, derive_seed(config.seed, kMisClassStream + m),
                                 modes[m]);
    tables[m] = enhancement_factor(mis_to_ising(g), schedule, config.hardware, sc.block_sizes);
  });
  ojson ratios = ojson::object();
  for (std::size_t m = 0; m < std::size(modes); ++m) {
    ojson per = ojson::object();
    for (const auto& e : tables[m]) {
      enh.add_row({to_string(modes[m]), cell(sc.mis_nodes), cell(e.block_size), cell(e.runtime_digital),
                   cell(e.runtime_daqc), cell(e.ratio)});
      per[std::to_string(e.block_size)] = e.ratio;
    }
    ratios[to_string(modes[m])] = per;
  }
  ojson s;
  s["trotter_steps"] = sc.steps;
  s["block_size"] = config.block_size;
  s["largest_N"] = {{"N", last.n},
                    {"runtime_digital", last.digital},
                    {"runtime_daqc_homog", last.daqc_homogeneous},
                    {"runtime_daqc_inhomog", last.daqc_inhomogeneous},
                    {"reduction", 1.0 - last.daqc_homogeneous / last.digital}};
  s["enhancement_ratios"] = ratios;
  out.summary_json = s.dump();
  out.text = fmt::format("N={}: digital {:.4f} s, homogeneous {:.4f} s, inhomogeneous {:.4f} s ({} trotter steps)\n",
                         last.n, last.digital, last.daqc_homogeneous, last.daqc_inhomogeneous, sc.steps);
  out.siblings.emplace_back("_enhancement", std::move(enh));
  return out;
}

CommandOutput cmd_emit_circuit(const ExperimentConfig& config) {
  const BuiltProblem bp = build_problem(config.problem, config.problem.n, config.seed);
  const Circuit circuit = build_circuit(config, bp.problem);
  CommandOutput out;
  out.table = CsvTable({"layer", "step", "kind", "qubits", "theta", "phi", "axis"});
  const auto& starts = circuit.step_starts();
  for (std::size_t l = 0; l < circuit.layers().size(); ++l) {
    const auto step = static_cast<std::size_t>(std::upper_bound(starts.begin(), starts.end(), l) - starts.begin());
    for (const auto& g : circuit.layers()[l]) {
      std::string qs;
      for (std::size_t i = 0; i < g.qubits.size(); ++i) qs += (i ? " " : "") + std::to_string(g.qubits[i]);
      const bool single = g.kind == GateKind::single;
      out.table.add_row({cell(l), cell(step), to_string(g.kind), qs, cell(g.theta), single ? "" : cell(g.phi),
                         single ? to_string(g.axis) : ""});
    }
  }
  const DepthReport depth = depth_report(circuit);
  const RuntimeReport runtime = circuit_runtime(depth, config.hardware);
  ojson s;
  s["n_qubits"] = circuit.width();
  s["path"] = config.digital ? "digital" : (uses_homogeneous_path(bp.problem) ? "homogeneous" : "inhomogeneous");
  s["gates"] = circuit.gate_count();
  s["entangling_gates"] = circuit.entangling_gate_count();
  s["depth"] = depth_json(depth);
  s["runtime_seconds"] = runtime.runtime_seconds;
  s["within_coherence"] = runtime.within_coherence;
  out.summary_json = s.dump();
  out.files.emplace_back(".circuit.json", circuit_to_json(circuit));
  out.text = fmt::format("{} layers ({} multiqubit, {} single-qubit), {} gates, runtime {:.6g} s\n", depth.total,
                         depth.multiqubit_layers, depth.single_qubit_layers, circuit.gate_count(),
                         runtime.runtime_seconds);
  return out;
}

CommandOutput cmd_fit(const ExperimentConfig& config) {
  std::vector<FidelityPoint> pts;
  if (!config.fit.input.empty()) {
    const CsvTable t = read_csv(config.fit.input);
    const auto col = [&](std::string_view name) {
      const auto it = std::find(t.header().begin(), t.header().end(), name);
      if (it == t.header().end()) throw ConfigError(config.fit.input + ": missing column " + std::string(name));
      return static_cast<std::size_t>(it - t.header().begin());
    };
    const std::size_t cn = col("N"), cf = col("required_fidelity");
    for (const auto& row : t.rows()) {
      if (row[cf].empty()) continue;
      try {
        pts.push_back({std::stod(row[cn]), std::stod(row[cf])});
      } catch (const std::exception&) {
        throw ConfigError(config.fit.input + ": malformed number in row");
      }
    }
  }
  for (auto [n, f] : config.fit.points) pts.push_back({n, f});
  const ExtrapolationFit fit = fit_extrapolation(pts);

  CommandOutput out;
  out.table = CsvTable({"N", "observed", "fitted"});
  std::vector<double> ns;
  for (int n = config.fit.n_step; n <= config.fit.n_max; n += config.fit.n_step) ns.push_back(n);
  for (const auto& p : pts) ns.push_back(p.n);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (double n : ns) {
    std::string obs;
    for (const auto& p : pts) {
      if (p.n == n) obs = cell(p.fidelity);
    }
    out.table.add_row({cell(n), obs, cell(fit(n))});
  }
  ojson s;
  s["L"] = fit.L;
  s["K"] = fit.K;
  s["decay_rate"] = fit.decay_rate;
  s["residual"] = fit.residual;
  s["points"] = pts.size();
  s["prediction"] = {{"N", config.fit.n_max}, {"fidelity", fit(config.fit.n_max)}};
  out.summary_json = s.dump();
  out.text = fmt::format("L={:.10g} K={:.10g} decay_rate={:.10g} residual={:.3g}; f({})={:.6f}\n", fit.L, fit.K,
                         fit.decay_rate, fit.residual, config.fit.n_max, fit(config.fit.n_max));
  return out;
}

CommandOutput run_command(const ExperimentConfig& config) {
  switch (config.command) {
    case Command::solve:
      return cmd_solve(config);
    case Command::fidelity_sweep:
      return cmd_fidelity_sweep(config);
    case Command::scaling:
      return cmd_scaling(config);
    case Command::emit_circuit:
      return cmd_emit_circuit(config);
    case Command::fit:
      return cmd_fit(config);
  }
  throw ConfigError("unknown command");
}

void write_outputs(const ExperimentConfig& config, const CommandOutput& output) {
  const std::string command = to_string(config.command);
  write_report(config.output, output.table, command, config.resolved_json, output.summary_json);
  for (const auto& [suffix, table] : output.siblings) {
    write_report(sibling_path(config.output, suffix), table, command, config.resolved_json, output.summary_json);
  }
  for (const auto& [suffix, text] : output.files) {
    const std::filesystem::path p(config.output);
    const std::string path = (p.parent_path() / (p.stem().string() + suffix)).string();
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot write " + path);
    f << text << '\n';
  }
}

}  // namespace dacqo::bench
