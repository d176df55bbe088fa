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

#include "dacqo/bench/config.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dacqo/error.hpp"
#include "dacqo/json_io.hpp"
#include "json.hpp"

namespace dacqo::bench {

using nlohmann::json;

namespace {

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::solve, "solve"},
    {Command::fidelity_sweep, "fidelity-sweep"},
    {Command::scaling, "scaling"},
    {Command::emit_circuit, "emit-circuit"},
    {Command::fit, "fit"},
};

constexpr std::pair<ProblemSource, std::string_view> kSources[] = {
    {ProblemSource::homogeneous, "homogeneous"}, {ProblemSource::spin_glass, "spin_glass"},
    {ProblemSource::mis, "mis"},                 {ProblemSource::problem_file, "problem_file"},
    {ProblemSource::graph_file, "graph_file"},
};

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_document(std::string_view text, const std::string& what) {
  try {
    json j = json::parse(text.begin(), text.end());
    if (!j.is_object()) throw ConfigError(what + ": top level must be an object");
    return j;
  } catch (const json::parse_error& e) {
    // byte is one past the offending character
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ConfigError(what + ": JSON syntax error at " + location(text, byte));
  }
}

[[noreturn]] void bad(const std::string& pointer, const std::string& what) {
  throw ConfigError("config " + pointer + ": " + what);
}

template <typename T>
T number_from(const std::string& pointer, const std::string& raw) {
  T v{};
  const char* end = raw.data() + raw.size();
  auto [ptr, ec] = std::from_chars(raw.data(), end, v);
  if (ec != std::errc() || ptr != end) bad(pointer, "cannot parse \"" + raw + "\"");
  return v;
}

json override_value(const Override& o) {
  auto split = [&](const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) parts.push_back(item);
    }
    return parts;
  };
  switch (o.type) {
    case ValueType::string:
      return o.value;
    case ValueType::integer:
      return number_from<long long>(o.pointer, o.value);
    case ValueType::real:
      return number_from<double>(o.pointer, o.value);
    case ValueType::boolean:
      if (o.value == "true" || o.value == "1") return true;
      if (o.value == "false" || o.value == "0") return false;
      bad(o.pointer, "expected true or false");
    case ValueType::real_list: {
      json a = json::array();
      for (const auto& p : split(o.value)) a.push_back(number_from<double>(o.pointer, p));
      return a;
    }
    case ValueType::int_list: {
      json a = json::array();
      for (const auto& p : split(o.value)) a.push_back(number_from<long long>(o.pointer, p));
      return a;
    }
  }
  return o.value;
}

// Typed readers that name the offending pointer.
class Reader {
 public:
  Reader(const json& j, std::string prefix) : j_(j), prefix_(std::move(prefix)) {}

  void check_keys(std::initializer_list<std::string_view> allowed) const {
    for (const auto& [key, value] : j_.items()) {
      bool ok = false;
      for (auto a : allowed) ok = ok || key == a;
      if (!ok) bad(prefix_ + "/" + key, "unknown key");
    }
  }
  bool has(const char* key) const { return j_.contains(key); }
  std::string pointer(const char* key) const { return prefix_ + "/" + key; }

  double real(const char* key, double fallback) const {
    if (!has(key)) return fallback;
    if (!j_[key].is_number()) bad(pointer(key), "must be a number");
    return j_[key].get<double>();
  }
  long long integer(const char* key, long long fallback) const {
    if (!has(key)) return fallback;
    if (!j_[key].is_number_integer()) bad(pointer(key), "must be an integer");
    return j_[key].get<long long>();
  }
  bool boolean(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    if (!j_[key].is_boolean()) bad(pointer(key), "must be true or false");
    return j_[key].get<bool>();
  }
  std::string string(const char* key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    if (!j_[key].is_string()) bad(pointer(key), "must be a string");
    return j_[key].get<std::string>();
  }
  std::vector<double> reals(const char* key, std::vector<double> fallback) const {
    if (!has(key)) return fallback;
    std::vector<double> out;
    if (!j_[key].is_array()) bad(pointer(key), "must be an array of numbers");
    for (const auto& v : j_[key]) {
      if (!v.is_number()) bad(pointer(key), "must be an array of numbers");
      out.push_back(v.get<double>());
    }
    return out;
  }
  std::vector<int> ints(const char* key, std::vector<int> fallback) const {
    if (!has(key)) return fallback;
    std::vector<int> out;
    if (!j_[key].is_array()) bad(pointer(key), "must be an array of integers");
    for (const auto& v : j_[key]) {
      if (!v.is_number_integer()) bad(pointer(key), "must be an array of integers");
      out.push_back(v.get<int>());
    }
    return out;
  }
  Reader child(const char* key) const {
    static const json empty = json::object();
    if (!has(key)) return Reader(empty, pointer(key));
    if (!j_[key].is_object()) bad(pointer(key), "must be an object");
    return Reader(j_[key], pointer(key));
  }
  const json& raw(const char* key) const { return j_[key]; }

 private:
  const json& j_;
  std::string prefix_;
};

void require_file(const std::string& pointer, const std::string& path) {
  if (path.empty()) bad(pointer, "path is empty");
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) bad(pointer, "file not found: " + path);
}

template <typename F>
auto wrap(const std::string& pointer, F&& f) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    bad(pointer, e.what());
  }
}

std::vector<double> default_c_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 12; ++i) g.push_back(0.025 * i);
  return g;
}

json resolved(const ExperimentConfig& c) {
  json j;
  j["command"] = to_string(c.command);
  j["seed"] = c.seed;
  j["problem"] = {{"source", to_string(c.problem.source)},
                  {"n", c.problem.n},
                  {"J", c.problem.coupling},
                  {"h", c.problem.field},
                  {"mode", to_string(c.problem.mode)},
                  {"edge_probability", c.problem.edge_probability},
                  {"path", c.problem.path}};
  j["schedule"] = {{"T", c.total_time}, {"steps", c.trotter_steps}, {"profile", to_string(c.profile)}};
  j["block_size"] = c.block_size;
  j["include_cd"] = c.include_cd;
  j["digital"] = c.digital;
  j["noise"] = {{"c", c.noise.analog_noise_amplitude},
                {"p", c.noise.depolarizing_rate},
                {"pe", c.noise.entangling_error_rate}};
  j["run"] = {{"trajectories", c.run.trajectories}, {"shots", c.run.shots}, {"threads", c.run.threads}};
  j["hardware"] = json::parse(hardware_to_json(c.hardware));
  j["sweep"] = {{"c_grid", c.sweep.c_grid},
                {"sizes", c.sweep.sizes},
                {"digital_fidelity", c.sweep.digital_fidelity},
                {"threshold_fraction", c.sweep.threshold_fraction}};
  j["scaling"] = {{"n_min", c.scaling.n_min},
                  {"n_max", c.scaling.n_max},
                  {"n_step", c.scaling.n_step},
                  {"steps", c.scaling.steps},
                  {"mis_nodes", c.scaling.mis_nodes},
                  {"edge_probability", c.scaling.edge_probability},
                  {"block_sizes", c.scaling.block_sizes}};
  json pts = json::array();
  for (auto [n, f] : c.fit.points) pts.push_back({n, f});
  j["fit"] = {{"input", c.fit.input}, {"points", pts}, {"n_max", c.fit.n_max}, {"n_step", c.fit.n_step}};
  j["output"] = c.output;
  return j;
}

}  // namespace

Command parse_command(std::string_view name) {
  for (auto [c, s] : kCommands) {
    if (s == name) return c;
  }
  throw ConfigError("unknown command \"" + std::string(name) + "\"");
}

std::string to_string(Command command) {
  for (auto [c, s] : kCommands) {
    if (c == command) return std::string(s);
  }
  return "?";
}

ProblemSource parse_problem_source(std::string_view name) {
  for (auto [c, s] : kSources) {
    if (s == name) return c;
  }
  throw ConfigError("unknown problem source \"" + std::string(name) + "\"");
}

std::string to_string(ProblemSource source) {
  for (auto [c, s] : kSources) {
    if (c == source) return std::string(s);
  }
  return "?";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig parse_config(Command command, std::string_view json_text, const std::vector<Override>& overrides) {
  json doc = parse_document(json_text, "config");
  for (const auto& o : overrides) {
    try {
      doc[json::json_pointer(o.pointer)] = override_value(o);
    } catch (const json::exception& e) {
      bad(o.pointer, e.what());
    }
  }

  ExperimentConfig c;
  c.command = command;
  const Reader top(doc, "");
  top.check_keys({"seed", "problem", "schedule", "block_size", "include_cd", "digital", "noise", "run", "hardware",
                  "sweep", "scaling", "fit", "output"});
  const long long seed = top.integer("seed", 1);
  if (seed < 0) bad("/seed", "must be non-negative");
  c.seed = static_cast<std::uint64_t>(seed);

  const Reader pr = top.child("problem");
  pr.check_keys({"source", "n", "J", "h", "mode", "edge_probability", "path"});
  c.problem.source = wrap("/problem/source", [&] { return parse_problem_source(pr.string("source", "homogeneous")); });
  c.problem.n = static_cast<int>(pr.integer("n", 4));
  c.problem.coupling = pr.real("J", 1.0);
  c.problem.field = pr.real("h", 0.5);
  c.problem.mode = wrap("/problem/mode", [&] { return parse_instance_mode(pr.string("mode", "fully_nonuniform")); });
  c.problem.edge_probability = pr.real("edge_probability", 0.5);
  c.problem.path = pr.string("path", "");
  if (c.problem.n < 1) bad("/problem/n", "must be >= 1");
  if (!(c.problem.edge_probability >= 0.0 && c.problem.edge_probability <= 1.0)) {
    bad("/problem/edge_probability", "must lie in [0, 1]");
  }
  if (c.problem.source == ProblemSource::problem_file || c.problem.source == ProblemSource::graph_file) {
    require_file("/problem/path", c.problem.path);
  }

  const Reader sc = top.child("schedule");
  sc.check_keys({"T", "steps", "profile"});
  c.total_time = sc.real("T", 5.0);
  c.trotter_steps = static_cast<int>(sc.integer("steps", 10));
  c.profile = wrap("/schedule/profile", [&] { return parse_schedule_profile(sc.string("profile", "sin2sin2")); });
  if (!(c.total_time > 0.0)) bad("/schedule/T", "must be positive");
  if (c.trotter_steps < 1) bad("/schedule/steps", "must be >= 1");

  c.block_size = static_cast<int>(top.integer("block_size", 4));
  if (c.block_size < 2 || c.block_size > 6) bad("/block_size", "must lie in [2, 6]");
  c.include_cd = top.boolean("include_cd", true);
  c.digital = top.boolean("digital", false);

  const Reader nz = top.child("noise");
  nz.check_keys({"c", "p", "pe"});
  c.noise.analog_noise_amplitude = nz.real("c", 0.0);
  c.noise.depolarizing_rate = nz.real("p", 0.0002);
  c.noise.entangling_error_rate = nz.real("pe", 0.0);
  wrap("/noise", [&] {
    c.noise.validate();
    return 0;
  });

  const Reader rn = top.child("run");
  rn.check_keys({"trajectories", "shots", "threads"});
  c.run.trajectories = static_cast<int>(rn.integer("trajectories", 512));
  c.run.shots = static_cast<int>(rn.integer("shots", 1024));
  c.run.threads = static_cast<int>(rn.integer("threads", 0));
  if (c.run.trajectories < 1) bad("/run/trajectories", "must be >= 1");
  if (c.run.shots < 0) bad("/run/shots", "must be >= 0");
  if (c.run.threads < 0) bad("/run/threads", "must be >= 0");

  if (top.has("hardware")) {
    const json& hw = top.raw("hardware");
    if (hw.is_string()) {
      const std::string path = hw.get<std::string>();
      require_file("/hardware", path);
      c.hardware = wrap("/hardware", [&] { return hardware_from_json(read_text_file(path)); });
    } else if (hw.is_object()) {
      c.hardware = wrap("/hardware", [&] { return hardware_from_json(hw.dump()); });
    } else {
      bad("/hardware", "must be a path or an object");
    }
  }
  wrap("/hardware", [&] {
    c.hardware.validate();
    return 0;
  });

  const Reader sw = top.child("sweep");
  sw.check_keys({"c_grid", "sizes", "digital_fidelity", "threshold_fraction"});
  c.sweep.c_grid = sw.reals("c_grid", default_c_grid());
  c.sweep.sizes = sw.ints("sizes", {c.problem.n});
  c.sweep.digital_fidelity = sw.real("digital_fidelity", 0.995);
  c.sweep.threshold_fraction = sw.real("threshold_fraction", 0.37);
  if (c.sweep.c_grid.empty()) bad("/sweep/c_grid", "must not be empty");
  for (double v : c.sweep.c_grid) {
    if (!(v >= 0.0)) bad("/sweep/c_grid", "values must be >= 0");
  }
  if (c.sweep.sizes.empty()) bad("/sweep/sizes", "must not be empty");
  for (int v : c.sweep.sizes) {
    if (v < 1) bad("/sweep/sizes", "values must be >= 1");
  }
  if (!(c.sweep.digital_fidelity > 0.0 && c.sweep.digital_fidelity <= 1.0)) {
    bad("/sweep/digital_fidelity", "must lie in (0, 1]");
  }

  const Reader sl = top.child("scaling");
  sl.check_keys({"n_min", "n_max", "n_step", "steps", "mis_nodes", "edge_probability", "block_sizes"});
  c.scaling.n_min = static_cast<int>(sl.integer("n_min", 4));
  c.scaling.n_max = static_cast<int>(sl.integer("n_max", 100));
  c.scaling.n_step = static_cast<int>(sl.integer("n_step", 4));
  c.scaling.steps = static_cast<int>(sl.integer("steps", 10));
  c.scaling.mis_nodes = static_cast<int>(sl.integer("mis_nodes", 16));
  c.scaling.edge_probability = sl.real("edge_probability", 0.5);
  c.scaling.block_sizes = sl.ints("block_sizes", {2, 3, 4, 5, 6});
  if (c.scaling.n_min < 2 || c.scaling.n_max < c.scaling.n_min || c.scaling.n_step < 1) {
    bad("/scaling", "need 2 <= n_min <= n_max and n_step >= 1");
  }
  if (c.scaling.steps < 1) bad("/scaling/steps", "must be >= 1");
  if (c.scaling.mis_nodes < 2) bad("/scaling/mis_nodes", "must be >= 2");
  if (c.scaling.block_sizes.empty()) bad("/scaling/block_sizes", "must not be empty");
  for (int k : c.scaling.block_sizes) {
    if (k < 2 || k > 6) bad("/scaling/block_sizes", "values must lie in [2, 6]");
  }

  const Reader ft = top.child("fit");
  ft.check_keys({"input", "points", "n_max", "n_step"});
  c.fit.input = ft.string("input", "");
  if (ft.has("points")) {
    const json& pts = ft.raw("points");
    if (!pts.is_array()) bad("/fit/points", "must be an array of [N, fidelity]");
    for (const auto& p : pts) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        bad("/fit/points", "must be an array of [N, fidelity]");
      }
      c.fit.points.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
  }
  c.fit.n_max = static_cast<int>(ft.integer("n_max", 52));
  c.fit.n_step = static_cast<int>(ft.integer("n_step", 4));
  if (c.fit.n_step < 1 || c.fit.n_max < 1) bad("/fit", "n_max and n_step must be >= 1");
  if (command == Command::fit) {
    if (!c.fit.input.empty()) require_file("/fit/input", c.fit.input);
    if (c.fit.input.empty() && c.fit.points.empty()) bad("/fit", "needs an input file or points");
  }

  c.output = top.string("output", "dacqo_" + to_string(command) + ".csv");
  if (c.output.empty()) bad("/output", "must not be empty");
  c.resolved_json = resolved(c).dump(2);
  return c;
}

ExperimentConfig load_config(Command command, const std::optional<std::string>& path,
                             const std::vector<Override>& overrides) {
  std::string text = "{}";
  if (path) {
    require_file("--config", *path);
    text = read_text_file(*path);
  }
  return parse_config(command, text, overrides);
}

}  // namespace dacqo::bench
