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

#include "dacqo/problem.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <string>

#include "dacqo/error.hpp"
#include "dacqo/random.hpp"

namespace dacqo {
namespace {

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw ArgumentError(std::string(what) + " must be finite");
}

}  // namespace

IsingProblem::IsingProblem(int n_qubits, std::vector<Coupling> couplings, std::vector<double> fields,
                           double offset)
    : n_(n_qubits), fields_(std::move(fields)), offset_(offset) {
  if (n_ < 1) throw ArgumentError("problem needs at least one qubit");
  if (static_cast<int>(fields_.size()) != n_) {
    throw ArgumentError("fields length " + std::to_string(fields_.size()) + " does not match N = " +
                        std::to_string(n_));
  }
  for (double h : fields_) check_finite(h, "field");
  check_finite(offset_, "offset");
  dense_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0.0);
  std::set<std::pair<int, int>> seen;
  for (auto& c : couplings) {
    if (c.i == c.j) throw ArgumentError("self coupling (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")");
    if (c.i > c.j) std::swap(c.i, c.j);
    if (c.i < 0 || c.j >= n_) {
      throw ArgumentError("coupling (" + std::to_string(c.i) + "," + std::to_string(c.j) + ") out of range");
    }
    check_finite(c.value, "coupling");
    if (!seen.emplace(c.i, c.j).second) {
      throw ArgumentError("duplicate coupling (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")");
    }
    dense_[static_cast<std::size_t>(c.i * n_ + c.j)] = c.value;
    dense_[static_cast<std::size_t>(c.j * n_ + c.i)] = c.value;
  }
  std::sort(couplings.begin(), couplings.end(),
            [](const Coupling& a, const Coupling& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
  couplings_ = std::move(couplings);
}

IsingProblem IsingProblem::homogeneous(int n_qubits, double coupling, double field) {
  if (n_qubits < 1) throw ArgumentError("problem needs at least one qubit");
  std::vector<Coupling> cs;
  for (int i = 0; i < n_qubits; ++i) {
    for (int j = i + 1; j < n_qubits; ++j) cs.push_back({i, j, coupling});
  }
  return IsingProblem(n_qubits, std::move(cs), std::vector<double>(static_cast<std::size_t>(n_qubits), field));
}

double IsingProblem::coupling(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw ArgumentError("coupling index out of range");
  return dense_[static_cast<std::size_t>(i * n_ + j)];
}

bool IsingProblem::is_homogeneous() const {
  for (const auto& c : couplings_) {
    if (c.value != couplings_.front().value) return false;
  }
  for (double h : fields_) {
    if (h != fields_.front()) return false;
  }
  return true;
}

bool IsingProblem::is_complete() const {
  const auto pairs = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
  if (couplings_.size() != pairs) return false;
  return std::all_of(couplings_.begin(), couplings_.end(), [](const Coupling& c) { return c.value != 0.0; });
}

double classical_energy(const IsingProblem& problem, const std::vector<int>& spins) {
  if (static_cast<int>(spins.size()) != problem.n_qubits()) {
    throw ArgumentError("spin vector length " + std::to_string(spins.size()) + " does not match N = " +
                        std::to_string(problem.n_qubits()));
  }
  for (int s : spins) {
    if (s != 1 && s != -1) throw ArgumentError("spins must be +1 or -1");
  }
  double e = 0.0;
  for (const auto& c : problem.couplings()) {
    e += c.value * spins[static_cast<std::size_t>(c.i)] * spins[static_cast<std::size_t>(c.j)];
  }
  for (std::size_t q = 0; q < spins.size(); ++q) e += problem.fields()[q] * spins[q];
  return e;
}

double basis_energy(const IsingProblem& problem, std::uint64_t index) {
  double e = 0.0;
  for (const auto& c : problem.couplings()) {
    e += c.value * IsingProblem::spin_of(index, c.i) * IsingProblem::spin_of(index, c.j);
  }
  for (int q = 0; q < problem.n_qubits(); ++q) e += problem.fields()[static_cast<std::size_t>(q)] * IsingProblem::spin_of(index, q);
  return e;
}

std::vector<double> all_basis_energies(const IsingProblem& problem) {
  if (problem.n_qubits() > kMaxEnumerationQubits) {
    throw CapabilityError("energy table limited to " + std::to_string(kMaxEnumerationQubits) + " qubits");
  }
  const std::uint64_t dim = std::uint64_t{1} << problem.n_qubits();
  std::vector<double> out(dim);
  for (std::uint64_t b = 0; b < dim; ++b) out[b] = basis_energy(problem, b);
  return out;
}

GroundTruth brute_force_ground_state(const IsingProblem& problem) {
  const int n = problem.n_qubits();
  if (n > kMaxEnumerationQubits) {
    throw CapabilityError("brute force limited to " + std::to_string(kMaxEnumerationQubits) + " qubits, got " +
                          std::to_string(n));
  }
  double scale = 1.0;
  for (const auto& c : problem.couplings()) scale += std::abs(c.value);
  for (double h : problem.fields()) scale += std::abs(h);

  std::vector<double> adj(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (const auto& c : problem.couplings()) {
    adj[static_cast<std::size_t>(c.i * n + c.j)] = c.value;
    adj[static_cast<std::size_t>(c.j * n + c.i)] = c.value;
  }
  // Gray-code walk: one spin flip per step, energy updated from the local field.
  std::vector<int> s(static_cast<std::size_t>(n), 1);
  std::uint64_t gray = 0;
  double energy = basis_energy(problem, 0);
  const double window = 1e-7 * scale;
  double best = energy;
  std::vector<std::uint64_t> candidates{0};
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < dim; ++step) {
    const int q = std::countr_zero(step);
    double local = problem.fields()[static_cast<std::size_t>(q)];
    const double* row = adj.data() + static_cast<std::size_t>(q) * static_cast<std::size_t>(n);
    for (int j = 0; j < n; ++j) local += row[j] * s[static_cast<std::size_t>(j)];
    energy -= 2.0 * s[static_cast<std::size_t>(q)] * local;
    s[static_cast<std::size_t>(q)] = -s[static_cast<std::size_t>(q)];
    gray ^= std::uint64_t{1} << q;
    if (energy < best - window) {
      best = energy;
      candidates.clear();
      candidates.push_back(gray);
    } else if (energy <= best + window) {
      best = std::min(best, energy);
      candidates.push_back(gray);
    }
  }
  // Re-evaluate the survivors directly so accumulated drift never decides a tie.
  GroundTruth gt;
  std::vector<double> exact(candidates.size());
  double min_e = INFINITY;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    exact[k] = basis_energy(problem, candidates[k]);
    min_e = std::min(min_e, exact[k]);
  }
  const double tie = 1e-10 * scale;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (exact[k] <= min_e + tie) gt.indices.push_back(candidates[k]);
  }
  std::sort(gt.indices.begin(), gt.indices.end());
  gt.energy = min_e;
  for (auto idx : gt.indices) gt.bitstrings.push_back(spins_from_index(idx, n));
  return gt;
}

std::vector<int> spins_from_index(std::uint64_t index, int n_qubits) {
  std::vector<int> s(static_cast<std::size_t>(n_qubits));
  for (int q = 0; q < n_qubits; ++q) s[static_cast<std::size_t>(q)] = IsingProblem::spin_of(index, q);
  return s;
}

std::uint64_t index_from_spins(const std::vector<int>& spins) {
  if (spins.size() > 63) throw ArgumentError("too many spins for a basis index");
  std::uint64_t idx = 0;
  for (std::size_t q = 0; q < spins.size(); ++q) {
    if (spins[q] == -1) {
      idx |= std::uint64_t{1} << q;
    } else if (spins[q] != 1) {
      throw ArgumentError("spins must be +1 or -1");
    }
  }
  return idx;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> e, std::vector<double> w)
    : n_nodes(n), weights(std::move(w)) {
  if (n_nodes < 1) throw ArgumentError("graph needs at least one node");
  if (static_cast<int>(weights.size()) != n_nodes) {
    throw ArgumentError("weights length " + std::to_string(weights.size()) + " does not match " +
                        std::to_string(n_nodes) + " nodes");
  }
  for (double x : weights) {
    if (!std::isfinite(x) || x < 0.0) throw ArgumentError("node weights must be finite and nonnegative");
  }
  std::set<std::pair<int, int>> unique;
  for (auto [a, b] : e) {
    if (a == b) throw ArgumentError("self-loop on node " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n_nodes) throw ArgumentError("edge endpoint out of range");
    unique.emplace(a, b);
  }
  edges.assign(unique.begin(), unique.end());
}

int Graph::degree(int node) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(),
                                        [node](const auto& e) { return e.first == node || e.second == node; }));
}

bool Graph::is_independent(const std::vector<int>& nodes) const {
  std::set<int> chosen(nodes.begin(), nodes.end());
  return std::none_of(edges.begin(), edges.end(),
                      [&](const auto& e) { return chosen.count(e.first) && chosen.count(e.second); });
}

double default_penalty(const Graph& graph) {
  const double wmax = graph.weights.empty() ? 0.0 : *std::max_element(graph.weights.begin(), graph.weights.end());
  return wmax > 0.0 ? 2.0 * wmax : 1.0;
}

IsingProblem mis_to_ising(const Graph& graph, double penalty) {
  const double wmax = *std::max_element(graph.weights.begin(), graph.weights.end());
  if (!(penalty > wmax)) {
    throw ArgumentError("MIS penalty " + std::to_string(penalty) + " must exceed the max node weight " +
                        std::to_string(wmax));
  }
  // -w x + P x_i x_j with x = (1 - s)/2:
  //   -w/2 + (w/2) s_i ;  P/4 (1 - s_i - s_j + s_i s_j)
  std::vector<double> h(static_cast<std::size_t>(graph.n_nodes));
  double offset = 0.0;
  for (int i = 0; i < graph.n_nodes; ++i) {
    h[static_cast<std::size_t>(i)] = graph.weights[static_cast<std::size_t>(i)] / 2.0;
    offset -= graph.weights[static_cast<std::size_t>(i)] / 2.0;
  }
  std::vector<Coupling> cs;
  for (const auto& [a, b] : graph.edges) {
    cs.push_back({a, b, penalty / 4.0});
    h[static_cast<std::size_t>(a)] -= penalty / 4.0;
    h[static_cast<std::size_t>(b)] -= penalty / 4.0;
    offset += penalty / 4.0;
  }
  return IsingProblem(graph.n_nodes, std::move(cs), std::move(h), offset);
}

IsingProblem mis_to_ising(const Graph& graph) { return mis_to_ising(graph, default_penalty(graph)); }

std::vector<int> mis_selection(std::uint64_t index, int n_nodes) {
  std::vector<int> nodes;
  for (int q = 0; q < n_nodes; ++q) {
    if ((index >> q) & 1) nodes.push_back(q);
  }
  return nodes;
}

double selection_weight(const Graph& graph, const std::vector<int>& nodes) {
  double w = 0.0;
  for (int v : nodes) w += graph.weights.at(static_cast<std::size_t>(v));
  return w;
}

InstanceMode parse_instance_mode(std::string_view name) {
  if (name == "homogeneous") return InstanceMode::homogeneous;
  if (name == "mixed") return InstanceMode::mixed;
  if (name == "fully_nonuniform" || name == "fully-nonuniform") return InstanceMode::fully_nonuniform;
  throw ArgumentError("unknown instance mode '" + std::string(name) + "'");
}

std::string to_string(InstanceMode mode) {
  switch (mode) {
    case InstanceMode::homogeneous: return "homogeneous";
    case InstanceMode::mixed: return "mixed";
    case InstanceMode::fully_nonuniform: return "fully_nonuniform";
  }
  return "?";
}

IsingProblem random_spin_glass(int n, std::uint64_t seed, InstanceMode mode) {
  if (n < 1) throw ArgumentError("random_spin_glass needs n >= 1");
  Rng rng(derive_seed(seed, 0x5e1f));
  if (mode == InstanceMode::homogeneous) {
    const double j = rng.sign() * rng.uniform(0.1, 1.0);
    const double h = rng.sign() * rng.uniform(0.1, 1.0);
    return IsingProblem::homogeneous(n, j, h);
  }
  auto draw = [&]() {
    if (mode == InstanceMode::mixed) return rng.sign() * (rng.bernoulli(0.5) ? 1.0 : 0.5);
    return rng.sign() * rng.uniform(0.1, 1.0);
  };
  std::vector<Coupling> cs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) cs.push_back({i, j, draw()});
  }
  std::vector<double> h(static_cast<std::size_t>(n));
  for (auto& x : h) x = draw();
  return IsingProblem(n, std::move(cs), std::move(h));
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed, InstanceMode mode) {
  if (n < 1) throw ArgumentError("random_graph needs n >= 1");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) throw ArgumentError("edge probability outside [0, 1]");
  Rng rng(derive_seed(seed, 0x9a4f));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(edge_probability)) edges.emplace_back(i, j);
    }
  }
  std::vector<double> w(static_cast<std::size_t>(n), 1.0);
  if (mode == InstanceMode::mixed) {
    for (auto& x : w) x = rng.bernoulli(0.5) ? 1.0 : 0.5;
  } else if (mode == InstanceMode::fully_nonuniform) {
    for (auto& x : w) x = rng.uniform(0.1, 1.0);
  }
  return Graph(n, std::move(edges), std::move(w));
}

}  // namespace dacqo
