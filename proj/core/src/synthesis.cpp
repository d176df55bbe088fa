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

#include "dacqo/synthesis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>

#include "dacqo/error.hpp"

namespace dacqo {

Circuit::Circuit(int width) : width_(width) {
  if (width < 1) throw ArgumentError("circuit width must be positive");
}

void Circuit::add_layer(Layer layer) {
  if (layer.empty()) return;
  std::vector<bool> used(static_cast<std::size_t>(width_), false);
  for (const auto& g : layer) {
    if (g.qubits.empty()) throw ArgumentError("gate without qubits");
    if (g.kind == GateKind::single && g.qubits.size() != 1) throw ArgumentError("single-qubit gate on several qubits");
    for (int q : g.qubits) {
      if (q < 0 || q >= width_) {
        throw ArgumentError("gate qubit " + std::to_string(q) + " outside circuit width " + std::to_string(width_));
      }
      if (used[static_cast<std::size_t>(q)]) {
        throw SynthesisError("layer " + std::to_string(layers_.size()) + " touches qubit " + std::to_string(q) + " twice");
      }
      used[static_cast<std::size_t>(q)] = true;
    }
  }
  layers_.push_back(std::move(layer));
}

void Circuit::append(const Circuit& other) {
  if (other.width_ != width_) throw ArgumentError("cannot append circuits of different width");
  const std::size_t base = layers_.size();
  for (auto s : other.step_starts_) step_starts_.push_back(base + s);
  layers_.insert(layers_.end(), other.layers_.begin(), other.layers_.end());
}

std::size_t Circuit::gate_count() const {
  std::size_t c = 0;
  for (const auto& l : layers_) c += l.size();
  return c;
}

std::size_t Circuit::entangling_gate_count() const {
  std::size_t c = 0;
  for (const auto& l : layers_) {
    c += static_cast<std::size_t>(std::count_if(l.begin(), l.end(), [](const Gate& g) { return g.is_entangling(); }));
  }
  return c;
}

bool is_entangling_layer(const Layer& layer) {
  return std::any_of(layer.begin(), layer.end(), [](const Gate& g) { return g.is_entangling(); });
}

DepthReport depth_report(const Circuit& circuit, double analytic_total) {
  DepthReport r;
  for (const auto& l : circuit.layers()) {
    if (is_entangling_layer(l)) {
      ++r.multiqubit_layers;
    } else {
      ++r.single_qubit_layers;
    }
  }
  r.total = r.multiqubit_layers + r.single_qubit_layers;
  r.analytic_total = analytic_total;
  return r;
}

namespace {

void check_block_size(int k) {
  if (k < kMinBlock || k > kMaxBlock) {
    throw ArgumentError("block size " + std::to_string(k) + " outside [" + std::to_string(kMinBlock) + ", " +
                        std::to_string(kMaxBlock) + "]");
  }
}

QubitPair ordered(int a, int b) { return a < b ? QubitPair{a, b} : QubitPair{b, a}; }

std::vector<int> range_block(int start, int size) {
  std::vector<int> b(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) b[static_cast<std::size_t>(i)] = start + i;
  return b;
}

void cover_block(std::set<QubitPair>& covered, const std::vector<int>& block) {
  for (std::size_t a = 0; a < block.size(); ++a) {
    for (std::size_t b = a + 1; b < block.size(); ++b) covered.insert(ordered(block[a], block[b]));
  }
}

std::vector<std::vector<int>> primary_blocks(int n, int k) {
  std::vector<std::vector<int>> out;
  int start = 0;
  for (; start + k <= n; start += k) out.push_back(range_block(start, k));
  if (n - start >= 2) out.push_back(range_block(start, n - start));
  return out;
}

std::vector<std::vector<int>> shifted_blocks(int n, int k) {
  std::vector<std::vector<int>> out;
  for (int start = k / 2; start + k <= n; start += k) out.push_back(range_block(start, k));
  return out;
}

// Pair idle qubits first-fit with the first later idle qubit whose pair is still wanted.
std::vector<QubitPair> first_fit_fills(int n, const std::vector<std::vector<int>>& busy_sets,
                                       const std::function<bool(int, int)>& wanted) {
  std::vector<bool> busy(static_cast<std::size_t>(n), false);
  for (const auto& s : busy_sets) {
    for (int q : s) busy[static_cast<std::size_t>(q)] = true;
  }
  std::vector<QubitPair> fills;
  for (int i = 0; i < n; ++i) {
    if (busy[static_cast<std::size_t>(i)]) continue;
    for (int j = i + 1; j < n; ++j) {
      if (busy[static_cast<std::size_t>(j)] || !wanted(i, j)) continue;
      fills.emplace_back(i, j);
      busy[static_cast<std::size_t>(i)] = busy[static_cast<std::size_t>(j)] = true;
      break;
    }
  }
  return fills;
}

std::vector<std::vector<int>> as_blocks(const std::vector<QubitPair>& pairs) {
  std::vector<std::vector<int>> out;
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

Gate make_gate(const GmsPrescription& p, const std::vector<int>& qubits) {
  return p.kind == GateKind::gms ? Gate::gms(qubits, p.theta, p.phi) : Gate::gms_dag(qubits, p.theta, p.phi);
}

struct GateGroup {
  std::vector<int> qubits;
  const std::vector<GmsPrescription>* gates;
};

// Layer j carries the j-th prescription of every group.
void emit_groups(Circuit& circuit, const std::vector<GateGroup>& groups) {
  std::size_t depth = 0;
  for (const auto& g : groups) depth = std::max(depth, g.gates->size());
  for (std::size_t j = 0; j < depth; ++j) {
    Layer layer;
    for (const auto& g : groups) {
      if (j < g.gates->size()) layer.push_back(make_gate((*g.gates)[j], g.qubits));
    }
    circuit.add_layer(std::move(layer));
  }
}

void emit_single_layer(Circuit& circuit, Axis axis, const std::vector<double>& angles) {
  Layer layer;
  for (std::size_t q = 0; q < angles.size(); ++q) {
    if (std::abs(angles[q]) >= kAngleEpsilon) layer.push_back(Gate::rotation(static_cast<int>(q), axis, angles[q]));
  }
  circuit.add_layer(std::move(layer));
}

// X, Z, Y rotation layers of one step; R_a(theta) = exp(-i theta/2 sigma_a).
void emit_single_qubit_terms(Circuit& circuit, const IsingProblem& problem, const StepCoefficients& sc) {
  const int n = problem.n_qubits();
  std::vector<double> ax(static_cast<std::size_t>(n)), az(static_cast<std::size_t>(n), 2.0 * sc.z()),
      ay(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    const double h = problem.fields()[static_cast<std::size_t>(q)];
    ax[static_cast<std::size_t>(q)] = 2.0 * sc.x(h);
    ay[static_cast<std::size_t>(q)] = 2.0 * sc.y(h);
  }
  emit_single_layer(circuit, Axis::x, ax);
  emit_single_layer(circuit, Axis::z, az);
  emit_single_layer(circuit, Axis::y, ay);
}

bool is_complete_pair_set(int n, const std::vector<QubitPair>& edges) {
  return edges.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

std::vector<std::vector<QubitPair>> circle_rounds(int n) {
  const int m = n % 2 == 0 ? n : n + 1;
  std::vector<std::vector<QubitPair>> rounds;
  for (int r = 0; r < m - 1; ++r) {
    std::vector<QubitPair> round;
    auto add = [&](int a, int b) {
      if (a < n && b < n) round.push_back(ordered(a, b));
    };
    add(r, m - 1);
    for (int i = 1; i < m / 2; ++i) add((r + i) % (m - 1), (r - i + (m - 1)) % (m - 1));
    std::sort(round.begin(), round.end());
    rounds.push_back(std::move(round));
  }
  return rounds;
}

}  // namespace

std::size_t BlockPlan::leftover_pair_count() const {
  std::size_t c = 0;
  for (const auto& r : leftover_rounds) c += r.size();
  return c;
}

double remaining_pair_count(int n, int k) { return (n - k) * (n - k + 1) / 2.0; }

std::vector<std::vector<QubitPair>> schedule_matchings(int n, std::vector<QubitPair> edges) {
  for (auto& e : edges) {
    e = ordered(e.first, e.second);
    if (e.first == e.second || e.first < 0 || e.second >= n) throw ArgumentError("invalid pair in schedule_matchings");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.empty()) return {};
  if (is_complete_pair_set(n, edges)) return circle_rounds(n);

  std::set<QubitPair> remaining(edges.begin(), edges.end());
  std::vector<std::vector<QubitPair>> rounds;
  while (!remaining.empty()) {
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
    for (auto [a, b] : remaining) {
      nbr[static_cast<std::size_t>(a)].push_back(b);
      nbr[static_cast<std::size_t>(b)].push_back(a);
    }
    auto deg = [&](int v) { return static_cast<int>(nbr[static_cast<std::size_t>(v)].size()); };
    int dmax = 0;
    for (int v = 0; v < n; ++v) dmax = std::max(dmax, deg(v));
    std::vector<int> heavy;
    for (int v = 0; v < n; ++v) {
      if (deg(v) == dmax) heavy.push_back(v);
    }
    for (auto& list : nbr) {
      std::sort(list.begin(), list.end(), [&](int x, int y) { return std::pair(-deg(x), x) < std::pair(-deg(y), y); });
    }
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    long budget = 100000;
    std::function<bool(std::size_t)> saturate = [&](std::size_t idx) -> bool {
      while (idx < heavy.size() && mate[static_cast<std::size_t>(heavy[idx])] >= 0) ++idx;
      if (idx == heavy.size()) return true;
      if (--budget < 0) return false;
      const int v = heavy[idx];
      for (int u : nbr[static_cast<std::size_t>(v)]) {
        if (mate[static_cast<std::size_t>(u)] >= 0) continue;
        mate[static_cast<std::size_t>(v)] = u;
        mate[static_cast<std::size_t>(u)] = v;
        if (saturate(idx + 1)) return true;
        mate[static_cast<std::size_t>(v)] = mate[static_cast<std::size_t>(u)] = -1;
      }
      return false;
    };
    if (!saturate(0)) std::fill(mate.begin(), mate.end(), -1);
    // Extend (or build, after a failed search) greedily by degree.
    std::vector<QubitPair> order(remaining.begin(), remaining.end());
    std::stable_sort(order.begin(), order.end(), [&](const QubitPair& x, const QubitPair& y) {
      return deg(x.first) + deg(x.second) > deg(y.first) + deg(y.second);
    });
    for (auto [a, b] : order) {
      if (mate[static_cast<std::size_t>(a)] < 0 && mate[static_cast<std::size_t>(b)] < 0) {
        mate[static_cast<std::size_t>(a)] = b;
        mate[static_cast<std::size_t>(b)] = a;
      }
    }
    std::vector<QubitPair> round;
    for (int v = 0; v < n; ++v) {
      const int u = mate[static_cast<std::size_t>(v)];
      if (u > v) round.emplace_back(v, u);
    }
    for (const auto& p : round) remaining.erase(p);
    rounds.push_back(std::move(round));
  }
  return rounds;
}

BlockPlan plan_homogeneous_blocks(int n, int k) {
  check_block_size(k);
  if (n < k) throw ArgumentError("homogeneous synthesis needs N >= k");
  BlockPlan plan;
  plan.n = n;
  plan.k = k;
  std::set<QubitPair> covered;
  plan.primary_blocks = primary_blocks(n, k);
  for (const auto& b : plan.primary_blocks) cover_block(covered, b);

  plan.shifted_blocks = shifted_blocks(n, k);
  for (const auto& s : plan.shifted_blocks) {
    for (const auto& p : plan.primary_blocks) {
      std::vector<int> common;
      std::set_intersection(s.begin(), s.end(), p.begin(), p.end(), std::back_inserter(common));
      if (common.size() >= 2) plan.overlap_regions.push_back(std::move(common));
    }
    cover_block(covered, s);
  }
  auto uncovered = [&](int a, int b) { return !covered.count(ordered(a, b)); };
  plan.shifted_fills = first_fit_fills(n, plan.shifted_blocks, uncovered);
  for (auto p : plan.shifted_fills) covered.insert(p);
  plan.overlap_fills = first_fit_fills(n, plan.overlap_regions, uncovered);
  for (auto p : plan.overlap_fills) covered.insert(p);

  std::vector<QubitPair> rest;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (uncovered(a, b)) rest.emplace_back(a, b);
    }
  }
  plan.leftover_rounds = schedule_matchings(n, std::move(rest));
  return plan;
}

bool uses_homogeneous_path(const IsingProblem& problem) {
  return problem.n_qubits() >= 2 && problem.is_homogeneous() && problem.is_complete();
}

Circuit synthesize_homogeneous(const IsingProblem& problem, const Schedule& schedule, int k, SynthesisOptions options) {
  if (!problem.is_homogeneous()) {
    throw ArgumentError("synthesize_homogeneous needs a homogeneous problem; use synthesize_inhomogeneous");
  }
  const int n = problem.n_qubits();
  if (!is_complete_pair_set(n, [&] {
        std::vector<QubitPair> v;
        for (const auto& c : problem.couplings()) v.emplace_back(c.i, c.j);
        return v;
      }())) {
    throw ArgumentError("synthesize_homogeneous needs an all-to-all coupling map");
  }
  const BlockPlan plan = plan_homogeneous_blocks(n, k);
  const double j = problem.couplings().front().value;
  Circuit circuit(n);
  for (int step = 1; step <= schedule.trotter_steps(); ++step) {
    circuit.begin_step();
    const StepCoefficients sc = step_coefficients(problem, schedule, step, options.include_cd);
    const auto gates = solve_gms_angles(sc.xx(j), sc.xy(j));
    const auto correction = solve_gms_angles(-sc.xx(j), -sc.xy(j));

    std::vector<GateGroup> groups;
    for (const auto& b : plan.primary_blocks) groups.push_back({b, &gates});
    emit_groups(circuit, groups);

    groups.clear();
    for (const auto& b : plan.shifted_blocks) groups.push_back({b, &gates});
    for (const auto& b : as_blocks(plan.shifted_fills)) groups.push_back({b, &gates});
    emit_groups(circuit, groups);

    groups.clear();
    for (const auto& b : plan.overlap_regions) groups.push_back({b, &correction});
    for (const auto& b : as_blocks(plan.overlap_fills)) groups.push_back({b, &gates});
    emit_groups(circuit, groups);

    for (const auto& round : plan.leftover_rounds) {
      groups.clear();
      for (const auto& b : as_blocks(round)) groups.push_back({b, &gates});
      emit_groups(circuit, groups);
    }
    emit_single_qubit_terms(circuit, problem, sc);
  }
  return circuit;
}

std::vector<QubitPair> block_pairs(int k) {
  std::vector<QubitPair> out;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) out.emplace_back(a, b);
  }
  return out;
}

const std::vector<std::vector<int>>& block_flip_masks(int k) {
  check_block_size(k);
  static const std::array<std::vector<std::vector<int>>, kMaxBlock + 1> table = [] {
    std::array<std::vector<std::vector<int>>, kMaxBlock + 1> t;
    for (int kk = kMinBlock; kk <= kMaxBlock; ++kk) {
      const auto pairs = block_pairs(kk);
      const auto b = static_cast<Eigen::Index>(pairs.size());
      // Candidates by size, then lexicographically; the empty mask comes first.
      std::vector<std::vector<int>> candidates;
      for (int size = 0; size <= kk; ++size) {
        std::vector<bool> pick(static_cast<std::size_t>(kk), false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
          std::vector<int> m;
          for (int q = 0; q < kk; ++q) {
            if (pick[static_cast<std::size_t>(q)]) m.push_back(q);
          }
          candidates.push_back(std::move(m));
        } while (std::prev_permutation(pick.begin(), pick.end()));
      }
      Eigen::MatrixXd cols(b, 0);
      for (const auto& m : candidates) {
        if (cols.cols() == b) break;
        Eigen::MatrixXd trial(b, cols.cols() + 1);
        trial.leftCols(cols.cols()) = cols;
        for (Eigen::Index p = 0; p < b; ++p) {
          const auto [x, y] = pairs[static_cast<std::size_t>(p)];
          const int hits = static_cast<int>(std::count(m.begin(), m.end(), x) + std::count(m.begin(), m.end(), y));
          trial(p, cols.cols()) = hits % 2 ? -1.0 : 1.0;
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(trial);
        if (lu.rank() == trial.cols()) {
          cols = trial;
          t[static_cast<std::size_t>(kk)].push_back(m);
        }
      }
    }
    return t;
  }();
  return table[static_cast<std::size_t>(k)];
}

Eigen::MatrixXd block_sign_matrix(int k) {
  const auto pairs = block_pairs(k);
  const auto& masks = block_flip_masks(k);
  const auto b = static_cast<Eigen::Index>(pairs.size());
  if (static_cast<Eigen::Index>(masks.size()) != b) throw SynthesisError("sign matrix is not square");
  Eigen::MatrixXd s(b, b);
  for (Eigen::Index p = 0; p < b; ++p) {
    const auto [x, y] = pairs[static_cast<std::size_t>(p)];
    for (Eigen::Index m = 0; m < b; ++m) {
      const auto& mask = masks[static_cast<std::size_t>(m)];
      const int hits = static_cast<int>(std::count(mask.begin(), mask.end(), x) + std::count(mask.begin(), mask.end(), y));
      s(p, m) = hits % 2 ? -1.0 : 1.0;
    }
  }
  return s;
}

std::vector<SubBlock> solve_block_inhomogeneity(int k, const std::vector<double>& target_xx,
                                                const std::vector<double>& target_xy) {
  check_block_size(k);
  const auto b = static_cast<std::size_t>(k * (k - 1) / 2);
  if (target_xx.size() != b || target_xy.size() != b) {
    throw ArgumentError("block targets must have k(k-1)/2 entries");
  }
  const Eigen::MatrixXd s = block_sign_matrix(k);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(s);
  if (lu.rank() != s.rows()) throw SynthesisError("pair-sign matrix is singular");
  const Eigen::Map<const Eigen::VectorXd> txx(target_xx.data(), static_cast<Eigen::Index>(b));
  const Eigen::Map<const Eigen::VectorXd> txy(target_xy.data(), static_cast<Eigen::Index>(b));
  Eigen::VectorXd a = lu.solve(txx);
  Eigen::VectorXd c = lu.solve(txy);
  const double scale = std::max(txx.cwiseAbs().maxCoeff(), txy.cwiseAbs().maxCoeff());
  const double resid = std::max((s * a - txx).cwiseAbs().maxCoeff(), (s * c - txy).cwiseAbs().maxCoeff());
  if (!(resid <= 1e-9 * (1.0 + scale))) {
    throw SynthesisError("block targets not reproducible, residual " + std::to_string(resid));
  }
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (std::abs(a(i)) <= 1e-13 * scale) a(i) = 0.0;
    if (std::abs(c(i)) <= 1e-13 * scale) c(i) = 0.0;
  }
  std::vector<SubBlock> out(b);
  const auto& masks = block_flip_masks(k);
  for (std::size_t i = 0; i < b; ++i) {
    out[i].flip_mask = masks[i];
    out[i].xx = a(static_cast<Eigen::Index>(i));
    out[i].xy = c(static_cast<Eigen::Index>(i));
    out[i].gates = solve_gms_angles(out[i].xx, out[i].xy);
  }
  return out;
}

namespace {

struct InhomogeneousStage {
  std::vector<std::vector<int>> blocks;
  std::vector<std::vector<bool>> pair_active;  // per block, per local pair
  std::vector<QubitPair> fills;
};

struct InhomogeneousPlan {
  InhomogeneousStage primary;
  InhomogeneousStage shifted;
  std::vector<std::vector<QubitPair>> leftover_rounds;
};

InhomogeneousPlan plan_inhomogeneous(const IsingProblem& problem, int k) {
  const int n = problem.n_qubits();
  InhomogeneousPlan plan;
  std::set<QubitPair> covered;
  auto wanted = [&](int a, int b) { return problem.coupling(a, b) != 0.0 && !covered.count(ordered(a, b)); };
  auto build = [&](InhomogeneousStage& stage, std::vector<std::vector<int>> candidates) {
    std::vector<std::vector<int>> busy;
    for (auto& blk : candidates) {
      const auto pairs = block_pairs(static_cast<int>(blk.size()));
      std::vector<bool> active(pairs.size(), false);
      bool any = false;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const int a = blk[static_cast<std::size_t>(pairs[p].first)];
        const int b = blk[static_cast<std::size_t>(pairs[p].second)];
        active[p] = wanted(a, b);
        any = any || active[p];
      }
      if (!any) continue;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (active[p]) {
          covered.insert(ordered(blk[static_cast<std::size_t>(pairs[p].first)], blk[static_cast<std::size_t>(pairs[p].second)]));
        }
      }
      busy.push_back(blk);
      stage.blocks.push_back(std::move(blk));
      stage.pair_active.push_back(std::move(active));
    }
    stage.fills = first_fit_fills(n, busy, wanted);
    for (auto p : stage.fills) covered.insert(p);
  };
  build(plan.primary, primary_blocks(n, k));
  build(plan.shifted, shifted_blocks(n, k));
  std::vector<QubitPair> rest;
  for (const auto& c : problem.couplings()) {
    if (wanted(c.i, c.j)) rest.emplace_back(c.i, c.j);
  }
  plan.leftover_rounds = schedule_matchings(n, std::move(rest));
  return plan;
}

void emit_inhomogeneous_stage(Circuit& circuit, const IsingProblem& problem, const StepCoefficients& sc,
                              const InhomogeneousStage& stage) {
  std::vector<std::vector<SubBlock>> solved;
  std::size_t depth = 0;
  for (std::size_t bi = 0; bi < stage.blocks.size(); ++bi) {
    const auto& blk = stage.blocks[bi];
    const int size = static_cast<int>(blk.size());
    const auto pairs = block_pairs(size);
    std::vector<double> txx(pairs.size(), 0.0), txy(pairs.size(), 0.0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (!stage.pair_active[bi][p]) continue;
      const double j = problem.coupling(blk[static_cast<std::size_t>(pairs[p].first)], blk[static_cast<std::size_t>(pairs[p].second)]);
      txx[p] = sc.xx(j);
      txy[p] = sc.xy(j);
    }
    solved.push_back(solve_block_inhomogeneity(size, txx, txy));
    depth = std::max(depth, solved.back().size());
  }
  std::vector<std::vector<GmsPrescription>> fill_gates;
  for (auto [a, b] : stage.fills) {
    const double j = problem.coupling(a, b);
    fill_gates.push_back(solve_gms_angles(sc.xx(j), sc.xy(j)));
  }
  depth = std::max<std::size_t>(depth, stage.fills.empty() ? 0 : 1);
  for (std::size_t i = 0; i < depth; ++i) {
    Layer flip, unflip;
    std::vector<GateGroup> groups;
    for (std::size_t bi = 0; bi < solved.size(); ++bi) {
      if (i >= solved[bi].size() || solved[bi][i].gates.empty()) continue;
      const auto& sub = solved[bi][i];
      for (int local : sub.flip_mask) {
        const int q = stage.blocks[bi][static_cast<std::size_t>(local)];
        flip.push_back(Gate::rotation(q, Axis::z, std::numbers::pi));
        unflip.push_back(Gate::rotation(q, Axis::z, -std::numbers::pi));
      }
      groups.push_back({stage.blocks[bi], &sub.gates});
    }
    if (i == 0) {
      for (std::size_t f = 0; f < stage.fills.size(); ++f) {
        groups.push_back({{stage.fills[f].first, stage.fills[f].second}, &fill_gates[f]});
      }
    }
    circuit.add_layer(std::move(flip));
    emit_groups(circuit, groups);
    circuit.add_layer(std::move(unflip));
  }
}

}  // namespace

Circuit synthesize_inhomogeneous(const IsingProblem& problem, const Schedule& schedule, int k, SynthesisOptions options) {
  check_block_size(k);
  const int n = problem.n_qubits();
  const InhomogeneousPlan plan = plan_inhomogeneous(problem, k);
  Circuit circuit(n);
  for (int step = 1; step <= schedule.trotter_steps(); ++step) {
    circuit.begin_step();
    const StepCoefficients sc = step_coefficients(problem, schedule, step, options.include_cd);
    emit_inhomogeneous_stage(circuit, problem, sc, plan.primary);
    emit_inhomogeneous_stage(circuit, problem, sc, plan.shifted);
    for (const auto& round : plan.leftover_rounds) {
      std::vector<std::vector<GmsPrescription>> gates;
      for (auto [a, b] : round) {
        const double j = problem.coupling(a, b);
        gates.push_back(solve_gms_angles(sc.xx(j), sc.xy(j)));
      }
      std::vector<GateGroup> groups;
      for (std::size_t p = 0; p < round.size(); ++p) groups.push_back({{round[p].first, round[p].second}, &gates[p]});
      emit_groups(circuit, groups);
    }
    emit_single_qubit_terms(circuit, problem, sc);
  }
  return circuit;
}

Circuit synthesize(const IsingProblem& problem, const Schedule& schedule, int k, SynthesisOptions options) {
  if (uses_homogeneous_path(problem)) {
    return synthesize_homogeneous(problem, schedule, std::min(k, problem.n_qubits()), options);
  }
  return synthesize_inhomogeneous(problem, schedule, k, options);
}

Circuit synthesize_digital_baseline(const IsingProblem& problem, const Schedule& schedule, SynthesisOptions options) {
  const int n = problem.n_qubits();
  std::vector<QubitPair> pairs;
  for (const auto& c : problem.couplings()) {
    if (c.value != 0.0) pairs.emplace_back(c.i, c.j);
  }
  const auto rounds = schedule_matchings(n, pairs);
  Circuit circuit(n);
  for (int step = 1; step <= schedule.trotter_steps(); ++step) {
    circuit.begin_step();
    const StepCoefficients sc = step_coefficients(problem, schedule, step, options.include_cd);
    Circuit body(n);
    auto xx_layer = [&](const std::vector<QubitPair>& round, auto angle_of) {
      Layer layer;
      for (auto [a, b] : round) {
        const double theta = angle_of(problem.coupling(a, b));
        if (std::abs(theta) >= kAngleEpsilon) layer.push_back(Gate::gms({a, b}, 2.0 * theta, 0.0));
      }
      return layer;
    };
    for (const auto& round : rounds) body.add_layer(xx_layer(round, [&](double j) { return sc.xx(j); }));
    emit_single_layer(body, Axis::x, [&] {
      std::vector<double> a(static_cast<std::size_t>(n));
      for (int q = 0; q < n; ++q) a[static_cast<std::size_t>(q)] = 2.0 * sc.x(problem.fields()[static_cast<std::size_t>(q)]);
      return a;
    }());
    emit_single_layer(body, Axis::z, std::vector<double>(static_cast<std::size_t>(n), 2.0 * sc.z()));
    // exp(-i t Y_a X_b) = Rz_a(pi/2) exp(-i t X_a X_b) Rz_a(-pi/2)
    for (int y_on_second = 0; y_on_second < 2; ++y_on_second) {
      for (const auto& round : rounds) {
        Layer xx = xx_layer(round, [&](double j) { return sc.xy(j); });
        if (xx.empty()) continue;
        Layer pre, post;
        for (const auto& g : xx) {
          const int q = g.qubits[static_cast<std::size_t>(y_on_second)];
          pre.push_back(Gate::rotation(q, Axis::z, -std::numbers::pi / 2.0));
          post.push_back(Gate::rotation(q, Axis::z, std::numbers::pi / 2.0));
        }
        body.add_layer(std::move(pre));
        body.add_layer(std::move(xx));
        body.add_layer(std::move(post));
      }
    }
    emit_single_layer(body, Axis::y, [&] {
      std::vector<double> a(static_cast<std::size_t>(n));
      for (int q = 0; q < n; ++q) a[static_cast<std::size_t>(q)] = 2.0 * sc.y(problem.fields()[static_cast<std::size_t>(q)]);
      return a;
    }());
    // Merge runs of adjacent Z-only layers.
    auto z_only = [](const Layer& l) {
      return std::all_of(l.begin(), l.end(), [](const Gate& g) { return g.kind == GateKind::single && g.axis == Axis::z; });
    };
    std::vector<Layer> merged;
    for (const auto& layer : body.layers()) {
      if (!merged.empty() && z_only(layer) && z_only(merged.back())) {
        std::map<int, double> angle;
        for (const auto& g : merged.back()) angle[g.qubits[0]] += g.theta;
        for (const auto& g : layer) angle[g.qubits[0]] += g.theta;
        Layer combined;
        for (auto [q, th] : angle) {
          if (std::abs(th) >= kAngleEpsilon) combined.push_back(Gate::rotation(q, Axis::z, th));
        }
        merged.back() = std::move(combined);
        if (merged.back().empty()) merged.pop_back();
      } else {
        merged.push_back(layer);
      }
    }
    for (auto& l : merged) circuit.add_layer(std::move(l));
  }
  return circuit;
}

double analytic_depth(int n, int k, DepthVariant variant, int m) {
  if (k < 2 || n < k) throw ArgumentError("analytic_depth needs N >= k >= 2");
  if (m < 0) throw ArgumentError("analytic_depth needs M >= 0");
  const double nn = n;
  switch (variant) {
    case DepthVariant::homogeneous:
      return 9.0 + 2.0 * (n - k) * (n - k + 1) / nn;
    case DepthVariant::programmable_xx:
      return 6.0 + 2.0 * (n - 4.0) * (n - 3.0) / nn;
    case DepthVariant::programmable_xx_nonlocal: {
      const double bracket = (n - 4.0) * (n - 3.0) - 6.0 * m;
      if (bracket < 0.0) throw ArgumentError("M too large for N in the nonlocal depth formula");
      return 6.0 + 2.0 * bracket / nn;
    }
  }
  throw ArgumentError("unknown depth variant");
}

LayerSplit analytic_homogeneous_split(int n, int k) {
  const double total = analytic_depth(n, k, DepthVariant::homogeneous);
  return {total - 3.0, 3.0};
}

LayerSplit analytic_inhomogeneous_split(int n, int k) {
  if (k < 2 || n < k) throw ArgumentError("analytic_inhomogeneous_split needs N >= k >= 2");
  const double blocks = k * (k - 1) / 2.0;
  return {4.0 * blocks + 2.0 + 2.0 * (n - k) * (n - k + 1) / static_cast<double>(n), 3.0 + 2.0 * k * (k - 1)};
}

LayerSplit analytic_digital_split(int n) {
  if (n < 1) throw ArgumentError("analytic_digital_split needs N >= 1");
  const double chi = n == 1 ? 0.0 : (n % 2 == 0 ? n - 1.0 : static_cast<double>(n));
  return {3.0 * chi, 2.0 * chi + 3.0};
}

}  // namespace dacqo
