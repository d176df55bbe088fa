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

#include <cstddef>
#include <utility>
#include <vector>

#include "dacqo/counterdiabatic.hpp"
#include "dacqo/gates.hpp"
#include "dacqo/problem.hpp"

namespace dacqo {

using Layer = std::vector<Gate>;
using QubitPair = std::pair<int, int>;

class Circuit {
 public:
  explicit Circuit(int width);

  int width() const { return width_; }
  const std::vector<Layer>& layers() const { return layers_; }
  // Index of the first layer of each trotter step.
  const std::vector<std::size_t>& step_starts() const { return step_starts_; }

  // Validates qubit range and disjointness; empty layers are dropped.
  void add_layer(Layer layer);
  void begin_step() { step_starts_.push_back(layers_.size()); }
  void append(const Circuit& other);

  std::size_t gate_count() const;
  std::size_t entangling_gate_count() const;

 private:
  int width_;
  std::vector<Layer> layers_;
  std::vector<std::size_t> step_starts_;
};

bool is_entangling_layer(const Layer& layer);

struct DepthReport {
  int multiqubit_layers = 0;
  int single_qubit_layers = 0;
  int total = 0;
  double analytic_total = 0.0;
};

// analytic_total is filled by the caller when a closed form applies.
DepthReport depth_report(const Circuit& circuit, double analytic_total = 0.0);

// Layer plan of the homogeneous construction for one trotter step.
struct BlockPlan {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> primary_blocks;   // Layer 1, consecutive groups [mk, mk+k) plus a tail
  std::vector<std::vector<int>> shifted_blocks;   // Layer 3, groups shifted by floor(k/2)
  std::vector<QubitPair> shifted_fills;           // Layer 3, 2-qubit GMS on qubits idle there
  std::vector<std::vector<int>> overlap_regions;  // Layer 5, qubit sets covered by both 1 and 3
  std::vector<QubitPair> overlap_fills;           // Layer 5, 2-qubit GMS on qubits idle there
  std::vector<std::vector<QubitPair>> leftover_rounds;

  std::size_t leftover_pair_count() const;
};

BlockPlan plan_homogeneous_blocks(int n, int k);

// n_p = (N-k)(N-k+1)/2
double remaining_pair_count(int n, int k);

// Rounds of disjoint pairs covering `edges`. Complete graphs use the circle method;
// other graphs peel matchings that saturate every maximum-degree vertex when one is found.
std::vector<std::vector<QubitPair>> schedule_matchings(int n, std::vector<QubitPair> edges);

struct SynthesisOptions {
  bool include_cd = true;
};

inline constexpr int kMinBlock = 2;
inline constexpr int kMaxBlock = 6;

Circuit synthesize_homogeneous(const IsingProblem& problem, const Schedule& schedule, int k,
                               SynthesisOptions options = {});
Circuit synthesize_inhomogeneous(const IsingProblem& problem, const Schedule& schedule, int k,
                                 SynthesisOptions options = {});
// Homogeneous path for uniform all-to-all problems, inhomogeneous path otherwise.
Circuit synthesize(const IsingProblem& problem, const Schedule& schedule, int k, SynthesisOptions options = {});
bool uses_homogeneous_path(const IsingProblem& problem);

Circuit synthesize_digital_baseline(const IsingProblem& problem, const Schedule& schedule,
                                    SynthesisOptions options = {});

// One GMS group of an inhomogeneous block: Z-pi flips on `flip_mask` (local indices)
// around gates realizing strength (xx, xy) on every pair, signed by the mask.
struct SubBlock {
  std::vector<int> flip_mask;
  double xx = 0.0;
  double xy = 0.0;
  std::vector<GmsPrescription> gates;
};

// Local pairs (a, b), a < b, in lexicographic order; targets are indexed the same way.
std::vector<QubitPair> block_pairs(int k);
// Flip masks for a k-block, chosen so the pair-sign matrix is invertible.
const std::vector<std::vector<int>>& block_flip_masks(int k);
// sign(pair p, mask m) = (-1)^{|p intersect m|}
Eigen::MatrixXd block_sign_matrix(int k);

std::vector<SubBlock> solve_block_inhomogeneity(int k, const std::vector<double>& target_xx,
                                                const std::vector<double>& target_xy);

enum class DepthVariant { homogeneous, programmable_xx, programmable_xx_nonlocal };

// Homogeneous: 9 + 2(N-k)(N-k+1)/N; programmable XX: 6 + 2(N-4)(N-3)/N;
// nonlocal: 6 + 2[(N-4)(N-3) - 6M]/N.
double analytic_depth(int n, int k, DepthVariant variant, int m = 0);

// Per-step layer split used by the runtime models.
struct LayerSplit {
  double multiqubit = 0.0;
  double single_qubit = 0.0;
  double total() const { return multiqubit + single_qubit; }
};

// Homogeneous: analytic_depth with three single-qubit layers.
LayerSplit analytic_homogeneous_split(int n, int k);
// Block replacement: 4 k(k-1)/2 + 2 + 4 n_p / N analog layers, 3 + 2k(k-1) single-qubit layers.
LayerSplit analytic_inhomogeneous_split(int n, int k);
// Digital: 3 chi analog layers, 2 chi + 3 single-qubit layers, chi = N-1 (even N) or N (odd N).
LayerSplit analytic_digital_split(int n);

}  // namespace dacqo
