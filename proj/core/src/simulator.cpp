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

#include "dacqo/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "dacqo/error.hpp"
#include "dacqo/random.hpp"

namespace dacqo {

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1) throw ArgumentError("state vector needs at least one qubit");
  require_dense_capacity(n_qubits, kMaxSimulationQubits, "StateVector");
  amps_.assign(dimension_of(n_qubits), Complex(0.0, 0.0));
  amps_[0] = 1.0;
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dimension()) throw ArgumentError("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm_squared() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return acc;
}

void StateVector::apply_matrix(std::span<const int> qubits, const DenseOperator& u) {
  const int k = static_cast<int>(qubits.size());
  if (k < 1 || k > n_) throw ArgumentError("apply_matrix: bad qubit count");
  if (u.rows() != (Eigen::Index{1} << k) || u.cols() != u.rows()) {
    throw ArgumentError("apply_matrix: unitary dimension does not match qubit count");
  }
  std::uint64_t seen = 0;
  for (int q : qubits) {
    if (q < 0 || q >= n_) throw ArgumentError("qubit index " + std::to_string(q) + " out of range");
    if (seen & (std::uint64_t{1} << q)) throw ArgumentError("apply_matrix: repeated qubit");
    seen |= std::uint64_t{1} << q;
  }
  if (k == 1) {
    const std::uint64_t stride = std::uint64_t{1} << qubits[0];
    const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (std::uint64_t base = 0; base < amps_.size(); base += 2 * stride) {
      for (std::uint64_t i = base; i < base + stride; ++i) {
        const Complex a0 = amps_[i], a1 = amps_[i + stride];
        amps_[i] = u00 * a0 + u01 * a1;
        amps_[i + stride] = u10 * a0 + u11 * a1;
      }
    }
    return;
  }
  std::vector<int> sorted(qubits.begin(), qubits.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t local = std::size_t{1} << k;
  std::vector<std::uint64_t> offset(local, 0);
  for (std::size_t m = 0; m < local; ++m) {
    for (int j = 0; j < k; ++j) {
      if ((m >> j) & 1) offset[m] |= std::uint64_t{1} << qubits[static_cast<std::size_t>(j)];
    }
  }
  Eigen::VectorXcd in(static_cast<Eigen::Index>(local)), out(static_cast<Eigen::Index>(local));
  const std::uint64_t outer = amps_.size() >> k;
  for (std::uint64_t r = 0; r < outer; ++r) {
    std::uint64_t base = r;
    for (int q : sorted) {
      const std::uint64_t low = base & ((std::uint64_t{1} << q) - 1);
      base = ((base >> q) << (q + 1)) | low;
    }
    for (std::size_t m = 0; m < local; ++m) in(static_cast<Eigen::Index>(m)) = amps_[base | offset[m]];
    out.noalias() = u * in;
    for (std::size_t m = 0; m < local; ++m) amps_[base | offset[m]] = out(static_cast<Eigen::Index>(m));
  }
}

void StateVector::apply_pauli(int qubit, Pauli p) {
  if (qubit < 0 || qubit >= n_) throw ArgumentError("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (p) {
    case Pauli::I:
      return;
    case Pauli::X:
      for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
      }
      return;
    case Pauli::Y:
      // Y|0> = i|1>, Y|1> = -i|0>
      for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        const Complex a0 = amps_[i], a1 = amps_[i | bit];
        amps_[i] = Complex(0.0, -1.0) * a1;
        amps_[i | bit] = Complex(0.0, 1.0) * a0;
      }
      return;
    case Pauli::Z:
      for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) amps_[i] = -amps_[i];
      }
      return;
  }
}

void StateVector::apply_hadamard_all() {
  const double r = 1.0 / std::sqrt(2.0);
  for (int q = 0; q < n_; ++q) {
    const std::uint64_t stride = std::uint64_t{1} << q;
    for (std::uint64_t base = 0; base < amps_.size(); base += 2 * stride) {
      for (std::uint64_t i = base; i < base + stride; ++i) {
        const Complex a0 = amps_[i], a1 = amps_[i + stride];
        amps_[i] = r * (a0 + a1);
        amps_[i + stride] = r * (a0 - a1);
      }
    }
  }
}

void apply_gate(StateVector& state, const Gate& gate, const DenseOperator* override_unitary) {
  for (int q : gate.qubits) {
    if (q < 0 || q >= state.n_qubits()) throw ArgumentError("gate qubit " + std::to_string(q) + " out of range");
  }
  if (override_unitary) {
    state.apply_matrix(gate.qubits, *override_unitary);
  } else {
    state.apply_matrix(gate.qubits, gate_unitary(gate));
  }
}

void NoiseModel::validate() const {
  if (!(analog_noise_amplitude >= 0.0) || !std::isfinite(analog_noise_amplitude)) {
    throw ArgumentError("analog noise amplitude must be finite and >= 0");
  }
  if (!(depolarizing_rate >= 0.0 && depolarizing_rate <= 1.0)) throw ArgumentError("depolarizing rate outside [0, 1]");
  if (!(entangling_error_rate >= 0.0 && entangling_error_rate <= 1.0)) {
    throw ArgumentError("entangling error rate outside [0, 1]");
  }
}

DenseOperator perturb_analog_block(const DenseOperator& u, double c, std::uint64_t seed) {
  if (!(c >= 0.0)) throw ArgumentError("noise amplitude must be >= 0");
  if (c == 0.0) return u;
  Rng rng(seed);
  const double s = std::sqrt(0.5);
  DenseOperator g(u.rows(), u.cols());
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(s * re, s * im);
    }
  }
  return polar_unitary(u + c * g);
}

DenseOperator polar_unitary(const DenseOperator& m) {
  // Scaled Newton iteration X <- (z X + X^{-H} / z) / 2; SVD when it stalls or M is singular.
  DenseOperator x = m;
  for (int it = 0; it < 60; ++it) {
    Eigen::PartialPivLU<DenseOperator> lu(x);
    const DenseOperator inv_h = lu.inverse().adjoint();
    if (!inv_h.allFinite()) break;
    const double z = std::sqrt(inv_h.norm() / x.norm());
    const DenseOperator next = 0.5 * (z * x + inv_h / z);
    const double change = (next - x).norm();
    x = next;
    if (change <= 1e-13 * std::sqrt(static_cast<double>(x.rows()))) return x;
  }
  Eigen::JacobiSVD<DenseOperator> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

double gate_fidelity(const DenseOperator& u, const DenseOperator& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) throw ArgumentError("gate_fidelity: dimension mismatch");
  return std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.rows());
}

StateVector initial_state(int n_qubits) {
  return StateVector::basis_state(n_qubits, dimension_of(n_qubits) - 1);
}

StateVector final_state(const Circuit& circuit) {
  StateVector s = initial_state(circuit.width());
  for (const auto& layer : circuit.layers()) {
    for (const auto& g : layer) apply_gate(s, g);
  }
  return s;
}

double success_probability(const StateVector& frame_state, std::span<const std::uint64_t> optimal_indices) {
  StateVector measured = frame_state;
  measured.apply_hadamard_all();
  double p = 0.0;
  for (auto idx : optimal_indices) p += measured.probability(idx);
  return std::clamp(p, 0.0, 1.0);
}

namespace {

constexpr std::size_t kChunk = 8;

struct TrajectoryOutcome {
  double success = 0.0;
  double fidelity_sum = 0.0;
  std::size_t fidelity_count = 0;
};

struct PreparedGate {
  const Gate* gate;
  DenseOperator unitary;
};

TrajectoryOutcome run_trajectory(const std::vector<PreparedGate>& gates, int width,
                                 std::span<const std::uint64_t> optimal, const NoiseModel& noise,
                                 std::uint64_t trajectory, std::vector<double>* distribution) {
  const std::uint64_t tseed = derive_seed(noise.seed, trajectory);
  Rng rng(derive_seed(tseed, 0xdead));
  StateVector s = initial_state(width);
  TrajectoryOutcome out;
  for (std::size_t gi = 0; gi < gates.size(); ++gi) {
    const auto& pg = gates[gi];
    const Gate& g = *pg.gate;
    if (g.is_entangling() && noise.analog_noise_amplitude > 0.0) {
      const DenseOperator v = perturb_analog_block(pg.unitary, noise.analog_noise_amplitude, derive_seed(tseed, gi));
      out.fidelity_sum += gate_fidelity(pg.unitary, v);
      ++out.fidelity_count;
      s.apply_matrix(g.qubits, v);
    } else {
      s.apply_matrix(g.qubits, pg.unitary);
    }
    if (noise.depolarizing_rate > 0.0) {
      for (int q : g.qubits) {
        if (rng.bernoulli(noise.depolarizing_rate)) s.apply_pauli(q, static_cast<Pauli>(1 + rng.below(3)));
      }
    }
    if (g.is_entangling() && noise.entangling_error_rate > 0.0 && rng.bernoulli(noise.entangling_error_rate)) {
      const std::uint64_t k = g.qubits.size();
      const std::uint64_t pick = 1 + rng.below((std::uint64_t{1} << (2 * k)) - 1);
      for (std::uint64_t j = 0; j < k; ++j) {
        s.apply_pauli(g.qubits[j], static_cast<Pauli>((pick >> (2 * j)) & 3));
      }
    }
  }
  s.apply_hadamard_all();
  for (auto idx : optimal) out.success += s.probability(idx);
  out.success = std::clamp(out.success, 0.0, 1.0);
  if (distribution) {
    for (std::uint64_t i = 0; i < s.dimension(); ++i) (*distribution)[i] += s.probability(i);
  }
  return out;
}

}  // namespace

RunResult run(const Circuit& circuit, std::span<const std::uint64_t> optimal_indices, const NoiseModel& noise,
              const RunOptions& options) {
  noise.validate();
  require_dense_capacity(circuit.width(), kMaxSimulationQubits, "run");
  if (options.trajectories < 1) throw ArgumentError("trajectories must be >= 1");
  if (options.shots < 0) throw ArgumentError("shots must be >= 0");
  const std::uint64_t dim = dimension_of(circuit.width());
  for (auto idx : optimal_indices) {
    if (idx >= dim) throw ArgumentError("optimal index outside the register");
  }
  std::vector<PreparedGate> gates;
  for (const auto& layer : circuit.layers()) {
    for (const auto& g : layer) gates.push_back({&g, gate_unitary(g)});
  }
  const std::size_t trajectories = noise.is_noiseless() ? 1 : static_cast<std::size_t>(options.trajectories);
  const std::size_t chunks = (trajectories + kChunk - 1) / kChunk;
  std::vector<TrajectoryOutcome> outcomes(trajectories);
  const bool want_dist = options.shots > 0;
  std::vector<std::vector<double>> chunk_dist(want_dist ? chunks : 0);

  auto work_chunk = [&](std::size_t c) {
    std::vector<double>* dist = nullptr;
    if (want_dist) {
      chunk_dist[c].assign(dim, 0.0);
      dist = &chunk_dist[c];
    }
    const std::size_t end = std::min(trajectories, (c + 1) * kChunk);
    for (std::size_t t = c * kChunk; t < end; ++t) {
      outcomes[t] = run_trajectory(gates, circuit.width(), optimal_indices, noise, t, dist);
    }
  };
  unsigned threads = options.threads > 0 ? static_cast<unsigned>(options.threads) : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (threads == 1) {
    for (std::size_t c = 0; c < chunks; ++c) work_chunk(c);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t c = w; c < chunks; c += threads) work_chunk(c);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  RunResult r;
  r.trajectories = static_cast<int>(trajectories);
  double sum = 0.0, fsum = 0.0;
  std::size_t fcount = 0;
  for (const auto& o : outcomes) {
    sum += o.success;
    fsum += o.fidelity_sum;
    fcount += o.fidelity_count;
  }
  r.success_probability = sum / static_cast<double>(trajectories);
  if (trajectories > 1) {
    double var = 0.0;
    for (const auto& o : outcomes) var += (o.success - r.success_probability) * (o.success - r.success_probability);
    var /= static_cast<double>(trajectories - 1);
    r.standard_error = std::sqrt(var / static_cast<double>(trajectories));
  }
  r.gms_fidelity = fcount > 0 ? fsum / static_cast<double>(fcount) : 1.0;

  if (want_dist) {
    std::vector<double> cdf(dim, 0.0);
    for (const auto& d : chunk_dist) {
      for (std::uint64_t i = 0; i < dim; ++i) cdf[i] += d[i];
    }
    std::partial_sum(cdf.begin(), cdf.end(), cdf.begin());
    Rng rng(derive_seed(noise.seed, 0x5407));
    const double total = cdf.back();
    for (int s = 0; s < options.shots; ++s) {
      const double u = rng.uniform() * total;
      auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
      if (it == cdf.end()) --it;
      ++r.shots[static_cast<std::uint64_t>(it - cdf.begin())];
    }
  }
  return r;
}

std::vector<SweepPoint> success_vs_fidelity_sweep(const IsingProblem& problem, const Schedule& schedule, int k,
                                                  const std::vector<double>& c_grid, const NoiseModel& noise,
                                                  const RunOptions& options) {
  if (c_grid.empty()) throw ArgumentError("noise grid is empty");
  const Circuit circuit = synthesize(problem, schedule, k);
  const GroundTruth gt = brute_force_ground_state(problem);
  std::vector<SweepPoint> out;
  for (double c : c_grid) {
    NoiseModel nm = noise;
    nm.analog_noise_amplitude = c;
    const RunResult r = run(circuit, gt.indices, nm, options);
    out.push_back({c, r.gms_fidelity, r.success_probability, r.standard_error});
  }
  std::stable_sort(out.begin(), out.end(), [](const SweepPoint& a, const SweepPoint& b) { return a.fidelity < b.fidelity; });
  return out;
}

}  // namespace dacqo
