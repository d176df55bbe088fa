// Independent reference constructions used only by the tests.
#pragma once

#include <cmath>
#include <vector>

#include "dacqo/counterdiabatic.hpp"
#include "dacqo/gates.hpp"
#include "dacqo/linalg.hpp"
#include "dacqo/problem.hpp"
#include "dacqo/random.hpp"
#include "dacqo/simulator.hpp"
#include "dacqo/synthesis.hpp"

namespace dacqo::testing {

inline IsingProblem random_problem(int n, std::uint64_t seed, double edge_probability = 1.0) {
  Rng rng(seed);
  std::vector<Coupling> cs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform() < edge_probability) cs.push_back({i, j, rng.uniform(-1.0, 1.0)});
    }
  }
  std::vector<double> h(static_cast<std::size_t>(n));
  for (auto& x : h) x = rng.uniform(-1.0, 1.0);
  return IsingProblem(n, std::move(cs), std::move(h));
}

// Embeds a gate's local unitary into the full register by explicit tensor products.
inline DenseOperator embed(int n, const std::vector<int>& qubits, const DenseOperator& local) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
  DenseOperator full = DenseOperator::Zero(dim, dim);
  const int k = static_cast<int>(qubits.size());
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index lc = 0;
    for (int j = 0; j < k; ++j) lc |= ((col >> qubits[static_cast<std::size_t>(j)]) & 1) << j;
    for (Eigen::Index lr = 0; lr < (Eigen::Index{1} << k); ++lr) {
      Eigen::Index row = col;
      for (int j = 0; j < k; ++j) {
        const Eigen::Index bit = Eigen::Index{1} << qubits[static_cast<std::size_t>(j)];
        row = ((lr >> j) & 1) ? (row | bit) : (row & ~bit);
      }
      full(row, col) += local(lr, lc);
    }
  }
  return full;
}

// Dense unitary of a whole circuit, later layers on the left.
inline DenseOperator circuit_unitary(const Circuit& c) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << c.width());
  DenseOperator u = DenseOperator::Identity(dim, dim);
  for (const auto& layer : c.layers()) {
    for (const auto& g : layer) u = embed(c.width(), g.qubits, gate_unitary(g)) * u;
  }
  return u;
}

inline Eigen::VectorXcd as_vector(const StateVector& s) {
  const auto a = s.amplitudes();
  return Eigen::Map<const Eigen::VectorXcd>(a.data(), static_cast<Eigen::Index>(a.size()));
}

inline double state_infidelity(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return 1.0 - std::norm(a.dot(b));
}

}  // namespace dacqo::testing
