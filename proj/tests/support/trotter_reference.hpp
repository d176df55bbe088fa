// Trotter-product references built from Pauli-sum exponentials, independent of the
// gate unitaries and of the state-vector kernel.
#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "dacqo/counterdiabatic.hpp"
#include "dacqo/gates.hpp"
#include "dacqo/linalg.hpp"
#include "dacqo/synthesis.hpp"

namespace dacqo::testing {

inline DenseOperator identity_on(int n) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
  return DenseOperator::Identity(dim, dim);
}

struct PairTerm {
  double xx = 0.0, xy = 0.0, yy = 0.0;
};

inline DenseOperator pair_sum(int n, const std::vector<QubitPair>& pairs, const PairTerm& t) {
  DenseOperator h = DenseOperator::Zero(1 << n, 1 << n);
  for (auto [a, b] : pairs) {
    h += t.xx * pauli_string(n, {{a, Pauli::X}, {b, Pauli::X}});
    h += t.xy * (pauli_string(n, {{a, Pauli::X}, {b, Pauli::Y}}) + pauli_string(n, {{a, Pauli::Y}, {b, Pauli::X}}));
    h += t.yy * pauli_string(n, {{a, Pauli::Y}, {b, Pauli::Y}});
  }
  return h;
}

inline std::vector<QubitPair> pairs_of(const std::vector<int>& block) {
  std::vector<QubitPair> out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = i + 1; j < block.size(); ++j) out.emplace_back(block[i], block[j]);
  }
  return out;
}

// exp(-i sum_p [a XX + b (XY + YX) + y YY]) followed by exp(+i y sum_p YY), y = b^2 / a:
// the analog group of one layer and its YY canceller.
inline DenseOperator analog_group(int n, const std::vector<QubitPair>& pairs, double a, double b) {
  if (pairs.empty()) return identity_on(n);
  const double y = (std::abs(a) > 1e-14 && std::abs(b) > 1e-14) ? b * b / a : 0.0;
  const DenseOperator first = expm(Complex(0.0, -1.0) * pair_sum(n, pairs, {a, b, y}));
  const DenseOperator cancel = expm(Complex(0.0, 1.0) * pair_sum(n, pairs, {0.0, 0.0, y}));
  return cancel * first;
}

inline DenseOperator single_sum(int n, Pauli p, double coeff) {
  DenseOperator h = DenseOperator::Zero(1 << n, 1 << n);
  for (int q = 0; q < n; ++q) h += coeff * pauli_string(n, {{q, p}});
  return h;
}

// Ordered product for the homogeneous construction: analog groups in layer order
// (primary blocks, shifted blocks with fills, overlap corrections with fills, leftover
// rounds), then exp(-i theta_x sum X), exp(-i theta_z sum Z), exp(-i theta_y sum Y).
inline DenseOperator homogeneous_trotter_product(const IsingProblem& problem, const Schedule& schedule, int k,
                                                 bool include_cd = true) {
  const int n = problem.n_qubits();
  const BlockPlan plan = plan_homogeneous_blocks(n, k);
  DenseOperator u = identity_on(n);
  for (int s = 1; s <= schedule.trotter_steps(); ++s) {
    const AngleSet ang = angle_map(problem, schedule, s, include_cd);
    const double a = ang.theta_xx, b = ang.theta_xy;
    std::vector<QubitPair> layer;
    for (const auto& blk : plan.primary_blocks) {
      for (auto p : pairs_of(blk)) layer.push_back(p);
    }
    u = analog_group(n, layer, a, b) * u;

    layer.clear();
    for (const auto& blk : plan.shifted_blocks) {
      for (auto p : pairs_of(blk)) layer.push_back(p);
    }
    for (auto p : plan.shifted_fills) layer.push_back(p);
    u = analog_group(n, layer, a, b) * u;

    std::vector<QubitPair> corr;
    for (const auto& blk : plan.overlap_regions) {
      for (auto p : pairs_of(blk)) corr.push_back(p);
    }
    // corrections and fills share the layer and act on disjoint qubits
    u = analog_group(n, corr, -a, -b) * analog_group(n, plan.overlap_fills, a, b) * u;

    for (const auto& round : plan.leftover_rounds) u = analog_group(n, round, a, b) * u;

    u = expm(Complex(0.0, -1.0) * single_sum(n, Pauli::X, ang.theta_x)) * u;
    u = expm(Complex(0.0, -1.0) * single_sum(n, Pauli::Z, ang.theta_z)) * u;
    u = expm(Complex(0.0, -1.0) * single_sum(n, Pauli::Y, ang.theta_y)) * u;
  }
  return u;
}

// First-order generator of each trotter step, read off the gates: pair coefficients
// from the GMS parametrization (signed by Z-pi flip parity) and single-qubit angles.
struct StepGenerator {
  std::map<QubitPair, PairTerm> pairs;
  std::vector<double> x, y, z;
};

inline std::vector<StepGenerator> step_generators(const Circuit& c) {
  std::vector<StepGenerator> out;
  const auto& starts = c.step_starts();
  for (std::size_t s = 0; s < starts.size(); ++s) {
    const std::size_t end = s + 1 < starts.size() ? starts[s + 1] : c.layers().size();
    StepGenerator g;
    g.x.assign(static_cast<std::size_t>(c.width()), 0.0);
    g.y = g.z = g.x;
    std::vector<int> flipped(static_cast<std::size_t>(c.width()), 0);
    for (std::size_t l = starts[s]; l < end; ++l) {
      for (const auto& gate : c.layers()[l]) {
        if (gate.kind == GateKind::single) {
          const auto q = static_cast<std::size_t>(gate.qubits[0]);
          if (gate.axis == Axis::z && std::abs(std::abs(gate.theta) - M_PI) < 1e-15) {
            flipped[q] ^= 1;
            continue;
          }
          auto& v = gate.axis == Axis::x ? g.x : gate.axis == Axis::y ? g.y : g.z;
          v[q] += gate.theta / 2.0;
          continue;
        }
        const double sign = gate.kind == GateKind::gms ? 1.0 : -1.0;
        const PairGenerator pg = gms_pair_generator(gate.theta, gate.phi);
        for (auto [a, b] : pairs_of(gate.qubits)) {
          const double parity = (flipped[static_cast<std::size_t>(a)] ^ flipped[static_cast<std::size_t>(b)]) ? -1.0 : 1.0;
          auto& t = g.pairs[{std::min(a, b), std::max(a, b)}];
          t.xx += sign * parity * pg.xx;
          t.xy += sign * parity * pg.xy;
          t.yy += sign * parity * pg.yy;
        }
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace dacqo::testing
