#include <cmath>
#include <numbers>

#include "dense_oracles.hpp"
#include "doctest.h"
#include "dacqo/error.hpp"
#include "dacqo/gates.hpp"
#include "dacqo/random.hpp"

using namespace dacqo;

namespace {

constexpr double kPi = std::numbers::pi;

DenseOperator kron_all(int k, const DenseOperator& single) {
  DenseOperator out = DenseOperator::Identity(1 << k, 1 << k);
  for (int q = 0; q < k; ++q) out = testing::embed(k, {q}, single) * out;
  return out;
}

DenseOperator swap_gate(int k, int a, int b) {
  const int dim = 1 << k;
  DenseOperator s = DenseOperator::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    int j = i;
    const int ba = (i >> a) & 1, bb = (i >> b) & 1;
    if (ba != bb) j = i ^ (1 << a) ^ (1 << b);
    s(j, i) = 1.0;
  }
  return s;
}

}  // namespace

TEST_CASE("gms unitary basics") {
  CHECK((gms_unitary(2, 0.0, 0.7) - DenseOperator::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);
  const DenseOperator xx = pauli_string(2, {{0, Pauli::X}, {1, Pauli::X}});
  CHECK(phase_invariant_distance(gms_unitary(2, kPi, 0.0), -xx) < 1e-12);
  // the global phase is e^{-i pi/2}: exp(-i pi/4 S_x^2) = -i * (-i XX) = -XX
  CHECK((gms_unitary(2, kPi, 0.0) + xx).cwiseAbs().maxCoeff() < 1e-12);

  Rng rng(5);
  for (int k = 2; k <= 5; ++k) {
    for (int trial = 0; trial < 4; ++trial) {
      const double theta = rng.uniform(-kPi, kPi), phi = rng.uniform(-kPi, kPi);
      const DenseOperator u = gms_unitary(k, theta, phi);
      CHECK(unitarity_defect(u) < 1e-11);
      for (int a = 0; a + 1 < k; ++a) {
        const DenseOperator s = swap_gate(k, a, a + 1);
        CHECK((s * u * s - u).cwiseAbs().maxCoeff() < 1e-12);
      }
      // rotating every qubit by Rz(phi) maps X to cos(phi) X + sin(phi) Y
      const DenseOperator rz = kron_all(k, rotation_unitary(Axis::z, phi));
      CHECK((rz * gms_unitary(k, theta, 0.0) * rz.adjoint() - u).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  CHECK_THROWS_AS(gms_unitary(11, 0.1, 0.0), CapabilityError);
  CHECK_THROWS_AS(gms_unitary(1, 0.1, 0.0), ArgumentError);
}

TEST_CASE("rotation unitaries") {
  for (auto [axis, p] : {std::pair{Axis::x, Pauli::X}, std::pair{Axis::y, Pauli::Y}, std::pair{Axis::z, Pauli::Z}}) {
    const DenseOperator sigma = pauli_string(1, {{0, p}});
    CHECK((rotation_unitary(axis, 0.83) - expm(Complex(0.0, -0.415) * sigma)).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("pair generator of a single gms gate") {
  for (double phi : {0.0, 0.4, -1.1, 2.0}) {
    const double theta = 0.3;
    const DenseOperator g = unitary_generator(gms_unitary(2, theta, phi));
    const PairGenerator pg = gms_pair_generator(theta, phi);
    CHECK(pauli_coefficient(g, {{0, Pauli::X}, {1, Pauli::X}}).real() == doctest::Approx(pg.xx).epsilon(1e-10));
    CHECK(pauli_coefficient(g, {{0, Pauli::X}, {1, Pauli::Y}}).real() == doctest::Approx(pg.xy).epsilon(1e-10));
    CHECK(pauli_coefficient(g, {{0, Pauli::Y}, {1, Pauli::X}}).real() == doctest::Approx(pg.xy).epsilon(1e-10));
    CHECK(pauli_coefficient(g, {{0, Pauli::Y}, {1, Pauli::Y}}).real() == doctest::Approx(pg.yy).epsilon(1e-10));
  }
}

TEST_CASE("angle map") {
  const auto p = IsingProblem::homogeneous(3, 1.0, 1.0);
  Schedule s(1.0, 10);
  const AngleSet a = angle_map(p, s, 5);
  const double t = 0.45, pi = kPi;
  const double lam = std::pow(std::sin(pi / 2 * std::pow(std::sin(pi * t / 2), 2)), 2);
  const double ldot = std::sin(pi * std::pow(std::sin(pi * t / 2), 2)) * (pi / 2) * std::sin(pi * t) * (pi / 2);
  const double alpha_frame = -alpha1_oracle(p, lam);
  CHECK(std::abs(a.theta_xx - lam * 0.1) < 1e-12);
  CHECK(std::abs(a.theta_x - lam * 0.1) < 1e-12);
  CHECK(std::abs(a.theta_z - (1 - lam) * 0.1) < 1e-12);
  CHECK(std::abs(a.theta_xy - 2 * ldot * alpha_frame * 0.1) < 1e-12);
  CHECK(std::abs(a.theta_y - 2 * ldot * alpha_frame * 0.1) < 1e-12);

  Schedule fine(1.0, 1000);
  const AngleSet first = angle_map(p, fine, 1);
  CHECK(first.theta_xx < 1e-9);
  CHECK(first.theta_xy < 1e-9);
  CHECK(first.theta_z == doctest::Approx(1e-3).epsilon(1e-6));
  const AngleSet last = angle_map(p, fine, 1000);
  CHECK(last.theta_z < 1e-9);
  CHECK(std::abs(last.theta_xy) < 1e-6);

  CHECK_THROWS_AS(angle_map(IsingProblem(2, {{0, 1, 1.0}}, {0.0, 1.0}), s, 1), ArgumentError);
  CHECK_THROWS_AS(angle_map(p, s, 11), ArgumentError);
}

TEST_CASE("gms angle solving") {
  auto one = solve_gms_angles(0.2, 0.0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].theta == doctest::Approx(0.4));
  CHECK(one[0].phi == 0.0);
  CHECK(solve_gms_angles(0.0, 0.0).empty());

  auto gen = solve_gms_angles(0.3, -0.2);
  REQUIRE(gen.size() == 2);
  CHECK(gen[1].kind == GateKind::gms_dag);
  CHECK(gen[1].phi == doctest::Approx(kPi / 2));
  CHECK(gen[1].theta == doctest::Approx(gen[0].theta * std::pow(std::sin(gen[0].phi), 2)));
  const PairGenerator pg = gms_pair_generator(gen[0].theta, gen[0].phi);
  CHECK(pg.xx == doctest::Approx(0.3));
  CHECK(pg.xy == doctest::Approx(-0.2));

  // matrix-log check at small angles, where commutator corrections are below the tolerance
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = rng.uniform(-1e-4, 1e-4), b = rng.uniform(-1e-4, 1e-4);
    DenseOperator u = DenseOperator::Identity(4, 4);
    for (const auto& g : solve_gms_angles(a, b)) {
      const Gate gate = g.kind == GateKind::gms ? Gate::gms({0, 1}, g.theta, g.phi) : Gate::gms_dag({0, 1}, g.theta, g.phi);
      u = gate_unitary(gate) * u;
    }
    const DenseOperator lg = unitary_generator(u);
    CHECK(std::abs(pauli_coefficient(lg, {{0, Pauli::X}, {1, Pauli::X}}).real() - a) < 1e-10);
    CHECK(std::abs(pauli_coefficient(lg, {{0, Pauli::X}, {1, Pauli::Y}}).real() - b) < 1e-10);
    CHECK(std::abs(pauli_coefficient(lg, {{0, Pauli::Y}, {1, Pauli::X}}).real() - b) < 1e-10);
    CHECK(std::abs(pauli_coefficient(lg, {{0, Pauli::Y}, {1, Pauli::Y}}).real()) < 1e-10);
  }

  // XY-only targets need the extra XX canceller
  auto deg = solve_gms_angles(0.0, 1e-4);
  REQUIRE(deg.size() == 3);
  DenseOperator u = DenseOperator::Identity(4, 4);
  for (const auto& g : deg) {
    u = gate_unitary(g.kind == GateKind::gms ? Gate::gms({0, 1}, g.theta, g.phi) : Gate::gms_dag({0, 1}, g.theta, g.phi)) * u;
  }
  const DenseOperator lg = unitary_generator(u);
  CHECK(std::abs(pauli_coefficient(lg, {{0, Pauli::X}, {1, Pauli::X}}).real()) < 1e-10);
  CHECK(std::abs(pauli_coefficient(lg, {{0, Pauli::X}, {1, Pauli::Y}}).real() - 1e-4) < 1e-10);
  CHECK(std::abs(pauli_coefficient(lg, {{0, Pauli::Y}, {1, Pauli::Y}}).real()) < 1e-10);
}

TEST_CASE("parasitic YY residual is third order in the gate angle") {
  // The canceller does not commute with the gate, so the composed generator keeps an
  // O(theta^3) YY term; the ratio to theta^3 stays bounded as theta shrinks.
  for (int k = 2; k <= 4; ++k) {
    const double phi = 0.6;
    double prev_ratio = -1.0;
    for (double theta : {0.4, 0.2, 0.1, 0.05}) {
      const DenseOperator u = gms_unitary(k, theta * std::pow(std::sin(phi), 2), kPi / 2).adjoint() * gms_unitary(k, theta, phi);
      const DenseOperator lg = unitary_generator(u);
      const double yy = std::abs(pauli_coefficient(lg, {{0, Pauli::Y}, {1, Pauli::Y}}).real());
      const double ratio = yy / std::pow(theta, 3);
      CHECK(ratio < 0.1);
      if (prev_ratio > 0) CHECK(std::abs(ratio - prev_ratio) < 0.3 * prev_ratio);
      prev_ratio = ratio;
    }
  }
}

TEST_CASE("gms conjugation of Z") {
  const double theta = 0.7;
  auto e2 = gms_conjugate_pauli(2, theta, 0);
  REQUIRE(e2.size() == 2);
  CHECK(e2[0].coefficient == doctest::Approx(std::cos(theta / 2)));
  CHECK(e2[0].factors.size() == 1);
  CHECK(e2[0].factors[0].op == Pauli::Z);
  CHECK(e2[1].coefficient == doctest::Approx(-std::sin(theta / 2)));
  CHECK(e2[1].factors[0].op == Pauli::Y);
  CHECK(e2[1].factors[1].op == Pauli::X);

  auto e0 = gms_conjugate_pauli(4, 0.0, 2);
  REQUIRE(e0.size() == 1);
  CHECK(e0[0].coefficient == 1.0);
  CHECK(e0[0].factors[0].qubit == 2);

  Rng rng(3);
  for (int k = 2; k <= 5; ++k) {
    for (int l = 0; l < k; ++l) {
      const double th = rng.uniform(-3.0, 3.0);
      const DenseOperator u = gms_unitary(k, th / 2.0, 0.0);
      const DenseOperator dense = u * pauli_string(k, {{l, Pauli::Z}}) * u.adjoint();
      CHECK((expansion_to_dense(k, gms_conjugate_pauli(k, th, l)) - dense).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  // sign pattern by number of partner X factors: +, -, -, +, +, ...
  const int pattern[4] = {1, -1, -1, 1};
  for (int k = 2; k <= 5; ++k) {
    for (const auto& t : gms_conjugate_pauli(k, 1.1, 0)) {
      const int n = static_cast<int>(t.factors.size()) - 1;
      CHECK((t.coefficient > 0 ? 1 : -1) == pattern[n % 4]);
      CHECK(t.factors[0].op == (n % 2 ? Pauli::Y : Pauli::Z));
    }
  }
  CHECK_THROWS_AS(gms_conjugate_pauli(6, 0.1, 0), CapabilityError);
}
