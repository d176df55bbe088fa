#include <doctest.h>

#include <cmath>

#include "dacqo/error.hpp"
#include "dacqo/simulator.hpp"
#include "dense_oracles.hpp"

using namespace dacqo;

namespace {

DenseOperator random_unitary(int k, std::uint64_t seed) {
  const int d = 1 << k;
  Rng rng(seed);
  DenseOperator h(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) h(i, j) = Complex(rng.normal(), rng.normal());
  }
  h = (h + h.adjoint()).eval();
  return hermitian_expm(h, 1.0);
}

Eigen::VectorXcd random_state(int n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXcd v(1 << n);
  for (auto& x : v) x = Complex(rng.normal(), rng.normal());
  return v.normalized();
}

StateVector from_vector(int n, const Eigen::VectorXcd& v) {
  StateVector s(n);
  auto a = s.amplitudes();
  for (Eigen::Index i = 0; i < v.size(); ++i) a[static_cast<std::size_t>(i)] = v(i);
  return s;
}

}  // namespace

TEST_CASE("apply_matrix agrees with dense embedding") {
  const int n = 5;
  for (const std::vector<int>& qs : std::vector<std::vector<int>>{{0}, {3}, {4, 1}, {0, 2, 4}, {3, 0, 1, 4}}) {
    const int k = static_cast<int>(qs.size());
    const DenseOperator u = random_unitary(k, 100 + static_cast<std::uint64_t>(qs.front()) + static_cast<std::uint64_t>(k));
    const Eigen::VectorXcd v = random_state(n, 7);
    StateVector s = from_vector(n, v);
    s.apply_matrix(qs, u);
    const Eigen::VectorXcd ref = testing::embed(n, qs, u) * v;
    CHECK((testing::as_vector(s) - ref).norm() < 1e-12);
  }
}

TEST_CASE("paulis and hadamards") {
  const int n = 3;
  const Eigen::VectorXcd v = random_state(n, 3);
  for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
    StateVector s = from_vector(n, v);
    s.apply_pauli(1, p);
    CHECK((testing::as_vector(s) - pauli_string(n, {{1, p}}) * v).norm() < 1e-12);
  }
  StateVector s = from_vector(n, v);
  s.apply_hadamard_all();
  CHECK((testing::as_vector(s) - hadamard_all(n) * v).norm() < 1e-12);
  CHECK(s.norm_squared() == doctest::Approx(1.0));
}

TEST_CASE("initial state and measurement") {
  const StateVector s = initial_state(3);
  CHECK(std::abs(s.amplitude(7) - Complex(1.0, 0.0)) < 1e-15);
  const std::uint64_t all[] = {0, 1};
  const std::uint64_t zero[] = {0};
  const StateVector one = initial_state(1);
  CHECK(success_probability(one, zero) == doctest::Approx(0.5));
  CHECK(success_probability(one, all) == doctest::Approx(1.0));
  CHECK_THROWS_AS(StateVector(kMaxSimulationQubits + 1), CapabilityError);
}

TEST_CASE("final state equals the dense circuit unitary on the initial state") {
  const auto p = testing::random_problem(4, 11);
  const Circuit c = synthesize(p, Schedule(1.0, 2), 3);
  const Eigen::VectorXcd ref = testing::circuit_unitary(c).col(15);
  CHECK((testing::as_vector(final_state(c)) - ref).norm() < 1e-10);
}

TEST_CASE("analog perturbation") {
  const DenseOperator u = gms_unitary(4, 0.3, 0.2);
  CHECK((perturb_analog_block(u, 0.0, 1) - u).norm() < 1e-12);
  const DenseOperator v = perturb_analog_block(u, 0.1, 5);
  CHECK(unitarity_defect(v) < 1e-12);
  CHECK((perturb_analog_block(u, 0.1, 5) - v).norm() == 0.0);
  double f_small = 0.0, f_large = 0.0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    f_small += gate_fidelity(u, perturb_analog_block(u, 0.05, seed)) / 40.0;
    f_large += gate_fidelity(u, perturb_analog_block(u, 0.2, seed)) / 40.0;
  }
  CHECK(f_small < 1.0);
  CHECK(f_large < f_small);
  CHECK(gate_fidelity(u, u) == doctest::Approx(1.0));
}

TEST_CASE("noiseless run uses one trajectory") {
  const auto p = IsingProblem::homogeneous(4, 1.0, 0.5);
  const Circuit c = synthesize(p, Schedule(1.0, 4), 4);
  const GroundTruth gt = brute_force_ground_state(p);
  const RunResult r = run(c, gt.indices, NoiseModel{});
  CHECK(r.trajectories == 1);
  CHECK(r.success_probability == doctest::Approx(success_probability(final_state(c), gt.indices)).epsilon(1e-12));
  CHECK(r.gms_fidelity == 1.0);
}

TEST_CASE("noisy runs are deterministic and independent of thread count") {
  const auto p = IsingProblem::homogeneous(4, 1.0, 0.5);
  const Circuit c = synthesize(p, Schedule(1.0, 2), 4);
  const GroundTruth gt = brute_force_ground_state(p);
  NoiseModel nm;
  nm.analog_noise_amplitude = 0.1;
  nm.depolarizing_rate = 0.01;
  nm.entangling_error_rate = 0.01;
  nm.seed = 77;
  RunOptions o;
  o.trajectories = 37;
  o.shots = 200;
  o.threads = 1;
  const RunResult a = run(c, gt.indices, nm, o);
  o.threads = 3;
  const RunResult b = run(c, gt.indices, nm, o);
  CHECK(a.success_probability == b.success_probability);
  CHECK(a.standard_error == b.standard_error);
  CHECK(a.gms_fidelity == b.gms_fidelity);
  CHECK(a.shots == b.shots);
  int total = 0;
  for (const auto& [idx, count] : a.shots) total += count;
  CHECK(total == 200);
  CHECK(a.gms_fidelity < 1.0);
  nm.seed = 78;
  CHECK(run(c, gt.indices, nm, o).success_probability != a.success_probability);
}

TEST_CASE("noise model validation") {
  NoiseModel nm;
  nm.depolarizing_rate = -0.1;
  CHECK_THROWS_AS(nm.validate(), ArgumentError);
  nm.depolarizing_rate = 1.5;
  CHECK_THROWS_AS(nm.validate(), ArgumentError);
  nm = NoiseModel{};
  nm.analog_noise_amplitude = -1.0;
  CHECK_THROWS_AS(nm.validate(), ArgumentError);
}

TEST_CASE("fidelity sweep is sorted and starts noiseless") {
  const auto p = IsingProblem::homogeneous(4, 1.0, 0.5);
  NoiseModel nm;
  nm.seed = 3;
  RunOptions o;
  o.trajectories = 16;
  const auto pts = success_vs_fidelity_sweep(p, Schedule(1.0, 2), 4, {0.2, 0.0, 0.1}, nm, o);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].fidelity <= pts[1].fidelity);
  CHECK(pts[1].fidelity <= pts[2].fidelity);
  CHECK(pts[2].noise_amplitude == 0.0);
  CHECK(pts[2].fidelity == 1.0);
}

TEST_CASE("polar factor matches the SVD construction") {
  Rng rng(4);
  for (int d : {2, 4, 16}) {
    DenseOperator m(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
    }
    Eigen::JacobiSVD<DenseOperator> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const DenseOperator ref = svd.matrixU() * svd.matrixV().adjoint();
    CHECK((polar_unitary(m) - ref).norm() < 1e-10);
  }
}
