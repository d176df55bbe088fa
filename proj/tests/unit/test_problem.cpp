#include <algorithm>
#include <set>

#include "dense_oracles.hpp"
#include "doctest.h"
#include "dacqo/counterdiabatic.hpp"
#include "dacqo/error.hpp"
#include "dacqo/problem.hpp"

using namespace dacqo;

TEST_CASE("classical energy of small configurations") {
  IsingProblem pair(2, {{0, 1, 1.0}}, {0.0, 0.0});
  CHECK(classical_energy(pair, {1, 1}) == doctest::Approx(1.0));

  IsingProblem single(1, {}, {-2.0});
  CHECK(classical_energy(single, {1}) == doctest::Approx(-2.0));

  IsingProblem tri(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}, {1.0, 1.0, 1.0});
  CHECK(classical_energy(tri, {-1, -1, 1}) == doctest::Approx(-2.0));

  CHECK_THROWS_AS(classical_energy(tri, {1, 1}), ArgumentError);
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(IsingProblem(2, {{0, 0, 1.0}}, {0.0, 0.0}), ArgumentError);
  CHECK_THROWS_AS(IsingProblem(2, {{0, 2, 1.0}}, {0.0, 0.0}), ArgumentError);
  CHECK_THROWS_AS(IsingProblem(2, {{0, 1, 1.0}, {1, 0, 2.0}}, {0.0, 0.0}), ArgumentError);
  CHECK_THROWS_AS(IsingProblem(2, {}, {0.0}), ArgumentError);
  IsingProblem swapped(3, {{2, 0, 0.5}}, {0, 0, 0});
  CHECK(swapped.couplings()[0].i == 0);
  CHECK(swapped.coupling(2, 0) == 0.5);
  CHECK(IsingProblem::homogeneous(4, -1.0, 0.5).is_homogeneous());
  CHECK_FALSE(IsingProblem(2, {{0, 1, 1.0}}, {0.0, 1.0}).is_homogeneous());
}

TEST_CASE("brute force ground states") {
  SUBCASE("antiferromagnetic pair") {
    auto gt = brute_force_ground_state(IsingProblem(2, {{0, 1, 1.0}}, {0.0, 0.0}));
    CHECK(gt.energy == doctest::Approx(-1.0));
    REQUIRE(gt.bitstrings.size() == 2);
    std::set<std::vector<int>> got(gt.bitstrings.begin(), gt.bitstrings.end());
    CHECK(got == std::set<std::vector<int>>{{1, -1}, {-1, 1}});
  }
  SUBCASE("single field") {
    auto gt = brute_force_ground_state(IsingProblem(1, {}, {-2.0}));
    CHECK(gt.energy == doctest::Approx(-2.0));
    CHECK(gt.bitstrings == std::vector<std::vector<int>>{{1}});
  }
  SUBCASE("matches dense diagonalization") {
    for (int n = 1; n <= 8; ++n) {
      auto p = random_spin_glass(n, 100 + static_cast<std::uint64_t>(n), InstanceMode::fully_nonuniform);
      const auto gt = brute_force_ground_state(p);
      Eigen::SelfAdjointEigenSolver<DenseOperator> es(problem_hamiltonian(p));
      CHECK(std::abs(gt.energy - es.eigenvalues()(0)) < 1e-10);
    }
  }
  SUBCASE("exhaustive check of listed optima") {
    auto p = testing::random_problem(10, 7);
    const auto gt = brute_force_ground_state(p);
    const auto e = all_basis_energies(p);
    for (std::uint64_t b = 0; b < e.size(); ++b) CHECK(e[b] >= gt.energy - 1e-12);
    for (auto idx : gt.indices) CHECK(std::abs(e[idx] - gt.energy) < 1e-12);
  }
  CHECK_THROWS_AS(brute_force_ground_state(IsingProblem(25, {}, std::vector<double>(25, 1.0))), CapabilityError);
}

TEST_CASE("classical energy agrees with the dense diagonal") {
  for (int n = 1; n <= 6; ++n) {
    auto p = testing::random_problem(n, 40 + static_cast<std::uint64_t>(n), 0.7);
    const DenseOperator h = problem_hamiltonian(p);
    for (std::uint64_t b = 0; b < dimension_of(n); ++b) {
      CHECK(std::abs(classical_energy(p, spins_from_index(b, n)) - h(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)).real()) < 1e-12);
    }
  }
}

namespace {

double best_independent_weight(const Graph& g) {
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n_nodes); ++mask) {
    const auto nodes = mis_selection(mask, g.n_nodes);
    if (g.is_independent(nodes)) best = std::max(best, selection_weight(g, nodes));
  }
  return best;
}

}  // namespace

TEST_CASE("MIS encoding") {
  SUBCASE("single edge picks one node") {
    Graph g(2, {{0, 1}}, {1.0, 1.0});
    const auto gt = brute_force_ground_state(mis_to_ising(g, 2.0));
    REQUIRE(gt.indices.size() == 2);
    for (auto idx : gt.indices) CHECK(mis_selection(idx, 2).size() == 1);
  }
  SUBCASE("edgeless graph selects all") {
    Graph g(3, {}, {1.0, 1.0, 1.0});
    const auto gt = brute_force_ground_state(mis_to_ising(g));
    REQUIRE(gt.indices.size() == 1);
    CHECK(mis_selection(gt.indices[0], 3).size() == 3);
  }
  SUBCASE("triangle has three optima of size one") {
    Graph g(3, {{0, 1}, {1, 2}, {0, 2}}, {1.0, 1.0, 1.0});
    const auto p = mis_to_ising(g, 2.0);
    const auto gt = brute_force_ground_state(p);
    CHECK(gt.indices.size() == 3);
    for (auto idx : gt.indices) CHECK(mis_selection(idx, 3).size() == 1);
    CHECK(gt.energy + p.offset() == doctest::Approx(-1.0));
  }
  SUBCASE("offset restores the graph objective on random graphs") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const int n = 4 + static_cast<int>(seed % 9);
      const auto mode = static_cast<InstanceMode>(seed % 3);
      Graph g = random_graph(n, 0.35, seed, mode);
      const auto p = mis_to_ising(g);
      const auto gt = brute_force_ground_state(p);
      CHECK(-(gt.energy + p.offset()) == doctest::Approx(best_independent_weight(g)).epsilon(1e-12));
      for (auto idx : gt.indices) CHECK(g.is_independent(mis_selection(idx, n)));
    }
  }
  CHECK_THROWS_AS(mis_to_ising(Graph(2, {{0, 1}}, {1.0, 1.0}), 1.0), ArgumentError);
  CHECK_THROWS_AS(Graph(2, {{1, 1}}, {1.0, 1.0}), ArgumentError);
  CHECK_THROWS_AS(Graph(2, {}, {1.0}), ArgumentError);
}

TEST_CASE("random instances") {
  CHECK(random_spin_glass(4, 3, InstanceMode::homogeneous).is_homogeneous());
  const auto a = random_spin_glass(4, 11, InstanceMode::fully_nonuniform);
  const auto b = random_spin_glass(4, 11, InstanceMode::fully_nonuniform);
  for (std::size_t i = 0; i < a.couplings().size(); ++i) CHECK(a.couplings()[i].value == b.couplings()[i].value);
  CHECK(a.fields() == b.fields());
  const auto m = random_spin_glass(3, 5, InstanceMode::mixed);
  CHECK(m.couplings().size() == 3);
  for (const auto& c : m.couplings()) CHECK((std::abs(c.value) == 0.5 || std::abs(c.value) == 1.0));
  for (const auto& c : a.couplings()) CHECK((std::abs(c.value) >= 0.1 && std::abs(c.value) <= 1.0));
}
