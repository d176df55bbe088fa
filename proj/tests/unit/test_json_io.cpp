#include <doctest.h>

#include <string>

#include "dacqo/error.hpp"
#include "dacqo/hardware.hpp"
#include "dacqo/json_io.hpp"
#include "dense_oracles.hpp"

using namespace dacqo;

TEST_CASE("problem round trip") {
  const auto p = testing::random_problem(5, 2, 0.7);
  const IsingProblem q = problem_from_json(problem_to_json(p));
  CHECK(q.n_qubits() == p.n_qubits());
  CHECK(q.fields() == p.fields());
  CHECK(q.offset() == p.offset());
  REQUIRE(q.couplings().size() == p.couplings().size());
  for (std::size_t i = 0; i < q.couplings().size(); ++i) {
    CHECK(q.couplings()[i].i == p.couplings()[i].i);
    CHECK(q.couplings()[i].j == p.couplings()[i].j);
    CHECK(q.couplings()[i].value == p.couplings()[i].value);
  }
}

TEST_CASE("circuit round trip") {
  const auto p = testing::random_problem(4, 5);
  const Circuit c = synthesize(p, Schedule(1.0, 2), 3);
  const std::string text = circuit_to_json(c);
  const Circuit d = circuit_from_json(text);
  CHECK(circuit_to_json(d) == text);
  CHECK(d.step_starts() == c.step_starts());
  CHECK(phase_invariant_distance(testing::circuit_unitary(c), testing::circuit_unitary(d)) < 1e-14);
}

TEST_CASE("graph, schedule and hardware round trip") {
  const Graph g(4, {{0, 1}, {2, 3}}, {1.0, 2.0, 3.0, 4.0});
  CHECK(graph_to_json(graph_from_json(graph_to_json(g))) == graph_to_json(g));
  const Schedule s(2.5, 7, ScheduleProfile::linear_smoothstep);
  const Schedule t = schedule_from_json(schedule_to_json(s));
  CHECK(t.total_time() == 2.5);
  CHECK(t.trotter_steps() == 7);
  CHECK(t.profile() == ScheduleProfile::linear_smoothstep);
  HardwareSpec h;
  h.max_block = 6;
  CHECK(hardware_from_json(hardware_to_json(h)).max_block == 6);
}

TEST_CASE("malformed documents raise config errors") {
  try {
    problem_from_json("{\n  \"n\": 2,\n  oops\n}");
    FAIL("expected an error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(problem_from_json("{\"couplings\": []}"), ConfigError);
  CHECK_THROWS_AS(gate_from_json("{\"kind\": \"gms\", \"qubits\": [0, 1], \"theta\": \"x\"}"), ConfigError);
  CHECK_THROWS_AS(gate_from_json("{\"kind\": \"bogus\", \"qubits\": [0], \"theta\": 1}"), Error);
}
