#include <doctest.h>

#include "dacqo/error.hpp"
#include "dacqo/hardware.hpp"
#include "dense_oracles.hpp"

using namespace dacqo;

TEST_CASE("runtime model") {
  const HardwareSpec spec;
  CHECK(runtime_seconds(3, 2, spec) == doctest::Approx(3 * 930e-6 + 2 * 130e-6));
  DepthReport r;
  r.multiqubit_layers = 2000;
  r.single_qubit_layers = 10;
  const RuntimeReport rr = circuit_runtime(r, spec);
  CHECK_FALSE(rr.within_coherence);
  r.multiqubit_layers = 10;
  CHECK(circuit_runtime(r, spec).within_coherence);
}

TEST_CASE("hardware validation") {
  HardwareSpec spec;
  spec.t_multi = -1.0;
  CHECK_THROWS_AS(spec.validate(), ArgumentError);
  spec = HardwareSpec{};
  spec.max_block = 1;
  CHECK_THROWS_AS(spec.validate(), ArgumentError);
}

TEST_CASE("circuit runtime counts layers") {
  const auto p = IsingProblem::homogeneous(6, 1.0, 0.5);
  const Schedule s(1.0, 2);
  const Circuit da = synthesize(p, s, 4);
  const Circuit dig = synthesize_digital_baseline(p, s);
  const HardwareSpec spec;
  const DepthReport r = depth_report(da);
  CHECK(circuit_runtime(da, spec).runtime_seconds == doctest::Approx(runtime_seconds(r.multiqubit_layers, r.single_qubit_layers, spec)));
  const RuntimeReport cmp = compare_runtime(da, dig, spec);
  CHECK(cmp.enhancement_factor > 1.0);
}

TEST_CASE("enhancement entries") {
  const auto p = IsingProblem::homogeneous(8, 1.0, 0.5);
  const auto e = enhancement_factor(p, Schedule(1.0, 1), HardwareSpec{}, {2, 4});
  REQUIRE(e.size() == 2);
  CHECK(e[0].block_size == 2);
  CHECK(e[1].ratio == doctest::Approx(e[1].runtime_digital / e[1].runtime_daqc));
  CHECK(e[1].ratio > 1.0);
}

TEST_CASE("analytic runtime grows with size") {
  const HardwareSpec spec;
  const AnalyticRuntime a = analytic_runtime(20, 4, 2, spec);
  const AnalyticRuntime b = analytic_runtime(40, 4, 2, spec);
  CHECK(b.digital > a.digital);
  CHECK(b.daqc_homogeneous > a.daqc_homogeneous);
  CHECK(b.digital > b.daqc_homogeneous);
  const LayerSplit d = analytic_digital_split(20);
  CHECK(a.digital == doctest::Approx(2 * runtime_seconds(d.multiqubit, d.single_qubit, spec)));
}
