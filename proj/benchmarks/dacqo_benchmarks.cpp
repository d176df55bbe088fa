// Kernel timings: state-vector gate application, noisy block perturbation, synthesis,
// the closed-form gauge coefficient, brute-force ground states and noisy trajectories.

#include <benchmark/benchmark.h>

#include <vector>

#include "dacqo/counterdiabatic.hpp"
#include "dacqo/gates.hpp"
#include "dacqo/problem.hpp"
#include "dacqo/simulator.hpp"
#include "dacqo/synthesis.hpp"

namespace {

using namespace dacqo;

void BM_ApplyGms4(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector s = initial_state(n);
  const DenseOperator u = gms_unitary(4, 0.3, 0.4);
  const std::vector<int> qubits = {0, n / 3, n / 2, n - 1};
  for (auto _ : state) {
    s.apply_matrix(qubits, u);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_ApplyGms4)->DenseRange(8, 14, 2);

void BM_ApplySingle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector s = initial_state(n);
  const DenseOperator u = rotation_unitary(Axis::x, 0.2);
  const std::vector<int> qubit = {n / 2};
  for (auto _ : state) {
    s.apply_matrix(qubit, u);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_ApplySingle)->DenseRange(8, 14, 2);

void BM_PerturbBlock(benchmark::State& state) {
  const DenseOperator u = gms_unitary(static_cast<int>(state.range(0)), 0.3, 0.4);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(perturb_analog_block(u, 0.1, seed++));
}
BENCHMARK(BM_PerturbBlock)->DenseRange(2, 6, 2);

void BM_Alpha1(benchmark::State& state) {
  const auto p = random_spin_glass(static_cast<int>(state.range(0)), 7, InstanceMode::fully_nonuniform);
  double lambda = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(alpha1_analytic(p, lambda));
    lambda = lambda > 0.99 ? 0.0 : lambda + 0.01;
  }
}
BENCHMARK(BM_Alpha1)->RangeMultiplier(2)->Range(8, 128);

void BM_SynthesizeHomogeneous(benchmark::State& state) {
  const auto p = IsingProblem::homogeneous(static_cast<int>(state.range(0)), 1.0, 0.5);
  const Schedule s(5.0, 10);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(p, s, 4));
}
BENCHMARK(BM_SynthesizeHomogeneous)->RangeMultiplier(2)->Range(8, 64);

void BM_SynthesizeInhomogeneous(benchmark::State& state) {
  const auto p = random_spin_glass(static_cast<int>(state.range(0)), 3, InstanceMode::fully_nonuniform);
  const Schedule s(5.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(p, s, 4));
}
BENCHMARK(BM_SynthesizeInhomogeneous)->RangeMultiplier(2)->Range(8, 32);

void BM_BruteForce(benchmark::State& state) {
  const auto p = random_spin_glass(static_cast<int>(state.range(0)), 5, InstanceMode::fully_nonuniform);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_ground_state(p));
}
BENCHMARK(BM_BruteForce)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_NoisyRun(benchmark::State& state) {
  const auto p = IsingProblem::homogeneous(4, 1.0, 0.5);
  const Circuit c = synthesize(p, Schedule(5.0, 10), 4);
  const auto optimal = brute_force_ground_state(p).indices;
  NoiseModel nm;
  nm.analog_noise_amplitude = 0.1;
  nm.depolarizing_rate = 0.0002;
  RunOptions o;
  o.trajectories = static_cast<int>(state.range(0));
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run(c, optimal, nm, o));
}
BENCHMARK(BM_NoisyRun)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
