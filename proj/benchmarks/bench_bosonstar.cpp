#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include <bosonstar/bosonstar.hpp>

using namespace bosonstar;

namespace {

RadialField smooth_bump(const RadialGrid& g) {
  return RadialField::sample(g, [](double r) { return std::exp(-0.5 * r * r) / (1.0 + r * r); });
}

RadialField noise(const RadialGrid& g) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> d;
  std::vector<double> v(g.size());
  for (auto& x : v) x = d(rng);
  return RadialField(g, std::move(v));
}

// Grid radius scales with n so dr stays near 0.1.
RadialGrid grid_for(const benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  return RadialGrid(n, 0.1 * static_cast<double>(n + 1));
}

void BM_ForwardTransform(benchmark::State& state) {
  const auto u = noise(grid_for(state));
  for (auto _ : state) benchmark::DoNotOptimize(forward_transform(u));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ForwardTransform)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNLogN);

void BM_RoundTrip(benchmark::State& state) {
  const auto u = noise(grid_for(state));
  for (auto _ : state) benchmark::DoNotOptimize(inverse_transform(forward_transform(u)));
}
BENCHMARK(BM_RoundTrip)->RangeMultiplier(4)->Range(256, 16384);

void BM_NewtonPotential(benchmark::State& state) {
  const auto u = smooth_bump(grid_for(state));
  const auto rho = u * u;
  for (auto _ : state) benchmark::DoNotOptimize(newton_potential(rho));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NewtonPotential)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN);

void BM_NewtonPotentialSpectral(benchmark::State& state) {
  const auto u = smooth_bump(grid_for(state));
  const auto rho = u * u;
  for (auto _ : state) benchmark::DoNotOptimize(newton_potential_spectral(rho));
}
BENCHMARK(BM_NewtonPotentialSpectral)->RangeMultiplier(4)->Range(256, 16384);

void BM_SolveGroundState(benchmark::State& state) {
  SolverConfig cfg;
  cfg.grid = RadialGrid(static_cast<std::size_t>(state.range(0)), 200.0);
  int iterations = 0;
  for (auto _ : state) {
    const auto rep = solve_ground_state(cfg);
    iterations = rep.iterations;
    benchmark::DoNotOptimize(rep.N_star);
  }
  state.counters["solver_iterations"] = iterations;
}
BENCHMARK(BM_SolveGroundState)->Arg(1024)->Arg(2048)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_EvolveStep(benchmark::State& state) {
  const WaveField psi{complexify(0.8 * smooth_bump(grid_for(state))), 0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(evolve(psi, 0.005, 1).state.psi);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvolveStep)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNLogN);

void BM_KineticSectorMatrix(benchmark::State& state) {
  const RadialGrid g(static_cast<std::size_t>(state.range(0)), 0.1 * static_cast<double>(state.range(0) + 1));
  const int ell = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kinetic_sector_matrix(g, ell).data());
}
BENCHMARK(BM_KineticSectorMatrix)
    ->ArgsProduct({{128, 256, 512}, {0, 1, 2}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
