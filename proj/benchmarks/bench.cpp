#include <benchmark/benchmark.h>

#include <random>

#include "elfarol/analytic.hpp"
#include "elfarol/ce_check.hpp"
#include "elfarol/ce_oracle.hpp"
#include "elfarol/simulate.hpp"

namespace {

const elfarol::GameParams kParams{2.0, 4.0, 10.0};

void BM_Analyze(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(elfarol::analyze(kParams));
  }
}
BENCHMARK(BM_Analyze);

void BM_SolveGrid(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(elfarol::solve_grid(kParams, m));
  }
  state.SetComplexityN(m);
}
BENCHMARK(BM_SolveGrid)->Arg(51)->Arg(101)->Arg(201)->Arg(401)->Complexity();

void BM_VerifyCe(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  elfarol::ConfigDistribution dist;
  std::mt19937_64 rng(1);
  for (int i = 0; i < k; ++i) {
    dist.entries.push_back({static_cast<double>(i) / k, 1.0 / k});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(elfarol::verify_ce(kParams, dist, 1e-9));
  }
}
BENCHMARK(BM_VerifyCe)->Arg(8)->Arg(64)->Arg(512);

void BM_Simulation(benchmark::State& state) {
  const elfarol::ConfigDistribution dist =
      *elfarol::best_mediator(kParams).dist;
  const elfarol::SimConfig cfg{100000, static_cast<long long>(state.range(0)), 7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(elfarol::run_simulation(kParams, dist, cfg));
  }
}
BENCHMARK(BM_Simulation)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
