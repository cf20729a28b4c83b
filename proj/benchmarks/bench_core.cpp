#include <benchmark/benchmark.h>

#include <vector>

#include "banzhaf/gf.hpp"
#include "banzhaf/interval_sum.hpp"
#include "banzhaf/rng.hpp"
#include "banzhaf/solvers.hpp"

using namespace banzhaf;

namespace {

WeightedVotingGame wide_game(std::size_t n) {
  Rng rng(1234);
  std::vector<Weight> weights(n);
  Weight total = 0;
  for (Weight& w : weights) {
    w = rng.uniform(1, (Weight(1) << 40) - 1);
    total += w;
  }
  return WeightedVotingGame(total / 2 + 1, std::move(weights));
}

WeightedVotingGame dense_game(std::size_t n, Weight max_weight) {
  Rng rng(1234);
  return random_majority_game(rng, n, 1, max_weight);
}

void BM_BuildGF(benchmark::State& state) {
  const WeightedVotingGame game = wide_game(state.range(0));
  const TruncationPolicy policy = TruncationPolicy::at(game.quota());
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_gf(game.weights(), policy));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildGF)->DenseRange(16, 28, 4)->Complexity();

void BM_DivideGF(benchmark::State& state) {
  const WeightedVotingGame game = wide_game(state.range(0));
  const TruncationPolicy policy = TruncationPolicy::at(game.quota());
  const SparseGF gf = build_gf(game.weights(), policy);
  for (auto _ : state) {
    benchmark::DoNotOptimize(divide_gf(gf, game.weight(0), policy));
  }
  state.SetComplexityN(static_cast<std::int64_t>(gf.terms.size()));
}
BENCHMARK(BM_DivideGF)->DenseRange(16, 28, 4)->Complexity();

void BM_IntervalSum(benchmark::State& state) {
  Rng rng(99);
  IntervalSumInstance inst;
  const std::size_t len = state.range(0);
  for (std::size_t i = 0; i < len; ++i) {
    inst.xs.push_back(2 * i);
    inst.ys.push_back(2 * i + 1);
    inst.as.push_back(Count(rng.uniform(1, 100)));
    inst.bs.push_back(Count(rng.uniform(1, 100)));
  }
  inst.low = len / 2;
  inst.high = 3 * len;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_interval_sum(inst));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IntervalSum)->Range(1 << 10, 1 << 18)->Complexity();

void BM_PartitionSolver(benchmark::State& state) {
  const WeightedVotingGame game = wide_game(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eta_all_partitioned(game));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PartitionSolver)->DenseRange(16, 28, 4)->Complexity();

void BM_DenseTableSolver(benchmark::State& state) {
  const WeightedVotingGame game = dense_game(state.range(0), 500);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eta_all_gf_table(game));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DenseTableSolver)->DenseRange(50, 200, 50)->Complexity();

}  // namespace

BENCHMARK_MAIN();
