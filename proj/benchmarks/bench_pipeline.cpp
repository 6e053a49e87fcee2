#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "ectopsis/bounds_sampler.hpp"
#include "ectopsis/pipeline.hpp"
#include "ectopsis/rank_aggregator.hpp"
#include "ectopsis/topsis.hpp"
#include "ectopsis/weighting.hpp"

namespace {

using namespace ectopsis;

Problem case_study(std::size_t iterations) {
  const std::vector<std::vector<double>> rows = {
      {0.315, 0.141, 0.544, 0.323, 0.047, 0.630, 0.219, 0.060, 0.722, 0.198, 0.063, 0.739},
      {0.299, 0.132, 0.569, 0.270, 0.132, 0.598, 0.061, 0.040, 0.899, 0.154, 0.067, 0.779},
      {0.044, 0.323, 0.633, 0.006, 0.206, 0.788, 0.037, 0.058, 0.906, 0.004, 0.022, 0.974},
      {0.056, 0.069, 0.875, 0.000, 0.009, 0.991, 0.003, 0.005, 0.992, 0.009, 0.005, 0.986},
      {0.013, 0.086, 0.901, 0.001, 0.019, 0.979, 0.013, 0.021, 0.966, 0.001, 0.001, 0.998},
      {0.039, 0.346, 0.615, 0.056, 0.268, 0.677, 0.001, 0.004, 0.995, 0.002, 0.026, 0.972},
  };
  const char* dirs = "+-++-++-++-+";
  Problem p;
  for (int i = 1; i <= 6; ++i) p.matrix.alternatives.push_back("a" + std::to_string(i));
  for (int j = 0; j < 12; ++j) {
    const std::string id = "C" + std::to_string(j + 1);
    p.matrix.criteria.push_back({id, id, dirs[j] == '+' ? Direction::benefit : Direction::cost});
  }
  p.matrix.values = Grid<double>::from_rows(rows);
  p.config.iterations = iterations;
  p.config.custom_sets = {std::vector<double>(12, 0.05)};
  return p;
}

void BM_Pipeline(benchmark::State& state) {
  const Problem p = case_study(static_cast<std::size_t>(state.range(0)));
  PipelineOptions options;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(p, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Pipeline)->Arg(1'000)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_WeightStage(benchmark::State& state) {
  const Problem p = case_study(1);
  for (auto _ : state) benchmark::DoNotOptimize(compute_weight_stage(p));
}
BENCHMARK(BM_WeightStage);

void BM_TopsisEvaluate(benchmark::State& state) {
  const Problem p = case_study(1);
  const TopsisEvaluator evaluator(p.matrix);
  const std::vector<double> w(12, 1.0 / 12.0);
  for (auto _ : state) benchmark::DoNotOptimize(evaluator.evaluate(w));
}
BENCHMARK(BM_TopsisEvaluate);

void BM_Sampling(benchmark::State& state) {
  const auto bounds = compute_weight_stage(case_study(1)).bounds;
  const auto t = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_weight_matrix(bounds, t, 42, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 12);
}
BENCHMARK(BM_Sampling)->Arg(10'000)->Arg(100'000);

void BM_FinalRanking(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  Grid<int> ranks(t, 6);
  std::vector<int> perm{1, 2, 3, 4, 5, 6};
  for (std::size_t i = 0; i < t; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::copy(perm.begin(), perm.end(), ranks.row(i).begin());
  }
  const auto rm = rank_matrix_from_ranks(ranks);
  for (auto _ : state) benchmark::DoNotOptimize(final_ranking(rm, Grid<double>()));
}
BENCHMARK(BM_FinalRanking)->Arg(10'000);

}  // namespace

BENCHMARK_MAIN();
