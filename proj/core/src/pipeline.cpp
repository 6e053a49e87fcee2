#include "ectopsis/pipeline.hpp"

#include <fmt/format.h>

#include "ectopsis/bounds_sampler.hpp"
#include "ectopsis/rank_aggregator.hpp"
#include "ectopsis/topsis.hpp"
#include "parallel.hpp"

namespace ectopsis {

namespace {

template <typename Fn>
auto in_stage(const char* stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ValidationError&) {
    throw;
  } catch (const ComputationError& e) {
    throw ComputationError(fmt::format("{}: {}", stage, e.what()));
  } catch (const InputError& e) {
    throw InputError(fmt::format("{}: {}", stage, e.what()));
  }
}

}  // namespace

WeightStage compute_weight_stage(const Problem& problem, const PipelineOptions& options) {
  const Problem valid = validate_problem(problem.matrix, problem.config);
  const DecisionMatrix& matrix = valid.matrix;
  const RunConfig& config = valid.config;

  WeightStage stage;
  if (config.use_entropy) {
    stage.entropy = in_stage("entropy weights", [&] { return entropy_weights(matrix, options.entropy); });
    stage.weight_sets.push_back(stage.entropy->weights);
  }
  if (config.use_critic) {
    stage.critic = in_stage("critic weights", [&] { return critic_weights(matrix, options.critic); });
    stage.weight_sets.push_back(stage.critic->weights);
  }
  for (std::size_t k = 0; k < config.custom_sets.size(); ++k) {
    stage.weight_sets.push_back(in_stage("custom weights", [&] {
      return normalize_custom_set(config.custom_sets[k], matrix.criterion_count(), k);
    }));
  }
  stage.bounds = in_stage("weight bounds", [&] { return compute_bounds(stage.weight_sets); });
  return stage;
}

RunReport run_pipeline(const Problem& problem, const PipelineOptions& options) {
  WeightStage weights = compute_weight_stage(problem, options);

  RunReport report;
  report.matrix = problem.matrix;
  report.config = problem.config;
  report.entropy_options = options.entropy;
  report.critic_options = options.critic;
  report.entropy = std::move(weights.entropy);
  report.critic = std::move(weights.critic);
  report.weight_sets = std::move(weights.weight_sets);
  report.bounds = std::move(weights.bounds);

  const std::size_t t = report.config.iterations;
  const std::size_t m = report.matrix.alternative_count();
  report.samples = in_stage("weight sampling", [&] {
    return sample_weight_matrix(report.bounds, t, report.config.seed, options.threads);
  });

  std::vector<TopsisResult> results(t);
  in_stage("topsis", [&] {
    const TopsisEvaluator evaluator(report.matrix);
    detail::parallel_for(t, options.threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) results[i] = evaluator.evaluate(report.samples.rows.row(i));
    });
  });

  report.closeness_log = Grid<double>(t, m);
  for (std::size_t i = 0; i < t; ++i) {
    std::copy(results[i].closeness.begin(), results[i].closeness.end(), report.closeness_log.row(i).begin());
  }
  report.rank_matrix = in_stage("rank matrix", [&] { return build_rank_matrix(results); });
  report.final = in_stage("final ranking", [&] { return final_ranking(report.rank_matrix, report.closeness_log); });
  return report;
}

}  // namespace ectopsis
