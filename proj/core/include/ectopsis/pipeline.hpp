#pragma once

#include <optional>
#include <vector>

#include "ectopsis/model.hpp"
#include "ectopsis/weighting.hpp"

namespace ectopsis {

/// Every intermediate of one randomized-weight TOPSIS run.
struct RunReport {
  DecisionMatrix matrix;
  RunConfig config;
  EntropyOptions entropy_options;
  CriticOptions critic_options;
  std::optional<EntropyReport> entropy;
  std::optional<CriticReport> critic;
  /// Contributing sets in table order: Entropy, Critic, Custom 1..k.
  std::vector<NamedWeightSet> weight_sets;
  WeightBounds bounds;
  RandomWeightMatrix samples;
  /// t x m closeness values, one row per iteration.
  Grid<double> closeness_log;
  RankMatrix rank_matrix;
  FinalRanking final;
};

struct PipelineOptions {
  EntropyOptions entropy;
  CriticOptions critic;
  /// 0 = hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
};

/// Weights and bounds only (no sampling); used by the `weights` command.
struct WeightStage {
  std::optional<EntropyReport> entropy;
  std::optional<CriticReport> critic;
  std::vector<NamedWeightSet> weight_sets;
  WeightBounds bounds;
};

WeightStage compute_weight_stage(const Problem& problem, const PipelineOptions& options = {});

/// Validates, then runs weights -> bounds -> sampling -> t TOPSIS runs ->
/// aggregation. Errors are rethrown with the failing stage prefixed and their
/// category (InputError / ComputationError) preserved.
RunReport run_pipeline(const Problem& problem, const PipelineOptions& options = {});

}  // namespace ectopsis
