#include <gtest/gtest.h>

#include <string>

#include "ectopsis/pipeline.hpp"
#include "ectopsis/topsis.hpp"
#include "fixtures.hpp"

namespace ectopsis {
namespace {

using testing::make_matrix;
using testing::social_media_problem;

constexpr Direction B = Direction::benefit;
constexpr Direction C = Direction::cost;

TEST(Pipeline, CaseStudyConfiguration) {
  const auto report = run_pipeline(social_media_problem());
  ASSERT_EQ(report.weight_sets.size(), 3u);
  EXPECT_EQ(report.weight_sets[0].name(), "Entropy");
  EXPECT_EQ(report.weight_sets[1].name(), "Critic");
  EXPECT_EQ(report.weight_sets[2].name(), "Custom Weights 1");
  ASSERT_TRUE(report.entropy.has_value());
  ASSERT_TRUE(report.critic.has_value());
  for (std::size_t j = 0; j < 12; ++j) {
    EXPECT_NEAR(report.bounds.lower[j], testing::kTableLower[j], 1e-3);
    EXPECT_NEAR(report.bounds.upper[j], testing::kTableUpper[j], 1e-3);
  }
  EXPECT_EQ(report.samples.rows.rows(), 10'000u);
  EXPECT_EQ(report.closeness_log.rows(), 10'000u);
  EXPECT_EQ(report.closeness_log.cols(), 6u);
  EXPECT_EQ(report.rank_matrix.iterations(), 10'000u);
  EXPECT_EQ(report.final.positions(), testing::kPublishedPositions);
  EXPECT_EQ(report.final.outcomes[2].modal_score, 1);
}

TEST(Pipeline, ZeroWidthSingleIterationEqualsPlainTopsis) {
  auto problem = social_media_problem(1);
  problem.config.use_entropy = false;
  problem.config.use_critic = false;
  const auto report = run_pipeline(problem);
  EXPECT_EQ(report.bounds.lower, report.bounds.upper);
  const auto direct = topsis_run(problem.matrix, report.bounds.lower);
  const auto row = report.closeness_log.row(0);
  EXPECT_EQ(std::vector<double>(row.begin(), row.end()), direct.closeness);
  EXPECT_EQ(report.final.positions(), direct.ranks);
}

TEST(Pipeline, RepeatRunsAreIdentical) {
  const auto a = run_pipeline(social_media_problem(2'000, 7));
  const auto b = run_pipeline(social_media_problem(2'000, 7));
  EXPECT_EQ(a.samples, b.samples);
  EXPECT_EQ(a.closeness_log, b.closeness_log);
  EXPECT_EQ(a.rank_matrix, b.rank_matrix);
  EXPECT_EQ(a.final, b.final);
}

TEST(Pipeline, ThreadCountDoesNotChangeResults) {
  PipelineOptions one;
  one.threads = 1;
  PipelineOptions many;
  many.threads = 5;
  const auto a = run_pipeline(social_media_problem(3'001, 3), one);
  const auto b = run_pipeline(social_media_problem(3'001, 3), many);
  EXPECT_EQ(a.closeness_log, b.closeness_log);
  EXPECT_EQ(a.final, b.final);
}

TEST(Pipeline, OtherSeedsKeepTheCaseStudyOrder) {
  for (std::uint64_t seed : {1u, 2u, 3u, 1000u}) {
    EXPECT_EQ(run_pipeline(social_media_problem(10'000, seed)).final.positions(), testing::kPublishedPositions)
        << "seed " << seed;
  }
}

TEST(Pipeline, WeightStageOnly) {
  const auto stage = compute_weight_stage(social_media_problem());
  EXPECT_EQ(stage.weight_sets.size(), 3u);
  auto problem = social_media_problem();
  problem.config.custom_sets.clear();
  problem.config.use_critic = false;
  const auto entropy_only = compute_weight_stage(problem);
  ASSERT_EQ(entropy_only.weight_sets.size(), 1u);
  EXPECT_FALSE(entropy_only.critic.has_value());
  EXPECT_EQ(entropy_only.bounds.lower, entropy_only.bounds.upper);
}

TEST(Pipeline, ErrorsNameTheFailingStage) {
  Problem constant;
  constant.matrix = make_matrix({{1, 5}, {2, 5}, {3, 5}}, {B, C});
  try {
    run_pipeline(constant);
    FAIL();
  } catch (const ComputationError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("critic weights: ", 0), 0u) << e.what();
  }

  Problem degenerate;
  degenerate.matrix = make_matrix({{1, 5}, {1, 5}}, {B, C});
  degenerate.config.use_entropy = false;
  degenerate.config.use_critic = false;
  degenerate.config.custom_sets = {{1, 1}};
  try {
    run_pipeline(degenerate);
    FAIL();
  } catch (const ComputationError& e) {
    EXPECT_EQ(std::string(e.what()), "topsis: degenerate problem: ideal equals anti-ideal (alternative 1)");
  }

  Problem bad_custom;
  bad_custom.matrix = make_matrix({{1, 5}, {2, 4}}, {B, C});
  bad_custom.config.custom_sets = {{0, 0}};
  EXPECT_THROW(run_pipeline(bad_custom), InputError);

  Problem lonely;
  lonely.matrix = make_matrix({{1, 5}}, {B, C});
  EXPECT_THROW(run_pipeline(lonely), ValidationError);
}

}  // namespace
}  // namespace ectopsis
