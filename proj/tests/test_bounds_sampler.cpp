#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ectopsis/bounds_sampler.hpp"
#include "ectopsis/weighting.hpp"
#include "fixtures.hpp"

namespace ectopsis {
namespace {

using testing::social_media_matrix;

NamedWeightSet custom(std::vector<double> w, std::size_t k = 0) {
  return NamedWeightSet{WeightSource::custom, k, std::move(w)};
}

std::vector<NamedWeightSet> social_media_sets() {
  const auto matrix = social_media_matrix();
  return {entropy_weights(matrix).weights, critic_weights(matrix).weights,
          normalize_custom_set(std::vector<double>(12, 0.05), 12)};
}

TEST(ComputeBounds, ThreeSetExample) {
  const std::vector<NamedWeightSet> sets{custom({0.34, 0.45, 0.21}), custom({0.23, 0.40, 0.37}, 1),
                                         custom({0.41, 0.37, 0.22}, 2)};
  const auto b = compute_bounds(sets);
  EXPECT_EQ(b.lower, (std::vector<double>{0.23, 0.37, 0.21}));
  EXPECT_EQ(b.upper, (std::vector<double>{0.41, 0.45, 0.37}));
}

TEST(ComputeBounds, SocialMediaBounds) {
  const auto b = compute_bounds(social_media_sets());
  for (std::size_t j = 0; j < 12; ++j) {
    EXPECT_NEAR(b.lower[j], testing::kTableLower[j], 1e-3) << "C" << j + 1;
    EXPECT_NEAR(b.upper[j], testing::kTableUpper[j], 1e-3) << "C" << j + 1;
  }
}

TEST(ComputeBounds, SingleSetGivesZeroWidth) {
  const std::vector<NamedWeightSet> sets{custom({0.2, 0.8})};
  const auto b = compute_bounds(sets);
  EXPECT_EQ(b.lower, b.upper);
}

TEST(ComputeBounds, Errors) {
  EXPECT_THROW(compute_bounds({}), InputError);
  const std::vector<NamedWeightSet> ragged{custom({0.5, 0.5}), custom({1.0})};
  EXPECT_THROW(compute_bounds(ragged), InputError);
}

TEST(SampleWeightMatrix, ZeroWidthBoundsReturnTheCommonValue) {
  const WeightBounds b{{0.25, 0.5}, {0.25, 0.5}};
  const auto rwm = sample_weight_matrix(b, 50, 9);
  for (std::size_t i = 0; i < 50; ++i) {
    EXPECT_EQ(rwm.rows(i, 0), 0.25);
    EXPECT_EQ(rwm.rows(i, 1), 0.5);
  }
}

TEST(SampleWeightMatrix, DrawsStayWithinBounds) {
  const auto b = compute_bounds(social_media_sets());
  const auto rwm = sample_weight_matrix(b, 20'000, kDefaultSeed);
  ASSERT_EQ(rwm.rows.rows(), 20'000u);
  ASSERT_EQ(rwm.rows.cols(), 12u);
  EXPECT_EQ(rwm.seed, kDefaultSeed);
  EXPECT_EQ(rwm.bounds, b);
  for (std::size_t i = 0; i < rwm.rows.rows(); ++i) {
    for (std::size_t j = 0; j < 12; ++j) {
      EXPECT_GE(rwm.rows(i, j), b.lower[j]);
      EXPECT_LE(rwm.rows(i, j), b.upper[j]);
    }
  }
}

TEST(SampleWeightMatrix, CellsArePureFunctionsOfTheirCoordinates) {
  const auto b = compute_bounds(social_media_sets());
  const auto rwm = sample_weight_matrix(b, 300, 1234);
  for (std::size_t i = 300; i-- > 0;) {
    for (std::size_t j = 12; j-- > 0;) EXPECT_EQ(sample_weight(b, 1234, i, j), rwm.rows(i, j));
  }
  // A longer run shares its prefix with a shorter one.
  const auto longer = sample_weight_matrix(b, 600, 1234);
  for (std::size_t i = 0; i < 300; ++i) {
    for (std::size_t j = 0; j < 12; ++j) EXPECT_EQ(longer.rows(i, j), rwm.rows(i, j));
  }
}

TEST(SampleWeightMatrix, ThreadCountDoesNotChangeOutput) {
  const auto b = compute_bounds(social_media_sets());
  const auto one = sample_weight_matrix(b, 5'000, 77, 1);
  EXPECT_EQ(one, sample_weight_matrix(b, 5'000, 77, 4));
  EXPECT_EQ(one, sample_weight_matrix(b, 5'000, 77, 7));
  EXPECT_EQ(one, sample_weight_matrix(b, 5'000, 77, 0));
}

TEST(SampleWeightMatrix, SeedsProduceDifferentStreams) {
  const auto b = compute_bounds(social_media_sets());
  EXPECT_FALSE(sample_weight_matrix(b, 10, 1) == sample_weight_matrix(b, 10, 2));
}

TEST(SampleWeightMatrix, ColumnMeansApproachMidpoints) {
  const auto b = compute_bounds(social_media_sets());
  const std::size_t t = 100'000;
  const auto rwm = sample_weight_matrix(b, t, kDefaultSeed);
  for (std::size_t j = 0; j < 12; ++j) {
    double total = 0.0;
    for (std::size_t i = 0; i < t; ++i) total += rwm.rows(i, j);
    const double mean = total / static_cast<double>(t);
    const double mid = 0.5 * (b.lower[j] + b.upper[j]);
    EXPECT_LE(std::abs(mean - mid), 0.01 * (b.upper[j] - b.lower[j])) << "C" << j + 1;
  }
}

TEST(SampleWeightMatrix, ReferenceRowsFitTheSameBounds) {
  // The published sampled rows must lie inside the published limits, up to
  // the 3-decimal rounding.
  for (const auto& row : testing::kPublishedWeightRows) {
    for (std::size_t j = 0; j < 12; ++j) {
      EXPECT_GE(row[j], testing::kTableLower[j] - 5e-4);
      EXPECT_LE(row[j], testing::kTableUpper[j] + 5e-4);
    }
  }
}

TEST(SampleWeightMatrix, Errors) {
  const WeightBounds b{{0.1}, {0.2}};
  EXPECT_THROW(sample_weight_matrix(b, 0, 1), InputError);
  EXPECT_THROW(sample_weight_matrix(WeightBounds{{0.3}, {0.2}}, 5, 1), InputError);
  EXPECT_THROW(sample_weight_matrix(WeightBounds{{0.1, 0.2}, {0.2}}, 5, 1), InputError);
}

}  // namespace
}  // namespace ectopsis
