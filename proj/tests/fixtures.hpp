#pragma once

// Case-study data: six retail companies scored on twelve Twitter UGC ratios,
// together with the published weight rows and external weight vectors.

#include <array>
#include <string>
#include <vector>

#include "ectopsis/model.hpp"

namespace ectopsis::testing {

inline const std::vector<std::vector<double>> kSocialMediaValues = {
    {0.315, 0.141, 0.544, 0.323, 0.047, 0.630, 0.219, 0.060, 0.722, 0.198, 0.063, 0.739},
    {0.299, 0.132, 0.569, 0.270, 0.132, 0.598, 0.061, 0.040, 0.899, 0.154, 0.067, 0.779},
    {0.044, 0.323, 0.633, 0.006, 0.206, 0.788, 0.037, 0.058, 0.906, 0.004, 0.022, 0.974},
    {0.056, 0.069, 0.875, 0.000, 0.009, 0.991, 0.003, 0.005, 0.992, 0.009, 0.005, 0.986},
    {0.013, 0.086, 0.901, 0.001, 0.019, 0.979, 0.013, 0.021, 0.966, 0.001, 0.001, 0.998},
    {0.039, 0.346, 0.615, 0.056, 0.268, 0.677, 0.001, 0.004, 0.995, 0.002, 0.026, 0.972},
};

inline const std::vector<Direction> kSocialMediaDirections = {
    Direction::benefit, Direction::cost, Direction::benefit, Direction::benefit, Direction::cost, Direction::benefit,
    Direction::benefit, Direction::cost, Direction::benefit, Direction::benefit, Direction::cost, Direction::benefit,
};

inline DecisionMatrix social_media_matrix() {
  DecisionMatrix m;
  for (int i = 1; i <= 6; ++i) m.alternatives.push_back("a" + std::to_string(i));
  for (std::size_t j = 0; j < kSocialMediaDirections.size(); ++j) {
    const std::string id = "C" + std::to_string(j + 1);
    m.criteria.push_back(CriterionSpec{id, id, kSocialMediaDirections[j]});
  }
  m.values = Grid<double>::from_rows(kSocialMediaValues);
  return m;
}

inline DecisionMatrix make_matrix(const std::vector<std::vector<double>>& rows, const std::vector<Direction>& dirs) {
  DecisionMatrix m;
  for (std::size_t i = 0; i < rows.size(); ++i) m.alternatives.push_back("a" + std::to_string(i + 1));
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    m.criteria.push_back(CriterionSpec{"c" + std::to_string(j + 1), "", dirs[j]});
  }
  m.values = Grid<double>::from_rows(rows);
  return m;
}

// Published weight table (3 decimals).
inline const std::vector<double> kTableEntropy = {0.092, 0.029, 0.004, 0.155, 0.112, 0.004,
                                                  0.148, 0.096, 0.001, 0.173, 0.185, 0.001};
inline const std::vector<double> kTableCritic = {0.101, 0.064, 0.067, 0.104, 0.061, 0.069,
                                                 0.097, 0.078, 0.085, 0.104, 0.076, 0.094};
inline const std::vector<double> kTableCustom = std::vector<double>(12, 0.083);
inline const std::vector<double> kTableLower = {0.083, 0.029, 0.004, 0.083, 0.061, 0.004,
                                                0.083, 0.078, 0.001, 0.083, 0.076, 0.001};
inline const std::vector<double> kTableUpper = {0.101, 0.083, 0.083, 0.155, 0.112, 0.083,
                                                0.148, 0.096, 0.085, 0.173, 0.185, 0.094};

// Externally derived weight vectors used for single-shot cross-checks.
inline const std::vector<double> kIdocriwWeights = {0.093, 0.069, 0.056, 0.119, 0.087, 0.056,
                                                    0.116, 0.079, 0.055, 0.127, 0.086, 0.055};
inline const std::vector<double> kMerecWeights = {0.053, 0.028, 0.008, 0.57,  0.053, 0.009,
                                                  0.088, 0.043, 0.008, 0.077, 0.056, 0.007};

// Published final positions for a1..a6.
inline const std::vector<int> kPublishedPositions = {1, 2, 6, 3, 4, 5};

// The published rank rows: iterations 1-15 and 9991-10000.
inline std::vector<std::vector<int>> published_rank_rows() {
  std::vector<std::vector<int>> rows(25, std::vector<int>{1, 2, 6, 3, 4, 5});
  rows[15 + 5] = {1, 4, 6, 2, 3, 5};  // iteration 9996
  rows[15 + 6] = {1, 3, 6, 2, 4, 5};  // iteration 9997
  return rows;
}

// Published sampled weight rows (3 decimals): iterations 1-15 and 9991-10000.
inline const std::vector<std::vector<double>> kPublishedWeightRows = {
    {0.097, 0.042, 0.061, 0.103, 0.076, 0.035, 0.138, 0.094, 0.037, 0.137, 0.095, 0.002},
    {0.091, 0.068, 0.067, 0.091, 0.08, 0.013, 0.144, 0.092, 0.03, 0.105, 0.124, 0.054},
    {0.084, 0.077, 0.02, 0.153, 0.067, 0.082, 0.13, 0.092, 0.047, 0.143, 0.125, 0.05},
    {0.087, 0.078, 0.076, 0.125, 0.092, 0.052, 0.087, 0.082, 0.025, 0.118, 0.166, 0.007},
    {0.096, 0.076, 0.032, 0.145, 0.093, 0.02, 0.116, 0.095, 0.081, 0.126, 0.175, 0.084},
    {0.095, 0.039, 0.021, 0.149, 0.072, 0.03, 0.09, 0.09, 0.055, 0.163, 0.113, 0.061},
    {0.097, 0.029, 0.065, 0.098, 0.065, 0.034, 0.13, 0.084, 0.01, 0.096, 0.151, 0.023},
    {0.099, 0.033, 0.011, 0.119, 0.089, 0.051, 0.119, 0.093, 0.053, 0.133, 0.118, 0.053},
    {0.096, 0.076, 0.013, 0.151, 0.075, 0.027, 0.109, 0.089, 0.079, 0.092, 0.16, 0.018},
    {0.097, 0.058, 0.051, 0.154, 0.1, 0.042, 0.087, 0.087, 0.075, 0.129, 0.155, 0.061},
    {0.086, 0.066, 0.043, 0.147, 0.101, 0.074, 0.103, 0.084, 0.034, 0.118, 0.165, 0.059},
    {0.097, 0.061, 0.073, 0.138, 0.103, 0.079, 0.084, 0.091, 0.013, 0.145, 0.167, 0.088},
    {0.1, 0.075, 0.073, 0.131, 0.078, 0.076, 0.134, 0.094, 0.07, 0.126, 0.089, 0.041},
    {0.095, 0.066, 0.006, 0.129, 0.073, 0.043, 0.135, 0.078, 0.079, 0.155, 0.121, 0.043},
    {0.084, 0.034, 0.059, 0.119, 0.077, 0.066, 0.124, 0.082, 0.078, 0.105, 0.094, 0.085},
    {0.099, 0.079, 0.081, 0.112, 0.078, 0.012, 0.124, 0.084, 0.035, 0.088, 0.109, 0.019},
    {0.098, 0.03, 0.083, 0.143, 0.071, 0.083, 0.143, 0.08, 0.05, 0.128, 0.123, 0.014},
    {0.09, 0.07, 0.049, 0.097, 0.108, 0.058, 0.131, 0.081, 0.055, 0.147, 0.104, 0.044},
    {0.085, 0.031, 0.028, 0.145, 0.068, 0.077, 0.084, 0.09, 0.011, 0.16, 0.098, 0.054},
    {0.09, 0.057, 0.067, 0.084, 0.075, 0.026, 0.145, 0.095, 0.007, 0.086, 0.095, 0.069},
    {0.088, 0.066, 0.057, 0.132, 0.084, 0.059, 0.083, 0.086, 0.008, 0.098, 0.18, 0.035},
    {0.096, 0.078, 0.078, 0.126, 0.077, 0.038, 0.11, 0.083, 0.047, 0.103, 0.185, 0.021},
    {0.085, 0.057, 0.073, 0.139, 0.067, 0.07, 0.133, 0.089, 0.01, 0.156, 0.172, 0.032},
    {0.098, 0.063, 0.01, 0.115, 0.079, 0.017, 0.121, 0.09, 0.025, 0.138, 0.157, 0.056},
    {0.099, 0.05, 0.04, 0.09, 0.11, 0.056, 0.146, 0.088, 0.056, 0.119, 0.097, 0.082},
};

inline Problem social_media_problem(std::size_t iterations = kDefaultIterations, std::uint64_t seed = kDefaultSeed) {
  RunConfig config;
  config.iterations = iterations;
  config.seed = seed;
  config.custom_sets = {std::vector<double>(12, 0.05)};
  return Problem{social_media_matrix(), config};
}

}  // namespace ectopsis::testing
