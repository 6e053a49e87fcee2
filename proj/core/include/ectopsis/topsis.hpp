#pragma once

// Single TOPSIS evaluation for one weight vector. Weights enter inside the
// distance, multiplying squared deviations from the ideal points, and are
// never pre-multiplied into the normalized matrix.

#include <span>
#include <vector>

#include "ectopsis/model.hpp"

namespace ectopsis {

/// Columns scaled to unit Euclidean norm.
struct NormalizedMatrix {
  Grid<double> values;
};

struct IdealPair {
  std::vector<double> positive;
  std::vector<double> negative;
};

struct DistancePair {
  std::vector<double> plus;
  std::vector<double> minus;
};

/// V_ij = x_ij / ||x_.j||. Throws ComputationError on an all-zero column.
NormalizedMatrix vector_normalize(const DecisionMatrix& matrix);
NormalizedMatrix vector_normalize(const Grid<double>& values);

IdealPair ideal_solutions(const NormalizedMatrix& v, std::span<const Direction> directions);

/// Weighted Euclidean distances to both ideal points. Throws InputError for
/// negative, non-finite or all-zero weights, or a length mismatch.
DistancePair distances(const NormalizedMatrix& v, std::span<const double> weights, const IdealPair& ideals);

/// d- / (d- + d+). Throws ComputationError when both distances vanish.
std::vector<double> closeness(const DistancePair& d);

/// Rank 1 for the largest closeness; exact ties go to the lower index.
std::vector<int> rank_alternatives(std::span<const double> closeness);

/// Normalizes the matrix and finds the ideal points once, then ranks any
/// number of weight vectors against them. evaluate() is const and safe to
/// call concurrently.
class TopsisEvaluator {
 public:
  explicit TopsisEvaluator(const DecisionMatrix& matrix);

  TopsisResult evaluate(std::span<const double> weights) const;

  const NormalizedMatrix& normalized() const noexcept { return normalized_; }
  const IdealPair& ideals() const noexcept { return ideals_; }

 private:
  NormalizedMatrix normalized_;
  IdealPair ideals_;
};

TopsisResult topsis_run(const DecisionMatrix& matrix, std::span<const double> weights);

}  // namespace ectopsis
