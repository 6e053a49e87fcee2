#pragma once

// Domain types shared by the weighting, sampling, ranking and reporting
// layers. Everything here is a plain value type; objects are treated as
// immutable once handed to the algorithms.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ectopsis/error.hpp"

namespace ectopsis {

inline constexpr std::size_t kDefaultIterations = 10'000;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Tolerance on the unit-sum property of weight vectors.
inline constexpr double kWeightSumTolerance = 1e-9;

/// Dense row-major matrix.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Builds a grid from nested rows; throws InputError on ragged input.
  static Grid from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Grid grid(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) {
        throw InputError("row " + std::to_string(r + 1) + ": expected " + std::to_string(cols) +
                         " values, got " + std::to_string(rows[r].size()));
      }
      for (std::size_t c = 0; c < cols; ++c) grid(r, c) = rows[r][c];
    }
    return grid;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  std::span<const T> data() const noexcept { return data_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

enum class Direction { benefit, cost };

/// "max"/"min" tokens used by the file formats.
std::string_view to_token(Direction d) noexcept;

struct CriterionSpec {
  std::string id;
  std::string label;
  Direction direction = Direction::benefit;

  friend bool operator==(const CriterionSpec&, const CriterionSpec&) = default;
};

/// m alternatives scored on n criteria. Column order is authoritative: every
/// weight vector, bound and report aligns with `criteria` by index.
struct DecisionMatrix {
  std::vector<std::string> alternatives;
  std::vector<CriterionSpec> criteria;
  Grid<double> values;

  std::size_t alternative_count() const noexcept { return alternatives.size(); }
  std::size_t criterion_count() const noexcept { return criteria.size(); }
  std::vector<Direction> directions() const;

  friend bool operator==(const DecisionMatrix&, const DecisionMatrix&) = default;
};

enum class WeightSource { entropy, critic, custom };

struct NamedWeightSet {
  WeightSource source = WeightSource::custom;
  /// Zero-based position among the custom sets; unused for entropy/critic.
  std::size_t custom_index = 0;
  std::vector<double> weights;

  /// "Entropy", "Critic" or "Custom Weights k" (k one-based).
  std::string name() const;

  friend bool operator==(const NamedWeightSet&, const NamedWeightSet&) = default;
};

struct WeightBounds {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t size() const noexcept { return lower.size(); }

  friend bool operator==(const WeightBounds&, const WeightBounds&) = default;
};

/// Throws InputError unless 0 <= lower_j <= upper_j <= 1 for all j.
void check_bounds(const WeightBounds& bounds);

/// t sampled weight vectors, one row per iteration.
struct RandomWeightMatrix {
  std::uint64_t seed = 0;
  WeightBounds bounds;
  Grid<double> rows;

  std::size_t iterations() const noexcept { return rows.rows(); }

  friend bool operator==(const RandomWeightMatrix&, const RandomWeightMatrix&) = default;
};

struct TopsisResult {
  std::vector<double> closeness;
  /// ranks[i] is the position of alternative i, 1 = best.
  std::vector<int> ranks;
};

/// Per-iteration ranks (t rows x m columns) and the matching scores
/// m + 1 - rank.
struct RankMatrix {
  Grid<int> ranks;
  Grid<int> scores;

  std::size_t iterations() const noexcept { return ranks.rows(); }
  std::size_t alternative_count() const noexcept { return ranks.cols(); }

  friend bool operator==(const RankMatrix&, const RankMatrix&) = default;
};

struct AlternativeOutcome {
  /// histogram[s - 1] counts the iterations in which the score was s.
  std::vector<std::size_t> histogram;
  int modal_score = 0;
  double mean_score = 0.0;
  double mean_closeness = 0.0;
  int position = 0;

  friend bool operator==(const AlternativeOutcome&, const AlternativeOutcome&) = default;
};

struct FinalRanking {
  /// Indexed by alternative.
  std::vector<AlternativeOutcome> outcomes;
  /// Alternative indices from first to last position.
  std::vector<std::size_t> order;

  std::vector<int> positions() const;

  friend bool operator==(const FinalRanking&, const FinalRanking&) = default;
};

struct RunConfig {
  std::size_t iterations = kDefaultIterations;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::vector<double>> custom_sets;
  bool use_entropy = true;
  bool use_critic = true;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct Problem {
  DecisionMatrix matrix;
  RunConfig config;
};

/// Every invariant violation of the matrix and configuration, in a stable
/// order. Empty means the problem is valid.
std::vector<std::string> problem_violations(const DecisionMatrix& matrix, const RunConfig& config);

/// Returns the problem unchanged when valid; throws ValidationError listing
/// all violations otherwise.
Problem validate_problem(const DecisionMatrix& matrix, const RunConfig& config);

}  // namespace ectopsis
