#include "ectopsis/topsis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace ectopsis {

namespace {

template <typename NameFn>
NormalizedMatrix normalize_columns(const Grid<double>& x, NameFn&& column_name) {
  NormalizedMatrix out{Grid<double>(x.rows(), x.cols())};
  for (std::size_t j = 0; j < x.cols(); ++j) {
    double ss = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) ss += x(i, j) * x(i, j);
    if (!(ss > 0.0)) {
      throw ComputationError(fmt::format("vector normalization: {} is all zero", column_name(j)));
    }
    const double norm = std::sqrt(ss);
    for (std::size_t i = 0; i < x.rows(); ++i) out.values(i, j) = x(i, j) / norm;
  }
  return out;
}

}  // namespace

NormalizedMatrix vector_normalize(const DecisionMatrix& matrix) {
  return normalize_columns(matrix.values, [&](std::size_t j) {
    return fmt::format("column {} ('{}')", j + 1, matrix.criteria[j].id);
  });
}

NormalizedMatrix vector_normalize(const Grid<double>& values) {
  return normalize_columns(values, [](std::size_t j) { return fmt::format("column {}", j + 1); });
}

IdealPair ideal_solutions(const NormalizedMatrix& v, std::span<const Direction> directions) {
  const Grid<double>& g = v.values;
  if (directions.size() != g.cols()) {
    throw InputError(fmt::format("ideal solutions: {} directions for {} columns", directions.size(), g.cols()));
  }
  IdealPair ideals{std::vector<double>(g.cols()), std::vector<double>(g.cols())};
  for (std::size_t j = 0; j < g.cols(); ++j) {
    double lo = g(0, j);
    double hi = g(0, j);
    for (std::size_t i = 1; i < g.rows(); ++i) {
      lo = std::min(lo, g(i, j));
      hi = std::max(hi, g(i, j));
    }
    const bool benefit = directions[j] == Direction::benefit;
    ideals.positive[j] = benefit ? hi : lo;
    ideals.negative[j] = benefit ? lo : hi;
  }
  return ideals;
}

DistancePair distances(const NormalizedMatrix& v, std::span<const double> weights, const IdealPair& ideals) {
  const Grid<double>& g = v.values;
  if (weights.size() != g.cols()) {
    throw InputError(fmt::format("distances: {} weights for {} criteria", weights.size(), g.cols()));
  }
  bool any_positive = false;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw InputError(fmt::format("distances: invalid weight {}", w));
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw InputError("distances: all weights are zero");

  DistancePair d{std::vector<double>(g.rows()), std::vector<double>(g.rows())};
  for (std::size_t i = 0; i < g.rows(); ++i) {
    double plus = 0.0;
    double minus = 0.0;
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const double dp = g(i, j) - ideals.positive[j];
      const double dm = g(i, j) - ideals.negative[j];
      plus += weights[j] * dp * dp;
      minus += weights[j] * dm * dm;
    }
    d.plus[i] = std::sqrt(plus);
    d.minus[i] = std::sqrt(minus);
  }
  return d;
}

std::vector<double> closeness(const DistancePair& d) {
  std::vector<double> xi(d.plus.size());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    const double total = d.minus[i] + d.plus[i];
    if (!(total > 0.0)) {
      throw ComputationError(
          fmt::format("degenerate problem: ideal equals anti-ideal (alternative {})", i + 1));
    }
    xi[i] = d.minus[i] / total;
  }
  return xi;
}

std::vector<int> rank_alternatives(std::span<const double> closeness) {
  std::vector<std::size_t> order(closeness.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return closeness[a] > closeness[b]; });
  std::vector<int> ranks(closeness.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) ranks[order[pos]] = static_cast<int>(pos + 1);
  return ranks;
}

TopsisEvaluator::TopsisEvaluator(const DecisionMatrix& matrix)
    : normalized_(vector_normalize(matrix)), ideals_(ideal_solutions(normalized_, matrix.directions())) {}

TopsisResult TopsisEvaluator::evaluate(std::span<const double> weights) const {
  TopsisResult result;
  result.closeness = closeness(distances(normalized_, weights, ideals_));
  result.ranks = rank_alternatives(result.closeness);
  return result;
}

TopsisResult topsis_run(const DecisionMatrix& matrix, std::span<const double> weights) {
  return TopsisEvaluator(matrix).evaluate(weights);
}

}  // namespace ectopsis
