#include "ectopsis/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace ectopsis {

namespace {

std::string column_name(const DecisionMatrix& matrix, std::size_t j) {
  return fmt::format("column {} ('{}')", j + 1, matrix.criteria[j].id);
}

}  // namespace

EntropyReport entropy_weights(const DecisionMatrix& matrix, EntropyOptions options) {
  const Grid<double>& x = matrix.values;
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  if (m < 2 || n < 1) throw ComputationError("entropy weights need m >= 2 and n >= 1");

  EntropyReport report;
  report.shares = Grid<double>(m, n);
  report.entropy.assign(n, 0.0);
  report.diversity.assign(n, 0.0);

  const double log_m = std::log(static_cast<double>(m));
  for (std::size_t j = 0; j < n; ++j) {
    const bool invert = options.cost_handling == EntropyOptions::CostHandling::reciprocal &&
                        matrix.criteria[j].direction == Direction::cost;
    std::vector<double> col(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double v = x(i, j);
      if (v < 0.0) throw ComputationError(fmt::format("entropy: negative value in {}", column_name(matrix, j)));
      if (invert) {
        if (v == 0.0) {
          throw ComputationError(
              fmt::format("entropy: cost {} contains a zero; its reciprocal is undefined", column_name(matrix, j)));
        }
        col[i] = 1.0 / v;
      } else {
        col[i] = v;
      }
    }
    const double sum = std::accumulate(col.begin(), col.end(), 0.0);
    if (!(sum > 0.0)) throw ComputationError(fmt::format("entropy: {} sums to zero", column_name(matrix, j)));

    const bool uniform = std::all_of(col.begin(), col.end(), [&](double v) { return v == col.front(); });
    double plogp = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double p = col[i] / sum;
      report.shares(i, j) = p;
      if (p > 0.0) plogp += p * std::log(p);
    }
    const double e = uniform ? 1.0 : std::clamp(-plogp / log_m, 0.0, 1.0);
    report.entropy[j] = e;
    report.diversity[j] = 1.0 - e;
  }

  const double total = std::accumulate(report.diversity.begin(), report.diversity.end(), 0.0);
  if (!(total > 0.0)) {
    throw ComputationError("entropy: every column is uniform, so no criterion carries information");
  }
  report.weights.source = WeightSource::entropy;
  report.weights.weights.resize(n);
  for (std::size_t j = 0; j < n; ++j) report.weights.weights[j] = report.diversity[j] / total;
  return report;
}

Grid<double> minmax_normalize(const DecisionMatrix& matrix) {
  const Grid<double>& x = matrix.values;
  Grid<double> out(x.rows(), x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    const auto col = x.column(j);
    const auto [lo_it, hi_it] = std::minmax_element(col.begin(), col.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (!(hi > lo)) {
      throw ComputationError(fmt::format("min-max normalization: {} is constant", column_name(matrix, j)));
    }
    const double range = hi - lo;
    const bool benefit = matrix.criteria[j].direction == Direction::benefit;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      out(i, j) = benefit ? (col[i] - lo) / range : (hi - col[i]) / range;
    }
  }
  return out;
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw ComputationError(fmt::format("pearson: need two equal-length vectors of size >= 2 (got {} and {})",
                                       a.size(), b.size()));
  }
  const double len = static_cast<double>(a.size());
  const double mean_a = std::accumulate(a.begin(), a.end(), 0.0) / len;
  const double mean_b = std::accumulate(b.begin(), b.end(), 0.0) / len;
  double cov = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (!(var_a > 0.0) || !(var_b > 0.0)) throw ComputationError("pearson: zero-variance input");
  return std::clamp(cov / std::sqrt(var_a * var_b), -1.0, 1.0);
}

CriticReport critic_weights(const DecisionMatrix& matrix, CriticOptions options) {
  const std::size_t m = matrix.values.rows();
  const std::size_t n = matrix.values.cols();
  if (m < 2) throw ComputationError("CRITIC needs at least two alternatives");
  if (n == 1) throw ComputationError("CRITIC undefined for a single criterion");

  CriticReport report;
  report.normalized = minmax_normalize(matrix);
  const Grid<double>& z = report.normalized;

  std::vector<std::vector<double>> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = z.column(j);

  report.correlation = Grid<double>(n, n, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const double rho = pearson(cols[j], cols[k]);
      report.correlation(j, k) = rho;
      report.correlation(k, j) = rho;
    }
  }

  const double grand_mean = std::accumulate(z.data().begin(), z.data().end(), 0.0) / static_cast<double>(m * n);
  const double divisor = options.divisor == CriticOptions::Divisor::sample ? static_cast<double>(m - 1)
                                                                          : static_cast<double>(m);
  report.stdev.resize(n);
  report.index.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double center = options.center == CriticOptions::DispersionCenter::grand_mean
                              ? grand_mean
                              : std::accumulate(cols[j].begin(), cols[j].end(), 0.0) / static_cast<double>(m);
    double ss = 0.0;
    for (double v : cols[j]) ss += (v - center) * (v - center);
    report.stdev[j] = std::sqrt(ss / divisor);

    double conflict = 0.0;
    for (std::size_t k = 0; k < n; ++k) conflict += 1.0 - report.correlation(j, k);
    report.index[j] = report.stdev[j] * conflict;
  }

  const double total = std::accumulate(report.index.begin(), report.index.end(), 0.0);
  if (!(total > 0.0)) throw ComputationError("CRITIC: all information indices are zero");
  report.weights.source = WeightSource::critic;
  report.weights.weights.resize(n);
  for (std::size_t j = 0; j < n; ++j) report.weights.weights[j] = report.index[j] / total;
  return report;
}

NamedWeightSet normalize_custom_set(std::span<const double> raw, std::size_t expected_length,
                                    std::size_t custom_index) {
  if (raw.size() != expected_length) {
    throw InputError(fmt::format("custom set {}: expected {} weights, got {}", custom_index + 1, expected_length,
                                 raw.size()));
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (!std::isfinite(raw[j])) {
      throw InputError(fmt::format("custom set {}: non-finite weight at position {}", custom_index + 1, j + 1));
    }
    if (raw[j] < 0.0) {
      throw InputError(fmt::format("custom set {}: negative weight at position {}", custom_index + 1, j + 1));
    }
    sum += raw[j];
  }
  if (!(sum > 0.0)) throw InputError(fmt::format("custom set {}: all weights are zero", custom_index + 1));

  NamedWeightSet set;
  set.source = WeightSource::custom;
  set.custom_index = custom_index;
  set.weights.reserve(raw.size());
  for (double w : raw) set.weights.push_back(w / sum);
  return set;
}

}  // namespace ectopsis
