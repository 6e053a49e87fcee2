#include "ectopsis/model.hpp"

#include <cmath>
#include <set>

#include <fmt/format.h>

namespace ectopsis {

namespace {

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out = "invalid problem:";
  for (const auto& line : lines) {
    out += "\n  - ";
    out += line;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : InputError(join_lines(violations)), violations_(std::move(violations)) {}

std::string_view to_token(Direction d) noexcept {
  return d == Direction::benefit ? "max" : "min";
}

std::vector<Direction> DecisionMatrix::directions() const {
  std::vector<Direction> out;
  out.reserve(criteria.size());
  for (const auto& c : criteria) out.push_back(c.direction);
  return out;
}

std::string NamedWeightSet::name() const {
  switch (source) {
    case WeightSource::entropy:
      return "Entropy";
    case WeightSource::critic:
      return "Critic";
    case WeightSource::custom:
      break;
  }
  return fmt::format("Custom Weights {}", custom_index + 1);
}

void check_bounds(const WeightBounds& bounds) {
  if (bounds.lower.size() != bounds.upper.size()) {
    throw InputError(fmt::format("weight bounds: lower has {} entries, upper has {}",
                                 bounds.lower.size(), bounds.upper.size()));
  }
  for (std::size_t j = 0; j < bounds.lower.size(); ++j) {
    const double lo = bounds.lower[j];
    const double hi = bounds.upper[j];
    if (!(lo >= 0.0 && lo <= hi && hi <= 1.0)) {
      throw InputError(fmt::format("weight bounds: criterion {} has invalid range [{}, {}]", j + 1, lo, hi));
    }
  }
}

std::vector<int> FinalRanking::positions() const {
  std::vector<int> out;
  out.reserve(outcomes.size());
  for (const auto& o : outcomes) out.push_back(o.position);
  return out;
}

std::vector<std::string> problem_violations(const DecisionMatrix& matrix, const RunConfig& config) {
  std::vector<std::string> errs;
  const std::size_t m = matrix.alternatives.size();
  const std::size_t n = matrix.criteria.size();

  if (matrix.values.empty() && m == 0 && n == 0) {
    errs.emplace_back("empty matrix");
  }
  if (m < 2) errs.push_back(fmt::format("m >= 2 required (got {} alternatives)", m));
  if (n < 1) errs.emplace_back("n >= 1 required (no criteria)");

  std::set<std::string> seen;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& id = matrix.criteria[j].id;
    if (id.empty()) {
      errs.push_back(fmt::format("criterion {} has an empty id", j + 1));
    } else if (!seen.insert(id).second) {
      errs.push_back(fmt::format("duplicate criterion id '{}' (column {})", id, j + 1));
    }
  }

  const bool shape_ok = matrix.values.rows() == m && matrix.values.cols() == n;
  if (!shape_ok) {
    errs.push_back(fmt::format("dimension mismatch: values grid is {}x{}, expected {}x{}",
                               matrix.values.rows(), matrix.values.cols(), m, n));
  }
  for (std::size_t i = 0; i < matrix.values.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.values.cols(); ++j) {
      const double v = matrix.values(i, j);
      if (!std::isfinite(v)) {
        errs.push_back(fmt::format("non-finite value at (row {}, column {})", i + 1, j + 1));
      } else if (v < 0.0) {
        errs.push_back(fmt::format("negative value {} at (row {}, column {})", v, i + 1, j + 1));
      }
    }
  }

  if (config.iterations < 1) errs.emplace_back("iterations must be >= 1");

  for (std::size_t k = 0; k < config.custom_sets.size(); ++k) {
    const auto& set = config.custom_sets[k];
    if (set.size() != n) {
      errs.push_back(fmt::format("custom set {}: expected {} weights, got {}", k + 1, n, set.size()));
    }
    double sum = 0.0;
    bool finite = true;
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (!std::isfinite(set[j])) {
        errs.push_back(fmt::format("custom set {}: non-finite weight at position {}", k + 1, j + 1));
        finite = false;
      } else if (set[j] < 0.0) {
        errs.push_back(fmt::format("custom set {}: negative weight at position {}", k + 1, j + 1));
      } else {
        sum += set[j];
      }
    }
    if (finite && !(sum > 0.0)) errs.push_back(fmt::format("custom set {}: weights sum to zero", k + 1));
  }

  if (!config.use_entropy && !config.use_critic && config.custom_sets.empty()) {
    errs.emplace_back("no weight sets: entropy and critic are disabled and no custom set was given");
  }
  return errs;
}

Problem validate_problem(const DecisionMatrix& matrix, const RunConfig& config) {
  auto errs = problem_violations(matrix, config);
  if (!errs.empty()) throw ValidationError(std::move(errs));
  return Problem{matrix, config};
}

}  // namespace ectopsis
