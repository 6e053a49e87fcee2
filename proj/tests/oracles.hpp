#pragma once

// Reference implementations used only by tests. They are written directly
// from the formulas, with different loop structure and no shared helpers, so
// agreement with the library is meaningful.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ectopsis/model.hpp"

namespace ectopsis::testing {

/// Closeness values for one weight vector: unit-norm columns, weights inside
/// the root.
inline std::vector<double> brute_force_closeness(const std::vector<std::vector<double>>& x,
                                                 const std::vector<Direction>& dirs, const std::vector<double>& w) {
  const std::size_t m = x.size();
  const std::size_t n = dirs.size();
  std::vector<double> norm(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    long double ss = 0;
    for (std::size_t i = 0; i < m; ++i) ss += static_cast<long double>(x[i][j]) * x[i][j];
    norm[j] = static_cast<double>(std::sqrt(ss));
  }
  std::vector<double> xi(m);
  for (std::size_t i = 0; i < m; ++i) {
    long double dp = 0;
    long double dm = 0;
    for (std::size_t j = 0; j < n; ++j) {
      double best = x[0][j] / norm[j];
      double worst = best;
      for (std::size_t k = 1; k < m; ++k) {
        const double v = x[k][j] / norm[j];
        const bool better = dirs[j] == Direction::benefit ? v > best : v < best;
        const bool worse = dirs[j] == Direction::benefit ? v < worst : v > worst;
        if (better) best = v;
        if (worse) worst = v;
      }
      const double v = x[i][j] / norm[j];
      dp += w[j] * (v - best) * (v - best);
      dm += w[j] * (v - worst) * (v - worst);
    }
    xi[i] = static_cast<double>(std::sqrt(dm) / (std::sqrt(dm) + std::sqrt(dp)));
  }
  return xi;
}

/// Positions (1 = best) from the mode rule and the documented tie chain,
/// computed by repeated selection.
inline std::vector<int> brute_force_positions(const std::vector<std::vector<int>>& rank_rows,
                                              const std::vector<std::vector<double>>& xi_rows) {
  const std::size_t t = rank_rows.size();
  const int m = static_cast<int>(rank_rows.front().size());
  struct Key {
    int mode;
    long long score_sum;
    double xi_sum;
  };
  std::vector<Key> keys;
  for (int a = 0; a < m; ++a) {
    std::map<int, int> counts;
    long long sum = 0;
    double xi_sum = 0.0;
    for (std::size_t i = 0; i < t; ++i) {
      const int score = m + 1 - rank_rows[i][static_cast<std::size_t>(a)];
      ++counts[score];
      sum += score;
      if (!xi_rows.empty()) xi_sum += xi_rows[i][static_cast<std::size_t>(a)];
    }
    int mode = 0;
    int best = 0;
    for (int s = m; s >= 1; --s) {
      if (counts[s] > best) {
        best = counts[s];
        mode = s;
      }
    }
    keys.push_back({mode, sum, xi_sum});
  }
  std::vector<bool> taken(static_cast<std::size_t>(m), false);
  std::vector<int> positions(static_cast<std::size_t>(m), 0);
  for (int pos = 1; pos <= m; ++pos) {
    int pick = -1;
    for (int a = 0; a < m; ++a) {
      if (taken[static_cast<std::size_t>(a)]) continue;
      if (pick < 0) {
        pick = a;
        continue;
      }
      const Key& k = keys[static_cast<std::size_t>(a)];
      const Key& p = keys[static_cast<std::size_t>(pick)];
      const bool beats = k.mode > p.mode || (k.mode == p.mode && k.score_sum > p.score_sum) ||
                         (k.mode == p.mode && k.score_sum == p.score_sum && k.xi_sum > p.xi_sum);
      if (beats) pick = a;
    }
    taken[static_cast<std::size_t>(pick)] = true;
    positions[static_cast<std::size_t>(pick)] = pos;
  }
  return positions;
}

inline std::vector<int> random_permutation(std::size_t m, std::mt19937_64& rng) {
  std::vector<int> p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = static_cast<int>(i + 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// m x n matrix of strictly positive, non-constant columns with random
/// directions.
inline DecisionMatrix random_matrix(std::size_t m, std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> value(0.01, 10.0);
  std::bernoulli_distribution is_cost(0.4);
  DecisionMatrix dm;
  for (std::size_t i = 0; i < m; ++i) dm.alternatives.push_back("a" + std::to_string(i + 1));
  for (std::size_t j = 0; j < n; ++j) {
    dm.criteria.push_back(
        CriterionSpec{"c" + std::to_string(j + 1), "", is_cost(rng) ? Direction::cost : Direction::benefit});
  }
  dm.values = Grid<double>(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) dm.values(i, j) = value(rng);
  }
  return dm;
}

}  // namespace ectopsis::testing
