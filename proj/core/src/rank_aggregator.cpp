#include "ectopsis/rank_aggregator.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace ectopsis {

namespace {

void check_permutation(std::span<const int> row, std::size_t iteration) {
  std::vector<bool> seen(row.size(), false);
  for (int r : row) {
    if (r < 1 || static_cast<std::size_t>(r) > row.size() || seen[static_cast<std::size_t>(r - 1)]) {
      throw InputError(fmt::format("iteration {}: ranks are not a permutation of 1..{}", iteration + 1, row.size()));
    }
    seen[static_cast<std::size_t>(r - 1)] = true;
  }
}

}  // namespace

RankMatrix rank_matrix_from_ranks(const Grid<int>& ranks) {
  if (ranks.rows() == 0) throw InputError("rank matrix: no iterations");
  const int m = static_cast<int>(ranks.cols());
  RankMatrix rm{ranks, Grid<int>(ranks.rows(), ranks.cols())};
  for (std::size_t i = 0; i < ranks.rows(); ++i) {
    check_permutation(ranks.row(i), i);
    for (std::size_t j = 0; j < ranks.cols(); ++j) rm.scores(i, j) = m + 1 - ranks(i, j);
  }
  return rm;
}

RankMatrix build_rank_matrix(std::span<const TopsisResult> results) {
  if (results.empty()) throw InputError("rank matrix: no iterations");
  const std::size_t m = results.front().ranks.size();
  Grid<int> ranks(results.size(), m);
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].ranks.size() != m) {
      throw InputError(fmt::format("rank matrix: iteration {} ranks {} alternatives, expected {}", i + 1,
                                   results[i].ranks.size(), m));
    }
    std::copy(results[i].ranks.begin(), results[i].ranks.end(), ranks.row(i).begin());
  }
  return rank_matrix_from_ranks(ranks);
}

ModalScore modal_score(std::span<const int> scores, int alternative_count) {
  ModalScore out;
  out.histogram.assign(static_cast<std::size_t>(std::max(alternative_count, 0)), 0);
  for (int s : scores) {
    if (s < 1 || s > alternative_count) {
      throw InputError(fmt::format("modal score: score {} outside 1..{}", s, alternative_count));
    }
    ++out.histogram[static_cast<std::size_t>(s - 1)];
  }
  std::size_t best = 0;
  for (std::size_t s = 0; s < out.histogram.size(); ++s) {
    if (out.histogram[s] >= best && out.histogram[s] > 0) {
      best = out.histogram[s];
      out.mode = static_cast<int>(s + 1);
    }
  }
  return out;
}

FinalRanking final_ranking(const RankMatrix& rm, const Grid<double>& closeness_log) {
  const std::size_t t = rm.iterations();
  const std::size_t m = rm.alternative_count();
  if (t == 0) throw InputError("final ranking: no iterations");
  if (!closeness_log.empty() && (closeness_log.rows() != t || closeness_log.cols() != m)) {
    throw InputError(fmt::format("final ranking: closeness log is {}x{}, expected {}x{}", closeness_log.rows(),
                                 closeness_log.cols(), t, m));
  }

  FinalRanking out;
  out.outcomes.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    auto scores = rm.scores.column(j);
    auto modal = modal_score(scores, static_cast<int>(m));
    auto& o = out.outcomes[j];
    o.histogram = std::move(modal.histogram);
    o.modal_score = modal.mode;
    const long long score_sum = std::accumulate(scores.begin(), scores.end(), 0LL);
    o.mean_score = static_cast<double>(score_sum) / static_cast<double>(t);
    if (!closeness_log.empty()) {
      // Summed in sorted order so the mean does not depend on iteration order.
      auto xi = closeness_log.column(j);
      std::sort(xi.begin(), xi.end());
      o.mean_closeness = std::accumulate(xi.begin(), xi.end(), 0.0) / static_cast<double>(t);
    }
  }

  out.order.resize(m);
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::sort(out.order.begin(), out.order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = out.outcomes[a];
    const auto& y = out.outcomes[b];
    if (x.modal_score != y.modal_score) return x.modal_score > y.modal_score;
    if (x.mean_score != y.mean_score) return x.mean_score > y.mean_score;
    if (x.mean_closeness != y.mean_closeness) return x.mean_closeness > y.mean_closeness;
    return a < b;
  });
  for (std::size_t pos = 0; pos < m; ++pos) out.outcomes[out.order[pos]].position = static_cast<int>(pos + 1);
  return out;
}

Grid<std::size_t> rank_frequency(const RankMatrix& rm) {
  const std::size_t m = rm.alternative_count();
  Grid<std::size_t> freq(m, m, 0);
  for (std::size_t i = 0; i < rm.iterations(); ++i) {
    for (std::size_t j = 0; j < m; ++j) ++freq(j, static_cast<std::size_t>(rm.ranks(i, j) - 1));
  }
  return freq;
}

}  // namespace ectopsis
