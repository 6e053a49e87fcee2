#pragma once

// Turns t per-iteration rankings into one final ordering by the mode of each
// alternative's scores (score = m + 1 - rank).
//
// Tie policies:
//   - several scores share the top frequency: the largest score wins;
//   - alternatives with equal modal scores: higher mean score, then higher
//     mean closeness, then lower alternative index.

#include <cstddef>
#include <span>
#include <vector>

#include "ectopsis/model.hpp"

namespace ectopsis {

/// Throws InputError if results disagree on m or a rank row is not a
/// permutation of 1..m.
RankMatrix build_rank_matrix(std::span<const TopsisResult> results);

/// Same, from bare t x m rank rows.
RankMatrix rank_matrix_from_ranks(const Grid<int>& ranks);

struct ModalScore {
  int mode = 0;
  /// histogram[s - 1] = number of occurrences of score s.
  std::vector<std::size_t> histogram;
};

/// Mode of one alternative's scores over {1..m}.
ModalScore modal_score(std::span<const int> scores, int alternative_count);

/// `closeness_log` is t x m, or empty when no closeness values are available
/// (the mean-closeness tiebreak then compares zeros).
FinalRanking final_ranking(const RankMatrix& rm, const Grid<double>& closeness_log);

/// alternative x rank occupancy counts; row i sums to t.
Grid<std::size_t> rank_frequency(const RankMatrix& rm);

}  // namespace ectopsis
