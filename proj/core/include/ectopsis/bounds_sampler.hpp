#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "ectopsis/model.hpp"

namespace ectopsis {

/// Element-wise min and max over all contributing weight sets.
///
/// Throws InputError for an empty list or mismatched lengths.
WeightBounds compute_bounds(std::span<const NamedWeightSet> sets);

/// Counter-based draw for one cell of the random weight matrix.
///
/// The value is a pure function of (seed, iteration, criterion, bounds):
/// a SplitMix64 output at counter iteration * n + criterion + 1, its top 53
/// bits scaled onto the closed unit interval, then mapped affinely onto
/// [lower_j, upper_j].
double sample_weight(const WeightBounds& bounds, std::uint64_t seed, std::size_t iteration,
                     std::size_t criterion);

/// Uniform t x n weight matrix within the bounds. Rows are not renormalized.
/// `threads` = 0 picks the hardware concurrency; output is identical for any
/// thread count.
RandomWeightMatrix sample_weight_matrix(const WeightBounds& bounds, std::size_t iterations, std::uint64_t seed,
                                        unsigned threads = 0);

}  // namespace ectopsis
