#include "ectopsis/bounds_sampler.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "parallel.hpp"

namespace ectopsis {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// [0, 1] inclusive at both ends.
constexpr double unit_closed(std::uint64_t bits) noexcept {
  constexpr double kScale = 1.0 / static_cast<double>((std::uint64_t{1} << 53) - 1);
  return static_cast<double>(bits >> 11) * kScale;
}

double draw(double lo, double hi, std::uint64_t seed, std::uint64_t counter) noexcept {
  const double u = unit_closed(mix64(seed + (counter + 1) * kGoldenGamma));
  return std::clamp(lo + u * (hi - lo), lo, hi);
}

}  // namespace

WeightBounds compute_bounds(std::span<const NamedWeightSet> sets) {
  if (sets.empty()) throw InputError("weight bounds: no weight sets supplied");
  const std::size_t n = sets.front().weights.size();
  WeightBounds bounds{sets.front().weights, sets.front().weights};
  for (const auto& set : sets.subspan(1)) {
    if (set.weights.size() != n) {
      throw InputError(fmt::format("weight bounds: '{}' has {} weights, expected {}", set.name(),
                                   set.weights.size(), n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      bounds.lower[j] = std::min(bounds.lower[j], set.weights[j]);
      bounds.upper[j] = std::max(bounds.upper[j], set.weights[j]);
    }
  }
  return bounds;
}

double sample_weight(const WeightBounds& bounds, std::uint64_t seed, std::size_t iteration, std::size_t criterion) {
  const std::uint64_t counter = static_cast<std::uint64_t>(iteration) * bounds.size() + criterion;
  return draw(bounds.lower[criterion], bounds.upper[criterion], seed, counter);
}

RandomWeightMatrix sample_weight_matrix(const WeightBounds& bounds, std::size_t iterations, std::uint64_t seed,
                                        unsigned threads) {
  if (iterations == 0) throw InputError("random weight matrix: iterations must be >= 1");
  check_bounds(bounds);
  const std::size_t n = bounds.size();

  RandomWeightMatrix out;
  out.seed = seed;
  out.bounds = bounds;
  out.rows = Grid<double>(iterations, n);
  detail::parallel_for(iterations, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto row = out.rows.row(i);
      for (std::size_t j = 0; j < n; ++j) row[j] = sample_weight(bounds, seed, i, j);
    }
  });
  return out;
}

}  // namespace ectopsis
