#pragma once

// Objective criteria weights: Shannon entropy and CRITIC (contrast intensity
// times inter-criteria conflict), plus rescaling of externally supplied
// weight vectors.

#include <cstddef>
#include <span>
#include <vector>

#include "ectopsis/model.hpp"

namespace ectopsis {

struct EntropyOptions {
  enum class CostHandling {
    /// Cost columns enter the share matrix as 1/x. Reproduces the reference
    /// case-study weights.
    reciprocal,
    /// Every column is used as given, whatever its direction.
    raw,
  };
  CostHandling cost_handling = CostHandling::reciprocal;
};

struct EntropyReport {
  /// P_ij: each column rescaled to unit sum.
  Grid<double> shares;
  std::vector<double> entropy;
  /// 1 - entropy.
  std::vector<double> diversity;
  NamedWeightSet weights;
};

/// Entropy weights with the 0 * ln(0) = 0 convention.
///
/// Throws ComputationError when a column sums to zero, when a cost column
/// holds a zero under reciprocal handling, or when every column is uniform.
EntropyReport entropy_weights(const DecisionMatrix& matrix, EntropyOptions options = {});

/// Direction-aware min-max scaling: benefit columns map their max to 1, cost
/// columns their min to 1. Throws ComputationError naming a constant column.
Grid<double> minmax_normalize(const DecisionMatrix& matrix);

/// Pearson correlation; throws ComputationError on zero variance or length
/// mismatch.
double pearson(std::span<const double> a, std::span<const double> b);

struct CriticOptions {
  /// Point around which the spread of each normalized column is measured.
  enum class DispersionCenter {
    /// Mean of the whole normalized matrix (reference-tool behavior).
    grand_mean,
    /// Mean of the column itself.
    column_mean,
  };
  enum class Divisor { sample, population };

  DispersionCenter center = DispersionCenter::grand_mean;
  /// m - 1 (sample) or m (population). Cancels out of the weights.
  Divisor divisor = Divisor::sample;
};

struct CriticReport {
  Grid<double> normalized;
  /// n x n, symmetric with unit diagonal.
  Grid<double> correlation;
  std::vector<double> stdev;
  /// Information index sigma_j * sum_k (1 - rho_jk).
  std::vector<double> index;
  NamedWeightSet weights;
};

/// CRITIC weights computed on the min-max normalized matrix.
CriticReport critic_weights(const DecisionMatrix& matrix, CriticOptions options = {});

/// Rescales a raw custom vector to unit sum. `custom_index` is the zero-based
/// position of the set among the custom sets.
NamedWeightSet normalize_custom_set(std::span<const double> raw, std::size_t expected_length,
                                    std::size_t custom_index = 0);

}  // namespace ectopsis
