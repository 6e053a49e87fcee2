#pragma once

// Deterministic SVG charts. Geometry is fixed: a 960x540 canvas, 70 px left
// margin, 40 px top/right margins and 80 px bottom margin; every coordinate
// is printed with two decimals. Data-bearing elements carry data-* attributes
// holding the underlying values so the files can be checked mechanically.

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ectopsis/model.hpp"

namespace ectopsis {

/// What the four charts need; built from a RunReport or reloaded from a
/// previous run's output directory.
struct ChartData {
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  WeightBounds bounds;
  /// t x n sampled weights.
  Grid<double> weight_samples;
  RankMatrix rank_matrix;
  /// t x m closeness values.
  Grid<double> closeness_log;
  FinalRanking final;
};

/// Five-number summary; quartiles by linear interpolation between order
/// statistics.
struct BoxStats {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

BoxStats box_stats(std::span<const double> values);

/// figure2: weight samples per criterion.
std::string weight_boxplot_svg(const ChartData& data);
/// figure3: how often each alternative occupied each rank.
std::string rank_frequency_svg(const ChartData& data);
/// figure4: closeness per alternative, in final order.
std::string closeness_boxplot_svg(const ChartData& data);
/// figure5: modal score per alternative, in final order.
std::string final_ranking_svg(const ChartData& data);

/// Writes figure2.svg .. figure5.svg into `out_dir` (created if missing).
void emit_charts(const ChartData& data, const std::filesystem::path& out_dir);

}  // namespace ectopsis
