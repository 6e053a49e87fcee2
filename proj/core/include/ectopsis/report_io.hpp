#pragma once

// Machine-readable run outputs and their readers.
//
//   weights.csv      weight,<criterion ids>; rows Entropy, Critic,
//                    Custom Weights k..., Lower, Upper
//   rwm.csv          iteration,<criterion ids>; t rows of sampled weights
//   ranks.csv        iteration,<alternatives>; t rows of ranks (1 = best)
//   closeness.csv    iteration,<alternatives>; t rows of closeness values
//   summary.json     configuration echo, weight sets, bounds, final ranking
//   weights_3dp.csv, rwm_3dp.csv   the same tables rounded to 3 decimals
//
// Reals are written in the shortest form that parses back to the same
// double, so every file is a pure function of (input, flags, seed).

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ectopsis/model.hpp"
#include "ectopsis/pipeline.hpp"
#include "ectopsis/svg_charts.hpp"

namespace ectopsis {

enum class Precision { full, display };

std::string weights_csv(std::span<const NamedWeightSet> sets, const WeightBounds& bounds,
                        std::span<const std::string> criterion_ids, Precision precision = Precision::full);
std::string rwm_csv(const RandomWeightMatrix& rwm, std::span<const std::string> criterion_ids,
                    Precision precision = Precision::full);
std::string ranks_csv(const RankMatrix& rm, std::span<const std::string> alternatives);
std::string closeness_csv(const Grid<double>& closeness_log, std::span<const std::string> alternatives);
std::string summary_json(const RunReport& report);

/// Fields recovered from summary.json.
struct RunSummary {
  std::vector<std::string> alternatives;
  std::vector<CriterionSpec> criteria;
  RunConfig config;
  std::vector<NamedWeightSet> weight_sets;
  WeightBounds bounds;
  FinalRanking final;
};

/// Throws InputError on malformed documents.
RunSummary parse_summary(std::string_view json_text);

/// Writes all tables into `out_dir` (created if needed). Every file is
/// rendered in memory before the first write.
void emit_tables(const RunReport& report, const std::filesystem::path& out_dir);

ChartData chart_data(const RunReport& report);

/// Reloads chart inputs from a directory written by emit_tables, or from the
/// path of its summary.json.
ChartData load_chart_data(const std::filesystem::path& summary_or_dir);

std::vector<std::string> criterion_ids(const DecisionMatrix& matrix);

}  // namespace ectopsis
