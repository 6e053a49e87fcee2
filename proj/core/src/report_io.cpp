#include "ectopsis/report_io.hpp"

#include <array>
#include <utility>

#include <nlohmann/json.hpp>

#include "ectopsis/rank_aggregator.hpp"
#include "files.hpp"
#include "text.hpp"

namespace ectopsis {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kSummaryFormat = "ectopsis-summary";
constexpr int kSummaryVersion = 1;

std::string cell(double v, Precision p) { return p == Precision::full ? detail::full(v) : detail::fixed3(v); }

std::string header(std::string_view first, std::span<const std::string> names) {
  std::string out(first);
  for (const auto& name : names) out += "," + name;
  out += '\n';
  return out;
}

const char* cost_handling_token(EntropyOptions::CostHandling h) {
  return h == EntropyOptions::CostHandling::reciprocal ? "reciprocal" : "raw";
}

const char* center_token(CriticOptions::DispersionCenter c) {
  return c == CriticOptions::DispersionCenter::grand_mean ? "grand_mean" : "column_mean";
}

const char* divisor_token(CriticOptions::Divisor d) { return d == CriticOptions::Divisor::sample ? "m-1" : "m"; }

const char* source_token(WeightSource s) {
  switch (s) {
    case WeightSource::entropy: return "entropy";
    case WeightSource::critic: return "critic";
    case WeightSource::custom: break;
  }
  return "custom";
}

// Reader helpers: every accessor names the JSON path it failed on.
const nlohmann::json& field(const nlohmann::json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(fmt::format("summary: missing field {}.{}", where, key));
  }
  return obj.at(key);
}

template <typename T>
T as(const nlohmann::json& v, const std::string& where) {
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(fmt::format("summary: field {} has the wrong type", where));
  }
}

Grid<double> read_real_table(const std::filesystem::path& path, std::size_t expected_cols) {
  const std::string text = detail::read_file(path);
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + start, end - start);
    start = end + 1;
    if (++line_no == 1 || detail::trim(line).empty()) continue;
    const auto cells = detail::split_cells(line);
    if (cells.size() != expected_cols + 1) {
      throw InputError(fmt::format("{}: row {}: expected {} values, got {}", path.string(), line_no, expected_cols,
                                   cells.size() - 1));
    }
    std::vector<double> row;
    for (std::size_t c = 1; c < cells.size(); ++c) {
      const auto v = detail::parse_double(cells[c]);
      if (!v) {
        throw InputError(
            fmt::format("{}: row {}, column {}: '{}' is not a number", path.string(), line_no, c + 1, cells[c]));
      }
      row.push_back(*v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError(fmt::format("{}: no data rows", path.string()));
  return Grid<double>::from_rows(rows);
}

}  // namespace

std::vector<std::string> criterion_ids(const DecisionMatrix& matrix) {
  std::vector<std::string> ids;
  for (const auto& c : matrix.criteria) ids.push_back(c.id);
  return ids;
}

std::string weights_csv(std::span<const NamedWeightSet> sets, const WeightBounds& bounds,
                        std::span<const std::string> criterion_ids, Precision precision) {
  std::string out = header("weight", criterion_ids);
  const auto row = [&](const std::string& name, std::span<const double> values) {
    out += name;
    for (double v : values) out += "," + cell(v, precision);
    out += '\n';
  };
  for (const auto& set : sets) row(set.name(), set.weights);
  row("Lower", bounds.lower);
  row("Upper", bounds.upper);
  return out;
}

std::string rwm_csv(const RandomWeightMatrix& rwm, std::span<const std::string> criterion_ids, Precision precision) {
  std::string out = header("iteration", criterion_ids);
  for (std::size_t i = 0; i < rwm.rows.rows(); ++i) {
    out += std::to_string(i + 1);
    for (double v : rwm.rows.row(i)) out += "," + cell(v, precision);
    out += '\n';
  }
  return out;
}

std::string ranks_csv(const RankMatrix& rm, std::span<const std::string> alternatives) {
  std::string out = header("iteration", alternatives);
  for (std::size_t i = 0; i < rm.iterations(); ++i) {
    out += std::to_string(i + 1);
    for (int r : rm.ranks.row(i)) out += "," + std::to_string(r);
    out += '\n';
  }
  return out;
}

std::string closeness_csv(const Grid<double>& closeness_log, std::span<const std::string> alternatives) {
  std::string out = header("iteration", alternatives);
  for (std::size_t i = 0; i < closeness_log.rows(); ++i) {
    out += std::to_string(i + 1);
    for (double v : closeness_log.row(i)) out += "," + detail::full(v);
    out += '\n';
  }
  return out;
}

std::string summary_json(const RunReport& report) {
  ordered_json doc;
  doc["format"] = kSummaryFormat;
  doc["version"] = kSummaryVersion;

  ordered_json config;
  config["iterations"] = report.config.iterations;
  config["seed"] = report.config.seed;
  config["use_entropy"] = report.config.use_entropy;
  config["use_critic"] = report.config.use_critic;
  config["custom_sets"] = report.config.custom_sets;
  config["entropy_cost_handling"] = cost_handling_token(report.entropy_options.cost_handling);
  config["critic_dispersion_center"] = center_token(report.critic_options.center);
  config["critic_divisor"] = divisor_token(report.critic_options.divisor);
  doc["config"] = std::move(config);

  doc["alternatives"] = report.matrix.alternatives;
  ordered_json criteria = ordered_json::array();
  for (const auto& c : report.matrix.criteria) {
    criteria.push_back({{"id", c.id}, {"label", c.label}, {"direction", std::string(to_token(c.direction))}});
  }
  doc["criteria"] = std::move(criteria);

  ordered_json sets = ordered_json::array();
  for (const auto& s : report.weight_sets) {
    ordered_json entry;
    entry["name"] = s.name();
    entry["source"] = source_token(s.source);
    if (s.source == WeightSource::custom) entry["custom_index"] = s.custom_index;
    entry["weights"] = s.weights;
    sets.push_back(std::move(entry));
  }
  doc["weight_sets"] = std::move(sets);
  doc["bounds"] = {{"lower", report.bounds.lower}, {"upper", report.bounds.upper}};

  ordered_json final;
  ordered_json order = ordered_json::array();
  for (std::size_t idx : report.final.order) order.push_back(report.matrix.alternatives[idx]);
  final["order"] = std::move(order);
  ordered_json outcomes = ordered_json::array();
  for (std::size_t i = 0; i < report.final.outcomes.size(); ++i) {
    const auto& o = report.final.outcomes[i];
    ordered_json entry;
    entry["alternative"] = report.matrix.alternatives[i];
    entry["position"] = o.position;
    entry["modal_score"] = o.modal_score;
    entry["mean_score"] = o.mean_score;
    entry["mean_closeness"] = o.mean_closeness;
    entry["score_histogram"] = o.histogram;
    outcomes.push_back(std::move(entry));
  }
  final["alternatives"] = std::move(outcomes);
  doc["final_ranking"] = std::move(final);
  return doc.dump(2) + "\n";
}

RunSummary parse_summary(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(fmt::format("summary: parse error at byte {}", e.byte));
  }
  if (as<std::string>(field(doc, "format", "$"), "$.format") != kSummaryFormat) {
    throw InputError("summary: not an ectopsis summary document");
  }

  RunSummary s;
  const auto& config = field(doc, "config", "$");
  s.config.iterations = as<std::size_t>(field(config, "iterations", "$.config"), "$.config.iterations");
  s.config.seed = as<std::uint64_t>(field(config, "seed", "$.config"), "$.config.seed");
  s.config.use_entropy = as<bool>(field(config, "use_entropy", "$.config"), "$.config.use_entropy");
  s.config.use_critic = as<bool>(field(config, "use_critic", "$.config"), "$.config.use_critic");
  s.config.custom_sets =
      as<std::vector<std::vector<double>>>(field(config, "custom_sets", "$.config"), "$.config.custom_sets");

  s.alternatives = as<std::vector<std::string>>(field(doc, "alternatives", "$"), "$.alternatives");
  const auto& criteria = field(doc, "criteria", "$");
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    const std::string where = fmt::format("$.criteria[{}]", j);
    CriterionSpec c;
    c.id = as<std::string>(field(criteria[j], "id", where), where + ".id");
    c.label = as<std::string>(field(criteria[j], "label", where), where + ".label");
    const auto token = as<std::string>(field(criteria[j], "direction", where), where + ".direction");
    c.direction = token == "min" ? Direction::cost : Direction::benefit;
    s.criteria.push_back(std::move(c));
  }

  const auto& sets = field(doc, "weight_sets", "$");
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const std::string where = fmt::format("$.weight_sets[{}]", k);
    NamedWeightSet w;
    const auto source = as<std::string>(field(sets[k], "source", where), where + ".source");
    if (source == "entropy") {
      w.source = WeightSource::entropy;
    } else if (source == "critic") {
      w.source = WeightSource::critic;
    } else {
      w.source = WeightSource::custom;
      w.custom_index = as<std::size_t>(field(sets[k], "custom_index", where), where + ".custom_index");
    }
    w.weights = as<std::vector<double>>(field(sets[k], "weights", where), where + ".weights");
    s.weight_sets.push_back(std::move(w));
  }

  const auto& bounds = field(doc, "bounds", "$");
  s.bounds.lower = as<std::vector<double>>(field(bounds, "lower", "$.bounds"), "$.bounds.lower");
  s.bounds.upper = as<std::vector<double>>(field(bounds, "upper", "$.bounds"), "$.bounds.upper");

  const auto& final = field(doc, "final_ranking", "$");
  const auto& outcomes = field(final, "alternatives", "$.final_ranking");
  if (outcomes.size() != s.alternatives.size()) {
    throw InputError("summary: final_ranking.alternatives does not match the alternative list");
  }
  s.final.outcomes.resize(outcomes.size());
  s.final.order.assign(outcomes.size(), 0);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const std::string where = fmt::format("$.final_ranking.alternatives[{}]", i);
    auto& o = s.final.outcomes[i];
    o.position = as<int>(field(outcomes[i], "position", where), where + ".position");
    o.modal_score = as<int>(field(outcomes[i], "modal_score", where), where + ".modal_score");
    o.mean_score = as<double>(field(outcomes[i], "mean_score", where), where + ".mean_score");
    o.mean_closeness = as<double>(field(outcomes[i], "mean_closeness", where), where + ".mean_closeness");
    o.histogram =
        as<std::vector<std::size_t>>(field(outcomes[i], "score_histogram", where), where + ".score_histogram");
    if (o.position < 1 || static_cast<std::size_t>(o.position) > outcomes.size()) {
      throw InputError(fmt::format("summary: {}.position out of range", where));
    }
    s.final.order[static_cast<std::size_t>(o.position - 1)] = i;
  }
  return s;
}

void emit_tables(const RunReport& report, const std::filesystem::path& out_dir) {
  const auto ids = criterion_ids(report.matrix);
  const auto& alts = report.matrix.alternatives;
  const std::array<std::pair<const char*, std::string>, 7> files = {{
      {"weights.csv", weights_csv(report.weight_sets, report.bounds, ids, Precision::full)},
      {"weights_3dp.csv", weights_csv(report.weight_sets, report.bounds, ids, Precision::display)},
      {"rwm.csv", rwm_csv(report.samples, ids, Precision::full)},
      {"rwm_3dp.csv", rwm_csv(report.samples, ids, Precision::display)},
      {"ranks.csv", ranks_csv(report.rank_matrix, alts)},
      {"closeness.csv", closeness_csv(report.closeness_log, alts)},
      {"summary.json", summary_json(report)},
  }};
  detail::ensure_directory(out_dir);
  for (const auto& [name, content] : files) detail::write_file(out_dir / name, content);
}

ChartData chart_data(const RunReport& report) {
  return ChartData{report.matrix.alternatives, criterion_ids(report.matrix), report.bounds, report.samples.rows,
                   report.rank_matrix,         report.closeness_log,         report.final};
}

ChartData load_chart_data(const std::filesystem::path& summary_or_dir) {
  const std::filesystem::path dir =
      std::filesystem::is_directory(summary_or_dir) ? summary_or_dir : summary_or_dir.parent_path();
  const std::filesystem::path summary_path =
      std::filesystem::is_directory(summary_or_dir) ? dir / "summary.json" : summary_or_dir;
  const RunSummary summary = parse_summary(detail::read_file(summary_path));

  ChartData data;
  data.alternatives = summary.alternatives;
  for (const auto& c : summary.criteria) data.criteria.push_back(c.id);
  data.bounds = summary.bounds;
  data.final = summary.final;
  data.weight_samples = read_real_table(dir / "rwm.csv", data.criteria.size());
  data.closeness_log = read_real_table(dir / "closeness.csv", data.alternatives.size());

  const Grid<double> ranks = read_real_table(dir / "ranks.csv", data.alternatives.size());
  Grid<int> int_ranks(ranks.rows(), ranks.cols());
  for (std::size_t i = 0; i < ranks.rows(); ++i) {
    for (std::size_t j = 0; j < ranks.cols(); ++j) int_ranks(i, j) = static_cast<int>(ranks(i, j));
  }
  data.rank_matrix = rank_matrix_from_ranks(int_ranks);
  return data;
}

}  // namespace ectopsis
