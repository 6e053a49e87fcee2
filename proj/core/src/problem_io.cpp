#include "ectopsis/problem_io.hpp"

#include <fstream>
#include <istream>
#include <iterator>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "text.hpp"

namespace ectopsis {

namespace {

using detail::parse_double;
using detail::split_cells;
using detail::trim;
using nlohmann::json;

Problem parse_csv(std::string_view text) {
  struct Line {
    std::size_t number;
    std::vector<std::string> cells;
  };
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::string_view body = trim(raw);
    if (!body.empty() && body.front() != '#') lines.push_back({number, split_cells(body)});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (lines.empty()) throw InputError("csv: empty input");
  if (lines.size() < 2) throw InputError("csv: missing direction row after the header");

  std::vector<std::string> errs;
  DecisionMatrix matrix;
  const Line& header = lines[0];
  if (header.cells.size() < 2) {
    throw InputError(fmt::format("row {}: header needs a corner cell followed by criterion ids", header.number));
  }
  const std::size_t n = header.cells.size() - 1;
  for (std::size_t j = 0; j < n; ++j) {
    const std::string& id = header.cells[j + 1];
    matrix.criteria.push_back(CriterionSpec{id, id, Direction::benefit});
  }

  const Line& dirs = lines[1];
  if (dirs.cells.size() != n + 1) {
    errs.push_back(fmt::format("row {}: expected {} directions, got {}", dirs.number, n, dirs.cells.size() - 1));
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      const auto d = parse_direction(dirs.cells[j + 1]);
      if (!d) {
        errs.push_back(fmt::format("row {}, column {}: unknown direction '{}' (expected max or min)", dirs.number,
                                   j + 2, dirs.cells[j + 1]));
      } else {
        matrix.criteria[j].direction = *d;
      }
    }
  }

  std::vector<std::vector<double>> rows;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::size_t got = line.cells.size() - 1;
    if (got != n) {
      errs.push_back(fmt::format("row {}: expected {} values, got {}", line.number, n, got));
      continue;
    }
    std::vector<double> row(n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = parse_double(line.cells[j + 1]);
      if (!v) {
        errs.push_back(fmt::format("row {}, column {}: '{}' is not a number", line.number, j + 2, line.cells[j + 1]));
      } else {
        row[j] = *v;
      }
    }
    matrix.alternatives.push_back(line.cells[0]);
    rows.push_back(std::move(row));
  }
  if (!errs.empty()) {
    if (errs.size() == 1) throw InputError(errs.front());
    throw ValidationError(std::move(errs));
  }
  matrix.values = Grid<double>::from_rows(rows);
  if (rows.empty()) matrix.values = Grid<double>(0, n);
  return validate_problem(matrix, RunConfig{});
}

double json_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(fmt::format("{}: expected a number", where));
  return v.get<double>();
}

std::vector<double> json_number_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(fmt::format("{}: expected an array of numbers", where));
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(json_number(v[k], fmt::format("{}[{}]", where, k)));
  return out;
}

Problem parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("json: parse error at byte {}: {}", e.byte, e.what()));
  } catch (const json::exception& e) {
    throw InputError(fmt::format("json: {}", e.what()));
  }
  if (!doc.is_object()) throw InputError("json: top level must be an object");

  DecisionMatrix matrix;
  RunConfig config;

  if (!doc.contains("criteria") || !doc["criteria"].is_array()) {
    throw InputError("json: 'criteria' must be an array");
  }
  const json& criteria = doc["criteria"];
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    const json& c = criteria[j];
    const std::string where = fmt::format("criteria[{}]", j);
    if (!c.is_object()) throw InputError(fmt::format("{}: expected an object", where));
    if (!c.contains("id") || !c["id"].is_string()) throw InputError(fmt::format("{}.id: expected a string", where));
    if (!c.contains("direction") || !c["direction"].is_string()) {
      throw InputError(fmt::format("{}.direction: expected \"max\" or \"min\"", where));
    }
    CriterionSpec spec;
    spec.id = c["id"].get<std::string>();
    spec.label = c.contains("label") && c["label"].is_string() ? c["label"].get<std::string>() : spec.id;
    const auto token = c["direction"].get<std::string>();
    const auto d = parse_direction(token);
    if (!d) throw InputError(fmt::format("{}.direction: unknown direction '{}'", where, token));
    spec.direction = *d;
    matrix.criteria.push_back(std::move(spec));
  }

  if (!doc.contains("alternatives") || !doc["alternatives"].is_array()) {
    throw InputError("json: 'alternatives' must be an array of strings");
  }
  for (std::size_t i = 0; i < doc["alternatives"].size(); ++i) {
    const json& a = doc["alternatives"][i];
    if (!a.is_string()) throw InputError(fmt::format("alternatives[{}]: expected a string", i));
    matrix.alternatives.push_back(a.get<std::string>());
  }

  if (!doc.contains("values") || !doc["values"].is_array()) throw InputError("json: 'values' must be an array");
  std::vector<std::vector<double>> rows;
  const std::size_t n = matrix.criteria.size();
  for (std::size_t i = 0; i < doc["values"].size(); ++i) {
    auto row = json_number_array(doc["values"][i], fmt::format("values[{}]", i));
    if (row.size() != n) {
      throw InputError(fmt::format("values[{}]: expected {} values, got {}", i, n, row.size()));
    }
    rows.push_back(std::move(row));
  }
  matrix.values = rows.empty() ? Grid<double>(0, n) : Grid<double>::from_rows(rows);

  if (doc.contains("custom_sets")) {
    const json& sets = doc["custom_sets"];
    if (!sets.is_array()) throw InputError("custom_sets: expected an array of arrays");
    for (std::size_t k = 0; k < sets.size(); ++k) {
      config.custom_sets.push_back(json_number_array(sets[k], fmt::format("custom_sets[{}]", k)));
    }
  }
  if (doc.contains("iterations")) {
    const json& t = doc["iterations"];
    if (!t.is_number_unsigned() || t.get<std::uint64_t>() == 0) {
      throw InputError("iterations: expected a positive integer");
    }
    config.iterations = static_cast<std::size_t>(t.get<std::uint64_t>());
  }
  if (doc.contains("seed")) {
    const json& s = doc["seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0)) {
      throw InputError("seed: expected a non-negative integer");
    }
    config.seed = s.get<std::uint64_t>();
  }
  return validate_problem(matrix, config);
}

}  // namespace

std::optional<InputFormat> parse_input_format(std::string_view token) {
  const auto t = detail::lower(trim(token));
  if (t == "csv") return InputFormat::csv;
  if (t == "json") return InputFormat::json;
  return std::nullopt;
}

InputFormat format_for_path(const std::filesystem::path& path) {
  return detail::lower(path.extension().string()) == ".json" ? InputFormat::json : InputFormat::csv;
}

std::optional<Direction> parse_direction(std::string_view token) {
  const auto t = detail::lower(trim(token));
  if (t == "max" || t == "benefit") return Direction::benefit;
  if (t == "min" || t == "cost") return Direction::cost;
  return std::nullopt;
}

std::vector<double> parse_weight_list(std::string_view text) {
  std::vector<double> out;
  const auto cells = split_cells(text);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const auto v = parse_double(cells[k]);
    if (!v) throw InputError(fmt::format("weight {}: '{}' is not a number", k + 1, cells[k]));
    out.push_back(*v);
  }
  return out;
}

Problem parse_problem(std::string_view text, InputFormat format) {
  return format == InputFormat::json ? parse_json(text) : parse_csv(text);
}

Problem parse_problem(std::istream& in, InputFormat format) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_problem(text, format);
}

Problem parse_problem_file(const std::filesystem::path& path, std::optional<InputFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot open {}", path.string()));
  return parse_problem(in, format.value_or(format_for_path(path)));
}

std::string to_csv(const DecisionMatrix& matrix) {
  std::string out = "alternative";
  for (const auto& c : matrix.criteria) out += "," + c.id;
  out += "\ndirection";
  for (const auto& c : matrix.criteria) out += fmt::format(",{}", to_token(c.direction));
  out += '\n';
  for (std::size_t i = 0; i < matrix.alternatives.size(); ++i) {
    out += matrix.alternatives[i];
    for (double v : matrix.values.row(i)) out += "," + detail::full(v);
    out += '\n';
  }
  return out;
}

}  // namespace ectopsis
