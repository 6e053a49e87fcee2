#pragma once

// Problem files.
//
// CSV layout (UTF-8, ',' separated, '.' decimal point):
//
//   alternative,C1,C2,...,Cn       <- corner cell, then criterion ids
//   direction,max,min,...,max      <- corner cell, then max/min per criterion
//   a1,0.315,0.141,...,0.739       <- label, then n values
//
// Blank lines and lines starting with '#' are ignored; row numbers in error
// messages count physical lines from 1.
//
// JSON layout:
//
//   { "criteria": [ {"id": "C1", "label": "...", "direction": "max"}, ... ],
//     "alternatives": ["a1", ...],
//     "values": [[...], ...],
//     "custom_sets": [[...]],       // optional
//     "iterations": 10000,          // optional
//     "seed": 42 }                  // optional

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ectopsis/model.hpp"

namespace ectopsis {

enum class InputFormat { csv, json };

/// "csv" or "json", case-insensitive.
std::optional<InputFormat> parse_input_format(std::string_view token);

/// ".json" selects JSON, anything else CSV.
InputFormat format_for_path(const std::filesystem::path& path);

/// "max"/"benefit" or "min"/"cost", case-insensitive.
std::optional<Direction> parse_direction(std::string_view token);

/// Comma-separated reals such as "0.1,0.2,0.7". Throws InputError naming the
/// offending position.
std::vector<double> parse_weight_list(std::string_view text);

/// Parses and validates. Throws InputError (a ValidationError when several
/// problems are found) with row/column or field coordinates.
Problem parse_problem(std::istream& in, InputFormat format);
Problem parse_problem(std::string_view text, InputFormat format);

/// Throws InputError("cannot open <path>") when the file is unreadable.
Problem parse_problem_file(const std::filesystem::path& path, std::optional<InputFormat> format = std::nullopt);

/// CSV rendering of a matrix in the layout above (full precision).
std::string to_csv(const DecisionMatrix& matrix);

}  // namespace ectopsis
