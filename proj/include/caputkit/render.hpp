#pragma once

#include <string>
#include <vector>

#include "caputkit/induced.hpp"
#include "caputkit/partition.hpp"

namespace caputkit {

enum class OutputFormat { text, csv, json };

// Parses "text" / "csv" / "json"; throws std::invalid_argument otherwise.
OutputFormat parse_output_format(const std::string& name);

// text: one partition per line in exponent notation ("-" for the empty one).
// csv:  raw parts per record, comma-separated.
// json: array of arrays of parts, e.g. [[3,2],[3,1,1]].
std::string format_partitions(const std::vector<Partition>& partitions,
                              OutputFormat format);

// text: header row of class labels, then one row per partition label
//       followed by its values, columns aligned.
// csv:  "lambda" + class labels header, then label,value,... records; cells
//       containing commas are double-quoted.
// json: {"n":..,"classes":[[...],...],"rows":[{"lambda":[...],
//       "values":["...",...]},...]} — classes as partition part-lists in
//       column order, values as decimal strings, stable key order, compact.
std::string format_matrix(const CharacterMatrix& matrix, OutputFormat format);

}  // namespace caputkit
