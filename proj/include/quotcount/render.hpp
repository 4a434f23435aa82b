#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace quotcount {

enum class OutputFormat { table, json, csv };

/// Maps "table"/"json"/"csv" to the enum; throws std::invalid_argument
/// on anything else.
OutputFormat parse_format(const std::string& name);

using ParamValue = std::variant<long long, std::string>;

/// One rendered result: a set of labelled integer columns indexed by n,
/// plus the parameters that produced it and an optional verdict.  The same
/// document drives all three output formats.
struct SeriesDoc {
  std::string tool;
  std::vector<std::pair<std::string, ParamValue>> params;
  std::vector<std::string> labels;
  std::vector<std::vector<mpz_class>> columns;
  std::vector<long long> row_index;
  std::optional<bool> verdict;
};

/// Renders the document.  Table output is aligned text with a trailing
/// "verdict:" line when one is set; JSON follows the fixed schema
/// {tool, params, labels, coefficients, verdict} with coefficients as
/// decimal strings; CSV has an "n" column followed by one column per
/// label.  All formats are byte-deterministic.
std::string render(const SeriesDoc& doc, OutputFormat format);

}  // namespace quotcount
