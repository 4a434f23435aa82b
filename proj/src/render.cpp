#include "quotcount/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace quotcount {

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format: " + name);
}

namespace {

void check_shape(const SeriesDoc& doc) {
  if (doc.labels.size() != doc.columns.size())
    throw std::invalid_argument("one label per column required");
  for (const auto& column : doc.columns)
    if (column.size() != doc.row_index.size())
      throw std::invalid_argument("column length must match the row index");
}

std::string render_table(const SeriesDoc& doc) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"n"};
  head.insert(head.end(), doc.labels.begin(), doc.labels.end());
  grid.push_back(std::move(head));
  for (std::size_t r = 0; r < doc.row_index.size(); ++r) {
    std::vector<std::string> row{std::to_string(doc.row_index[r])};
    for (const auto& column : doc.columns) row.push_back(column[r].get_str());
    grid.push_back(std::move(row));
  }
  std::vector<std::size_t> width(grid.front().size(), 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::setw(static_cast<int>(width[c])) << row[c];
    }
    out << '\n';
  }
  if (doc.verdict) out << "verdict: " << (*doc.verdict ? "true" : "false") << '\n';
  return out.str();
}

std::string render_json(const SeriesDoc& doc) {
  nlohmann::ordered_json root;
  root["tool"] = doc.tool;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : doc.params) {
    if (const long long* number = std::get_if<long long>(&value))
      params[key] = *number;
    else
      params[key] = std::get<std::string>(value);
  }
  root["params"] = std::move(params);
  root["labels"] = doc.labels;
  nlohmann::ordered_json columns = nlohmann::ordered_json::array();
  for (const auto& column : doc.columns) {
    nlohmann::ordered_json strings = nlohmann::ordered_json::array();
    for (const mpz_class& value : column) strings.push_back(value.get_str());
    columns.push_back(std::move(strings));
  }
  root["coefficients"] = std::move(columns);
  if (doc.verdict)
    root["verdict"] = *doc.verdict;
  else
    root["verdict"] = nullptr;
  return root.dump(2) + "\n";
}

std::string render_csv(const SeriesDoc& doc) {
  std::ostringstream out;
  out << 'n';
  for (const std::string& label : doc.labels) out << ',' << label;
  out << '\n';
  for (std::size_t r = 0; r < doc.row_index.size(); ++r) {
    out << doc.row_index[r];
    for (const auto& column : doc.columns) out << ',' << column[r].get_str();
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string render(const SeriesDoc& doc, OutputFormat format) {
  check_shape(doc);
  switch (format) {
    case OutputFormat::table:
      return render_table(doc);
    case OutputFormat::json:
      return render_json(doc);
    case OutputFormat::csv:
      return render_csv(doc);
  }
  throw std::logic_error("unreachable");
}

}  // namespace quotcount
