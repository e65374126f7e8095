// SPDX-License-Identifier: MIT
#include "isocone/report.hpp"

#include <json.hpp>

#include <stdexcept>

namespace isocone {

namespace {

bool needs_quoting(const std::string& cell) {
  return cell.find_first_of(",\"\r\n") != std::string::npos;
}

std::string csv_escape(const std::string& cell) {
  if (!needs_quoting(cell)) {
    return cell;
  }
  std::string out = "\"";
  for (const char c : cell) {
    if (c == '"') {
      out += "\"\"";
    } else {
      out += c;
    }
  }
  out += '"';
  return out;
}

void append_csv_row(std::string& out, const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += csv_escape(cells[i]);
  }
  out += '\n';
}

long long parse_ll(const std::string& text) {
  size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer, got '" + text + "'");
  }
  if (used != text.size()) {
    throw std::invalid_argument("expected an integer, got '" + text + "'");
  }
  return value;
}

}  // namespace

Table::Table(std::vector<std::string> header) : columns(std::move(header)) {
  if (columns.empty()) {
    throw std::invalid_argument("a table needs at least one column");
  }
}

void Table::append_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("row arity " + std::to_string(row.size()) +
                                " does not match header arity " + std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string to_csv(const Table& table) {
  std::string out;
  append_csv_row(out, table.columns);
  for (const auto& row : table.rows) {
    append_csv_row(out, row);
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (size_t i = 0; i < table.columns.size(); ++i) {
      obj[table.columns[i]] = row[i];
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

std::vector<long long> parse_range(const std::string& text) {
  const size_t dots = text.find("..");
  if (dots == std::string::npos) {
    return {parse_ll(text)};
  }
  const long long lo = parse_ll(text.substr(0, dots));
  const long long hi = parse_ll(text.substr(dots + 2));
  std::vector<long long> out;
  for (long long v = lo; v <= hi; ++v) {
    out.push_back(v);
  }
  return out;
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  size_t start = 0;
  while (start <= text.size()) {
    if (text.empty()) {
      break;
    }
    const size_t comma = text.find(',', start);
    const std::string part =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    const auto range = parse_range(part);
    out.insert(out.end(), range.begin(), range.end());
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace isocone
