// SPDX-License-Identifier: MIT
/**
 * @file report.hpp
 * @brief Machine-readable output plumbing shared by the command-line tool:
 *        a string table with a fixed header, RFC-4180-style CSV rendering,
 *        a JSON rendering that mirrors the CSV cells exactly, and the
 *        inclusive range / list syntax used by batch flags.
 *
 * Determinism contract: rendering is a pure function of the table, rows are
 * emitted in insertion order, and all numeric content is formatted by the
 * producer (cells are opaque strings here), so identical tables give
 * byte-identical output.
 */
#pragma once

#include <string>
#include <vector>

namespace isocone {

/**
 * @brief A rectangular table of string cells under a fixed header.
 *
 * append_row validates the arity; renderers never reorder anything.
 */
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  explicit Table(std::vector<std::string> header);
  void append_row(std::vector<std::string> row);
};

/**
 * @brief CSV rendering: header row first, LF line endings, RFC-4180-style
 *        quoting (a cell is quoted when it contains a comma, a double
 *        quote, or a line break; embedded quotes are doubled).
 */
[[nodiscard]] std::string to_csv(const Table& table);

/**
 * @brief JSON rendering: an array of row objects whose keys are the column
 *        names in order and whose values are the cell strings verbatim, so
 *        the JSON mirrors the CSV fields exactly.  Two-space indentation,
 *        trailing newline.
 */
[[nodiscard]] std::string to_json(const Table& table);

/**
 * @brief Inclusive integer range "a..b" (or a single integer "a").
 *
 * b < a yields the empty range; malformed syntax throws
 * std::invalid_argument.
 */
[[nodiscard]] std::vector<long long> parse_range(const std::string& text);

/**
 * @brief Comma-separated integers and ranges: "3,5", "1..4", "1..2,9".
 *
 * The empty string is the empty list.  Duplicates are kept; order is as
 * written.
 */
[[nodiscard]] std::vector<long long> parse_int_list(const std::string& text);

}  // namespace isocone
