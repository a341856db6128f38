#pragma once

// Table model shared by every `tables` output, with text / CSV / JSON
// renderers. JSON rendering is lossless: table_from_json inverts it.

#include <horikawa/exact.hpp>

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace horikawa::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

struct Cell {
  enum class Kind { Number, Text, Flag, Empty, Undefined, NonReduced };
  Kind kind = Kind::Empty;
  Integer number;
  std::string text;
  bool flag = false;

  static Cell num(const Integer& v);
  static Cell str(std::string s);
  static Cell boolean(bool b);
  static Cell empty();
  static Cell undefined();
  static Cell non_reduced();

  friend bool operator==(const Cell& a, const Cell& b);
};

struct RenderOptions {
  bool empty_as_minus_one = false;  // print empty strata as -1 instead of the empty-set sign
};

std::string render_cell(const Cell& c, const RenderOptions& opts);
Json cell_to_json(const Cell& c);
Cell cell_from_json(const Json& j);

struct TableRow {
  std::vector<Cell> keys;
  std::string regime;
  std::vector<Cell> values;
  std::string anchor;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct Table {
  std::string id;
  std::vector<std::string> key_columns;
  std::vector<std::string> value_columns;
  std::vector<TableRow> rows;
  bool symbolic = false;
  std::string note;
  friend bool operator==(const Table&, const Table&) = default;
};

Json row_to_json(const Table& t, const TableRow& r);
TableRow row_from_json(const Table& shape, const Json& j);
Json table_to_json(const Table& t);
/// Throws std::invalid_argument on a malformed document.
Table table_from_json(const Json& j);

void render(std::ostream& os, const Table& t, Format f, const RenderOptions& opts);

}  // namespace horikawa::cli
