#include "table.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace horikawa::cli {

namespace {

constexpr const char* kEmptySign = "\xE2\x88\x85";  // U+2205
constexpr const char* kCross = "\xE2\x9C\x97";      // U+2717
constexpr const char* kNonReduced = "non-reduced";

// Display width of UTF-8 text: count lead bytes only.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Cell Cell::num(const Integer& v) {
  Cell c;
  c.kind = Kind::Number;
  c.number = v;
  return c;
}

Cell Cell::str(std::string s) {
  Cell c;
  c.kind = Kind::Text;
  c.text = std::move(s);
  return c;
}

Cell Cell::boolean(bool b) {
  Cell c;
  c.kind = Kind::Flag;
  c.flag = b;
  return c;
}

Cell Cell::empty() { return Cell{}; }

Cell Cell::undefined() {
  Cell c;
  c.kind = Kind::Undefined;
  return c;
}

Cell Cell::non_reduced() {
  Cell c;
  c.kind = Kind::NonReduced;
  return c;
}

bool operator==(const Cell& a, const Cell& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Cell::Kind::Number: return a.number == b.number;
    case Cell::Kind::Text: return a.text == b.text;
    case Cell::Kind::Flag: return a.flag == b.flag;
    default: return true;
  }
}

std::string render_cell(const Cell& c, const RenderOptions& opts) {
  switch (c.kind) {
    case Cell::Kind::Number: return to_string(c.number);
    case Cell::Kind::Text: return c.text;
    case Cell::Kind::Flag: return c.flag ? "yes" : "no";
    case Cell::Kind::Empty: return opts.empty_as_minus_one ? "-1" : kEmptySign;
    case Cell::Kind::Undefined: return kCross;
    case Cell::Kind::NonReduced: return kNonReduced;
  }
  return "";
}

Json cell_to_json(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::Number:
      if (c.number.fits_slong_p()) return Json(c.number.get_si());
      return Json{{"bigint", to_string(c.number)}};
    case Cell::Kind::Text: return Json(c.text);
    case Cell::Kind::Flag: return Json(c.flag);
    case Cell::Kind::Empty: return Json(nullptr);
    case Cell::Kind::Undefined: return Json(kCross);
    case Cell::Kind::NonReduced: return Json(kNonReduced);
  }
  return Json(nullptr);
}

Cell cell_from_json(const Json& j) {
  if (j.is_null()) return Cell::empty();
  if (j.is_boolean()) return Cell::boolean(j.get<bool>());
  if (j.is_number_integer()) return Cell::num(Integer(j.get<long>()));
  if (j.is_object() && j.contains("bigint")) return Cell::num(Integer(j.at("bigint").get<std::string>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == kCross) return Cell::undefined();
    if (s == kNonReduced) return Cell::non_reduced();
    return Cell::str(s);
  }
  throw std::invalid_argument("unsupported JSON cell: " + j.dump());
}

Json row_to_json(const Table& t, const TableRow& r) {
  Json j = Json::object();
  for (std::size_t k = 0; k < t.key_columns.size(); ++k) j[t.key_columns[k]] = cell_to_json(r.keys.at(k));
  j["regime"] = r.regime;
  Json values = Json::object();
  for (std::size_t k = 0; k < t.value_columns.size(); ++k) values[t.value_columns[k]] = cell_to_json(r.values.at(k));
  j["values"] = std::move(values);
  j["anchor"] = r.anchor;
  return j;
}

TableRow row_from_json(const Table& shape, const Json& j) {
  TableRow r;
  for (const auto& k : shape.key_columns) r.keys.push_back(cell_from_json(j.at(k)));
  r.regime = j.at("regime").get<std::string>();
  const Json& values = j.at("values");
  for (const auto& v : shape.value_columns) r.values.push_back(cell_from_json(values.at(v)));
  r.anchor = j.at("anchor").get<std::string>();
  return r;
}

Json table_to_json(const Table& t) {
  Json j = Json::object();
  j["table"] = t.id;
  j["symbolic"] = t.symbolic;
  j["key_columns"] = t.key_columns;
  j["value_columns"] = t.value_columns;
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(row_to_json(t, r));
  j["rows"] = std::move(rows);
  if (!t.note.empty()) j["note"] = t.note;
  return j;
}

Table table_from_json(const Json& j) {
  try {
    Table t;
    t.id = j.at("table").get<std::string>();
    t.symbolic = j.at("symbolic").get<bool>();
    t.key_columns = j.at("key_columns").get<std::vector<std::string>>();
    t.value_columns = j.at("value_columns").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows")) t.rows.push_back(row_from_json(t, r));
    if (j.contains("note")) t.note = j.at("note").get<std::string>();
    return t;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed table document: ") + e.what());
  }
}

void render(std::ostream& os, const Table& t, Format f, const RenderOptions& opts) {
  if (f == Format::Json) {
    os << table_to_json(t).dump(2) << '\n';
    return;
  }
  std::vector<std::string> header = t.key_columns;
  header.push_back("regime");
  header.insert(header.end(), t.value_columns.begin(), t.value_columns.end());
  header.push_back("anchor");

  std::vector<std::vector<std::string>> lines;
  for (const auto& r : t.rows) {
    std::vector<std::string> line;
    for (const auto& c : r.keys) line.push_back(render_cell(c, opts));
    line.push_back(r.regime);
    for (const auto& c : r.values) line.push_back(render_cell(c, opts));
    line.push_back(r.anchor);
    lines.push_back(std::move(line));
  }

  if (f == Format::Csv) {
    auto emit = [&](const std::vector<std::string>& fields) {
      for (std::size_t k = 0; k < fields.size(); ++k) os << (k ? "," : "") << csv_field(fields[k]);
      os << '\n';
    };
    emit(header);
    for (const auto& l : lines) emit(l);
    return;
  }

  std::vector<std::size_t> w(header.size());
  for (std::size_t k = 0; k < header.size(); ++k) w[k] = width(header[k]);
  for (const auto& l : lines)
    for (std::size_t k = 0; k < l.size(); ++k) w[k] = std::max(w[k], width(l[k]));
  auto emit = [&](const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t k = 0; k < fields.size(); ++k) {
      line += fields[k];
      if (k + 1 < fields.size()) line += std::string(w[k] - width(fields[k]) + 2, ' ');
    }
    os << line << '\n';
  };
  os << "# " << t.id << (t.symbolic ? " (closed forms)" : "") << '\n';
  emit(header);
  for (const auto& l : lines) emit(l);
  if (!t.note.empty()) os << "# " << t.note << '\n';
}

}  // namespace horikawa::cli
