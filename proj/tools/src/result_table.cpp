#include "walkmeg/cli/result_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace walkmeg::cli {

namespace {

const char* type_name(ColumnType type) {
  switch (type) {
    case ColumnType::Integer: return "int";
    case ColumnType::Real: return "real";
    case ColumnType::Text: return "text";
  }
  return "?";
}

ColumnType parse_type(const std::string& name) {
  if (name == "int") return ColumnType::Integer;
  if (name == "real") return ColumnType::Real;
  if (name == "text") return ColumnType::Text;
  throw std::runtime_error("unknown column type '" + name + "'");
}

bool matches(const Cell& cell, ColumnType type) {
  switch (type) {
    case ColumnType::Integer: return std::holds_alternative<std::int64_t>(cell);
    case ColumnType::Real: return std::holds_alternative<double>(cell);
    case ColumnType::Text: return std::holds_alternative<std::string>(cell);
  }
  return false;
}

std::string quote_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

Cell parse_cell(const std::string& text, ColumnType type) {
  switch (type) {
    case ColumnType::Integer: return static_cast<std::int64_t>(std::stoll(text));
    case ColumnType::Real: return std::strtod(text.c_str(), nullptr);
    case ColumnType::Text: return text;
  }
  return text;
}

bool same_real(double a, double b) {
  return (std::isnan(a) && std::isnan(b)) || (a == b && std::signbit(a) == std::signbit(b));
}

}  // namespace

ResultTable::ResultTable(std::vector<Column> columns) : columns_(std::move(columns)) {}

void ResultTable::add_row(Row row) {
  if (row.size() != columns_.size()) {
    throw std::invalid_argument("row has " + std::to_string(row.size()) + " cells, table has " +
                                std::to_string(columns_.size()) + " columns");
  }
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!matches(row[i], columns_[i].type)) {
      throw std::invalid_argument("cell type mismatch in column '" + columns_[i].name + "'");
    }
  }
  rows_.push_back(std::move(row));
}

void ResultTable::set_meta(const std::string& key, std::string value) {
  if (key.find(':') != std::string::npos || key.find('\n') != std::string::npos ||
      value.find('\n') != std::string::npos) {
    throw std::invalid_argument("metadata keys may not contain ':' and entries must be single-line");
  }
  for (auto& [k, v] : metadata_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  metadata_.emplace_back(key, std::move(value));
}

std::optional<std::string> ResultTable::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::size_t ResultTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name == name) return i;
  }
  throw std::out_of_range("no column named '" + name + "'");
}

double ResultTable::real_at(std::size_t row, const std::string& column) const {
  return std::get<double>(rows_.at(row).at(column_index(column)));
}

std::int64_t ResultTable::int_at(std::size_t row, const std::string& column) const {
  return std::get<std::int64_t>(rows_.at(row).at(column_index(column)));
}

const std::string& ResultTable::text_at(std::size_t row, const std::string& column) const {
  return std::get<std::string>(rows_.at(row).at(column_index(column)));
}

bool operator==(const ResultTable& a, const ResultTable& b) {
  if (a.columns_ != b.columns_ || a.metadata_ != b.metadata_ || a.rows_.size() != b.rows_.size()) {
    return false;
  }
  for (std::size_t r = 0; r < a.rows_.size(); ++r) {
    for (std::size_t c = 0; c < a.columns_.size(); ++c) {
      const Cell& x = a.rows_[r][c];
      const Cell& y = b.rows_[r][c];
      if (x.index() != y.index()) return false;
      if (const double* dx = std::get_if<double>(&x)) {
        if (!same_real(*dx, std::get<double>(y))) return false;
      } else if (x != y) {
        return false;
      }
    }
  }
  return true;
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(const ResultTable& table, std::ostream& out) {
  for (const auto& [k, v] : table.metadata()) out << "# " << k << ": " << v << '\n';
  out << "# types: ";
  for (std::size_t i = 0; i < table.columns().size(); ++i) {
    out << (i ? "," : "") << type_name(table.columns()[i].type);
  }
  out << '\n';
  for (std::size_t i = 0; i < table.columns().size(); ++i) {
    out << (i ? "," : "") << quote_text(table.columns()[i].name);
  }
  out << '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (const auto* n = std::get_if<std::int64_t>(&row[i])) {
        out << *n;
      } else if (const auto* d = std::get_if<double>(&row[i])) {
        out << format_real(*d);
      } else {
        out << quote_text(std::get<std::string>(row[i]));
      }
    }
    out << '\n';
  }
}

namespace {

// Reads one CSV record; quoted fields may span lines.
bool read_record(std::istream& in, std::string& record) {
  if (!std::getline(in, record)) return false;
  auto open_quote = [](const std::string& s) { return std::count(s.begin(), s.end(), '"') % 2 == 1; };
  std::string more;
  while (open_quote(record) && std::getline(in, more)) record += "\n" + more;
  return true;
}

}  // namespace

ResultTable read_csv(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<ColumnType> types;
  std::string line;
  while (std::getline(in, line) && line.rfind("# ", 0) == 0) {
    const auto colon = line.find(": ", 2);
    if (colon == std::string::npos) throw std::runtime_error("malformed metadata line: " + line);
    std::string key = line.substr(2, colon - 2);
    std::string value = line.substr(colon + 2);
    if (key == "types") {
      std::istringstream ts(value);
      std::string t;
      while (std::getline(ts, t, ',')) types.push_back(parse_type(t));
    } else {
      metadata.emplace_back(std::move(key), std::move(value));
    }
  }
  const auto names = split_csv_line(line);
  if (names.size() != types.size()) throw std::runtime_error("header and types line disagree");

  std::vector<Column> columns;
  for (std::size_t i = 0; i < names.size(); ++i) columns.push_back({names[i], types[i]});
  ResultTable table(std::move(columns));
  for (auto& [k, v] : metadata) table.set_meta(k, v);

  while (read_record(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != types.size()) throw std::runtime_error("row width differs from header");
    Row row;
    row.reserve(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) row.push_back(parse_cell(fields[i], types[i]));
    table.add_row(std::move(row));
  }
  return table;
}

void write_json(const ResultTable& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : table.metadata()) doc["metadata"][k] = v;
  doc["columns"] = nlohmann::ordered_json::array();
  for (const auto& c : table.columns()) doc["columns"].push_back({{"name", c.name}, {"type", type_name(c.type)}});
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows()) {
    auto jr = nlohmann::ordered_json::array();
    for (const auto& cell : row) {
      std::visit([&](const auto& v) { jr.push_back(v); }, cell);
    }
    doc["rows"].push_back(std::move(jr));
  }
  out << doc.dump(1) << '\n';
}

ResultTable read_json(std::istream& in) {
  const auto doc = nlohmann::ordered_json::parse(in);
  std::vector<Column> columns;
  for (const auto& c : doc.at("columns")) {
    columns.push_back({c.at("name").get<std::string>(), parse_type(c.at("type").get<std::string>())});
  }
  ResultTable table(columns);
  for (const auto& [k, v] : doc.at("metadata").items()) table.set_meta(k, v.get<std::string>());
  for (const auto& jr : doc.at("rows")) {
    Row row;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto& v = jr.at(i);
      switch (columns[i].type) {
        case ColumnType::Integer: row.emplace_back(v.get<std::int64_t>()); break;
        case ColumnType::Real: row.emplace_back(v.is_null() ? std::nan("") : v.get<double>()); break;
        case ColumnType::Text: row.emplace_back(v.get<std::string>()); break;
      }
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace walkmeg::cli
