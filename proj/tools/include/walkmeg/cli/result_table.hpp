#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace walkmeg::cli {

enum class ColumnType { Integer, Real, Text };

struct Column {
  std::string name;
  ColumnType type = ColumnType::Real;

  friend bool operator==(const Column&, const Column&) = default;
};

using Cell = std::variant<std::int64_t, double, std::string>;
using Row = std::vector<Cell>;

/// Typed table with an ordered key/value metadata header. Every row has exactly
/// one cell per column, of the column's type.
class ResultTable {
 public:
  ResultTable() = default;
  explicit ResultTable(std::vector<Column> columns);

  void add_row(Row row);
  void set_meta(const std::string& key, std::string value);
  std::optional<std::string> meta(const std::string& key) const;

  const std::vector<Column>& columns() const { return columns_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& metadata() const { return metadata_; }

  std::size_t column_index(const std::string& name) const;
  double real_at(std::size_t row, const std::string& column) const;
  std::int64_t int_at(std::size_t row, const std::string& column) const;
  const std::string& text_at(std::size_t row, const std::string& column) const;

  friend bool operator==(const ResultTable&, const ResultTable&);

 private:
  std::vector<Column> columns_;
  std::vector<Row> rows_;
  std::vector<std::pair<std::string, std::string>> metadata_;
};

/// printf("%.17g"); round-trips every finite double.
std::string format_real(double value);

/// CSV layout:
///   # key: value          (one line per metadata entry, in insertion order)
///   # types: int,real,text
///   name1,name2,...
///   rows...
/// Text cells containing ',' or '"' are double-quoted with "" escapes.
void write_csv(const ResultTable& table, std::ostream& out);
ResultTable read_csv(std::istream& in);

/// {"metadata": {...}, "columns": [{"name", "type"}], "rows": [[...]]}
void write_json(const ResultTable& table, std::ostream& out);
ResultTable read_json(std::istream& in);

}  // namespace walkmeg::cli
