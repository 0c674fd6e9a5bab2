#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hzeta {

enum class Format { text, csv, json };

// Throws DomainError for anything but "text", "csv", "json".
Format parse_format(std::string_view name);

using Cell = std::variant<double, std::int64_t, std::string>;

// Flat rows under a fixed header. Every row has one cell per column.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// csv:  header line, comma separated, LF endings, doubles as %.17g.
// json: array of flat objects keyed by column name, doubles as %.17g,
//       non-finite doubles as null.
// text: space-aligned columns.
void emit_table(const Table& table, Format format, std::ostream& out);

}  // namespace hzeta
