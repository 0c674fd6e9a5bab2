#include "hzeta/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

#include "hzeta/errors.hpp"

namespace hzeta {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + "\"";
}

std::string render(const Cell& cell, Format format) {
  if (const auto* d = std::get_if<double>(&cell)) {
    if (format == Format::json && !std::isfinite(*d)) {
      return "null";
    }
    return format_double(*d);
  }
  if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    return std::to_string(*i);
  }
  const auto& s = std::get<std::string>(cell);
  switch (format) {
    case Format::json:
      return nlohmann::json(s).dump();
    case Format::csv:
      return csv_escape(s);
    case Format::text:
      break;
  }
  return s;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw DomainError("format must be one of text, csv, json");
}

void emit_table(const Table& table, Format format, std::ostream& out) {
  switch (format) {
    case Format::csv: {
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << csv_escape(table.columns[c]);
      }
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          out << (c ? "," : "") << render(row[c], format);
        }
        out << '\n';
      }
      return;
    }
    case Format::json: {
      out << '[';
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << (r ? ",\n " : "\n ") << '{';
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
          out << (c ? ", " : "") << nlohmann::json(table.columns[c]).dump() << ": "
              << render(table.rows[r][c], format);
        }
        out << '}';
      }
      out << (table.rows.empty() ? "]\n" : "\n]\n");
      return;
    }
    case Format::text: {
      std::vector<std::vector<std::string>> cells;
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        width[c] = table.columns[c].size();
      }
      for (const auto& row : table.rows) {
        auto& line = cells.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
          line.push_back(render(row[c], format));
          width[c] = std::max(width[c], line.back().size());
        }
      }
      auto print = [&](const std::vector<std::string>& line) {
        for (std::size_t c = 0; c < line.size(); ++c) {
          out << (c ? "  " : "") << line[c];
          if (c + 1 < line.size()) {
            out << std::string(width[c] - line[c].size(), ' ');
          }
        }
        out << '\n';
      };
      print(table.columns);
      for (const auto& line : cells) {
        print(line);
      }
      return;
    }
  }
}

}  // namespace hzeta
