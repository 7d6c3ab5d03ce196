// Copyright 2026 The locfree Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Tabular output shared by the CLI and the report bundle: CSV, JSON or an
// aligned text table. Exact integers are written as plain decimal strings;
// reals with 12 significant digits.

#ifndef LOCFREE_TABLE_HPP
#define LOCFREE_TABLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "locfree/bigint.hpp"

namespace locfree {

enum class Format { Csv, Json, Table };

inline Format parse_format(std::string_view s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "table") return Format::Table;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

struct Cell {
  enum class Kind { Text, Integer, Real, Boolean, Empty };
  Kind kind = Kind::Empty;
  std::string text;

  Cell() = default;
  Cell(const char* s) : kind(Kind::Text), text(s) {}
  Cell(std::string s) : kind(Kind::Text), text(std::move(s)) {}
  Cell(std::string_view s) : kind(Kind::Text), text(s) {}
  Cell(const BigInt& v) : kind(Kind::Integer), text(v.str()) {}
  Cell(int v) : kind(Kind::Integer), text(std::to_string(v)) {}
  Cell(long v) : kind(Kind::Integer), text(std::to_string(v)) {}
  Cell(long long v) : kind(Kind::Integer), text(std::to_string(v)) {}
  Cell(unsigned long v) : kind(Kind::Integer), text(std::to_string(v)) {}
  Cell(unsigned long long v) : kind(Kind::Integer), text(std::to_string(v)) {}
  Cell(bool v) : kind(Kind::Boolean), text(v ? "true" : "false") {}
  Cell(double v) : kind(Kind::Real), text(format_real(v)) {}

  static std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
  }
};

class Table {
 public:
  Table() = default;
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<Cell> row) {
    if (row.size() != header_.size()) throw std::logic_error("row width does not match header");
    rows_.push_back(std::move(row));
  }

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }

  std::string render(Format f) const {
    switch (f) {
      case Format::Csv: return csv();
      case Format::Json: return json();
      case Format::Table: return aligned();
    }
    return {};
  }

  std::string csv() const {
    std::string out;
    append_csv_line(out, header_);
    for (const auto& row : rows_) {
      std::vector<std::string> fields;
      for (const auto& c : row) fields.push_back(c.text);
      append_csv_line(out, fields);
    }
    return out;
  }

  std::string json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t k = 0; k < row.size(); ++k) obj[header_[k]] = to_json(row[k]);
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }

  std::string aligned() const {
    std::vector<std::size_t> width(header_.size());
    for (std::size_t k = 0; k < header_.size(); ++k) width[k] = header_[k].size();
    for (const auto& row : rows_)
      for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].text.size());
    std::ostringstream os;
    auto line = [&](auto get) {
      for (std::size_t k = 0; k < width.size(); ++k) {
        std::string s = get(k);
        os << (k ? "  " : "") << s << std::string(width[k] - s.size(), ' ');
      }
      os << '\n';
    };
    line([&](std::size_t k) { return header_[k]; });
    line([&](std::size_t k) { return std::string(width[k], '-'); });
    for (const auto& row : rows_) line([&](std::size_t k) { return row[k].text; });
    return os.str();
  }

 private:
  static void append_csv_line(std::string& out, const std::vector<std::string>& fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) {
      if (k) out += ',';
      const auto& f = fields[k];
      if (f.find_first_of(",\"\n") != std::string::npos) {
        out += '"';
        for (char ch : f) {
          if (ch == '"') out += '"';
          out += ch;
        }
        out += '"';
      } else {
        out += f;
      }
    }
    out += '\n';
  }

  static nlohmann::ordered_json to_json(const Cell& c) {
    switch (c.kind) {
      case Cell::Kind::Empty: return nullptr;
      case Cell::Kind::Boolean: return c.text == "true";
      case Cell::Kind::Text: return c.text;
      case Cell::Kind::Integer: {
        // Beyond 64 bits the value stays a decimal string.
        if (c.text.size() <= 18) return std::stoll(c.text);
        return c.text;
      }
      case Cell::Kind::Real: {
        if (c.text == "nan" || c.text == "inf" || c.text == "-inf") return nullptr;
        return std::stod(c.text);
      }
    }
    return nullptr;
  }

  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace locfree

#endif  // LOCFREE_TABLE_HPP
