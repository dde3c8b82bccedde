#pragma once

// Deterministic JSON and CSV emission: insertion-ordered keys, round-trip
// numbers, LF line endings, non-finite numbers as strings.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace fucik::cli {

inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Json = nlohmann::ordered_json;

/// Replaces non-finite numbers by their text, which JSON cannot represent.
inline void stringify_nonfinite(Json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) j = format_number(v);
  } else if (j.is_structured()) {
    for (auto& child : j) stringify_nonfinite(child);
  }
}

/// Text of a scalar JSON value for a CSV cell.
inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return format_number(j.get<double>());
  return j.dump();
}

/// A CSV cell: integers and strings verbatim, doubles at 17 digits.
using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::string csv() const {
    std::string out;
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (k) out += ',';
      out += columns[k];
    }
    out += '\n';
    for (const auto& row : rows) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (k) out += ',';
        out += cell_text(row[k]);
      }
      out += '\n';
    }
    return out;
  }

  Json json() const {
    Json body = Json::array();
    for (const auto& row : rows) {
      Json r = Json::array();
      for (const auto& cell : row) std::visit([&](const auto& v) { r.push_back(v); }, cell);
      body.push_back(std::move(r));
    }
    return Json{{"columns", columns}, {"rows", std::move(body)}};
  }

  static std::string cell_text(const Cell& c) {
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    return std::get<std::string>(c);
  }
};

/// Writes to stdout, or to `path` through a temporary file and a rename.
inline void emit(const std::string& payload, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << payload;
    if (!out) throw std::runtime_error("write to " + tmp + " failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace fucik::cli
