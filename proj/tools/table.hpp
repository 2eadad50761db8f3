#pragma once

// Row-oriented result table with CSV, JSON and plain-text renderers.

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "glf/types.hpp"

namespace glf::cli {

using Cell = std::variant<std::string, double, std::int64_t, Complex, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

enum class Format { Csv, Json, Text };

Format parse_format(const std::string& s);

/// 17 significant digits.
std::string format_real(double x);
/// re+imi / re-imi
std::string format_complex(Complex z);

nlohmann::json to_json(const Cell& c);
nlohmann::json to_json(const Table& t);

void write_csv(std::ostream& os, const Table& t);
void write_text(std::ostream& os, const Table& t);

}  // namespace glf::cli
