#include "table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace glf::cli {

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw ParameterError("table row width does not match the header");
  rows.push_back(std::move(row));
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  throw ParameterError("unknown format '" + s + "'");
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string format_complex(Complex z) {
  std::string im = format_real(z.imag());
  if (im.front() != '-') im = "+" + im;
  return format_real(z.real()) + im + "i";
}

namespace {

std::string to_string(const Cell& c) {
  struct V {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double x) const { return format_real(x); }
    std::string operator()(std::int64_t n) const { return std::to_string(n); }
    std::string operator()(Complex z) const { return format_complex(z); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(V{}, c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Non-finite doubles have no JSON literal; they are written as strings.
nlohmann::json real_json(double x) {
  if (std::isfinite(x)) return x;
  return format_real(x);
}

}  // namespace

nlohmann::json to_json(const Cell& c) {
  struct V {
    nlohmann::json operator()(const std::string& s) const { return s; }
    nlohmann::json operator()(double x) const { return real_json(x); }
    nlohmann::json operator()(std::int64_t n) const { return n; }
    nlohmann::json operator()(Complex z) const { return {{"re", real_json(z.real())}, {"im", real_json(z.imag())}}; }
    nlohmann::json operator()(bool b) const { return b; }
  };
  return std::visit(V{}, c);
}

nlohmann::json to_json(const Table& t) {
  auto rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < r.size(); ++i) obj[t.columns[i]] = to_json(r[i]);
    rows.push_back(std::move(obj));
  }
  return {{"columns", t.columns}, {"rows", rows}};
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_escape(t.columns[i]);
  os << "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_escape(to_string(r[i]));
    os << "\n";
  }
}

void write_text(std::ostream& os, const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& r : t.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < r.size(); ++i) {
      line.push_back(to_string(r[i]));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << line[i];
      if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
    }
    os << "\n";
  };
  emit(t.columns);
  for (const auto& line : cells) emit(line);
}

}  // namespace glf::cli
