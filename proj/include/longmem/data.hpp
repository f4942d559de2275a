#pragma once

// CSV ingestion and the bundled datasets. Requires linking OpenSSL's
// libcrypto for the SHA-256 integrity pin.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <openssl/evp.h>

#include "longmem/error.hpp"
#include "longmem/series.hpp"

#ifndef LONGMEM_DEFAULT_DATA_DIR
#define LONGMEM_DEFAULT_DATA_DIR "data"
#endif

namespace longmem {

struct Dataset {
  std::string name;
  std::vector<std::string> column_order;
  std::map<std::string, std::vector<double>> columns;
  std::string source_note;

  std::size_t rows() const {
    return columns.empty() ? 0 : columns.begin()->second.size();
  }

  const std::vector<double> &column(const std::string &c) const {
    const auto it = columns.find(c);
    if (it == columns.end())
      throw missing_column_error("dataset " + name + " has no column '" + c + "'");
    return it->second;
  }

  Series series(const std::string &c) const {
    Series s(column(c), Origin::loaded);
    s.label = name + ":" + c;
    return s;
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(ws);
  s = s.substr(b, e - b + 1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
    s = s.substr(1, s.size() - 2);
  return s;
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(',', start);
    out.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return out;
}

inline double parse_cell(std::string_view cell, std::size_t row, const std::string &col) {
  if (cell.empty())
    throw parse_error("empty cell in column '" + col + "' at row " + std::to_string(row), row);
  if (cell.front() == '+')
    cell.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size())
    throw parse_error("non-numeric cell '" + std::string(cell) + "' in column '" + col +
                          "' at row " + std::to_string(row),
                      row);
  if (!std::isfinite(v))
    throw parse_error("non-finite value in column '" + col + "' at row " +
                          std::to_string(row),
                      row);
  return v;
}

inline std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw io_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad())
    throw io_error("read failed for " + path.string());
  return ss.str();
}

} // namespace detail

// Parses a headed, comma-delimited file into all of its columns. Rows are
// numbered from 1 after the header; a bad cell reports its row.
inline Dataset load_csv_table(const std::filesystem::path &path) {
  const std::string text = detail::read_file(path);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw parse_error(path.string() + ": missing header row", 0);
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0)
    line.erase(0, 3);

  Dataset ds;
  ds.name = path.stem().string();
  for (auto h : detail::split_commas(line)) {
    std::string name(h);
    if (name.empty())
      throw parse_error(path.string() + ": empty column name in header", 0);
    if (ds.columns.count(name))
      throw parse_error(path.string() + ": duplicate column '" + name + "'", 0);
    ds.column_order.push_back(name);
    ds.columns[name];
  }

  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (detail::trim(line).empty() && in.peek() == std::char_traits<char>::eof())
      break; // trailing newline
    const auto cells = detail::split_commas(line);
    if (cells.size() != ds.column_order.size())
      throw parse_error(path.string() + ": row " + std::to_string(row) + " has " +
                            std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(ds.column_order.size()),
                        row);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto &col = ds.column_order[c];
      ds.columns[col].push_back(detail::parse_cell(cells[c], row, col));
    }
  }
  ds.source_note = path.string();
  return ds;
}

// One numeric column of a CSV file.
inline Series load_csv(const std::filesystem::path &path, const std::string &column) {
  const auto ds = load_csv_table(path);
  if (!ds.columns.count(column))
    throw missing_column_error(path.string() + ": no column '" + column + "'");
  auto s = ds.series(column);
  if (s.empty())
    throw empty_request_error(path.string() + ": no data rows");
  return s;
}

// Writes columns with a header; values are printed round-trip exact.
inline void write_csv(const std::filesystem::path &path,
                      const std::vector<std::string> &names,
                      const std::vector<std::span<const double>> &cols) {
  if (names.size() != cols.size() || names.empty())
    throw shape_error("write_csv: names and columns disagree");
  const std::size_t n = cols.front().size();
  for (const auto &c : cols)
    if (c.size() != n)
      throw shape_error("write_csv: columns differ in length");
  std::ofstream out(path);
  if (!out)
    throw io_error("cannot write " + path.string());
  for (std::size_t j = 0; j < names.size(); ++j)
    out << (j ? "," : "") << names[j];
  out << '\n' << std::setprecision(17);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j)
      out << (j ? "," : "") << cols[j][i];
    out << '\n';
  }
  if (!out)
    throw io_error("write failed for " + path.string());
}

inline std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw error("SHA-256 digest failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

// Bundled-data directory: $LONGMEM_DATA_DIR if set, else the build-time default.
inline std::filesystem::path data_dir() {
  if (const char *env = std::getenv("LONGMEM_DATA_DIR"); env && *env)
    return env;
  return LONGMEM_DEFAULT_DATA_DIR;
}

inline constexpr std::string_view nhtemp_sha256 =
    "0e81c99999575b16ec1e53c39d717ddb3a545581713034cd5c589603899f8560";
inline constexpr std::size_t nile_length = 663;

namespace detail {

inline std::filesystem::path bundled_file(const char *file) {
  const auto path = data_dir() / file;
  if (!std::filesystem::exists(path))
    throw resource_error("bundled dataset " + path.string() +
                         " not found (set LONGMEM_DATA_DIR to its directory)");
  return path;
}

inline void require_annual_years(const Dataset &ds) {
  const auto &y = ds.column("Year");
  for (std::size_t i = 1; i < y.size(); ++i)
    if (y[i] != y[i - 1] + 1.0)
      throw resource_error(ds.name + ": Year is not consecutive at row " +
                           std::to_string(i + 1));
}

} // namespace detail

// Annual Nile minima, 622-1284 AD (663 observations), from NileMin.csv with
// columns Year, NileMin. No file ships with the repository; the loader
// validates shape and years instead of a checksum.
inline Dataset nile_data() {
  const auto path = detail::bundled_file("NileMin.csv");
  Dataset ds;
  try {
    ds = load_csv_table(path);
  } catch (const io_error &e) {
    throw resource_error(std::string("NileMin.csv unreadable: ") + e.what());
  }
  ds.name = "nile";
  for (const char *c : {"Year", "NileMin"})
    if (!ds.columns.count(c))
      throw resource_error(path.string() + ": missing column " + c);
  if (ds.rows() != nile_length)
    throw resource_error(path.string() + ": expected " + std::to_string(nile_length) +
                         " rows, found " + std::to_string(ds.rows()));
  detail::require_annual_years(ds);
  ds.source_note = "Nile annual minima 622-1284 AD, " + path.string();
  return ds;
}

// Annual global temperature anomalies 1850-2022 (HadCRUT5 analysis,
// degrees C relative to 1961-1990), 173 rows, columns Year, Anomaly.
inline Dataset nhtemp_data() {
  const auto path = detail::bundled_file("nhtemp.csv");
  const std::string bytes = detail::read_file(path);
  const auto digest = sha256_hex(bytes);
  if (digest != nhtemp_sha256)
    throw resource_error(path.string() + ": SHA-256 " + digest + " does not match expected " +
                         std::string(nhtemp_sha256));
  Dataset ds = load_csv_table(path);
  ds.name = "nhtemp";
  detail::require_annual_years(ds);
  ds.source_note = "HadCRUT5 global annual mean anomaly 1850-2022, " +
                   std::to_string(ds.rows()) + " rows, " + path.string();
  return ds;
}

// Named builtin dataset and its value column.
inline Series builtin_series(const std::string &name) {
  if (name == "nile")
    return nile_data().series("NileMin");
  if (name == "nhtemp")
    return nhtemp_data().series("Anomaly");
  throw domain_error("unknown dataset '" + name + "' (expected nile or nhtemp)");
}

} // namespace longmem
