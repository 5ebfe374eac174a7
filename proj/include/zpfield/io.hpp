#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace zpf::io {

/// Metadata echoed into every emitted file: a "# key=value ..." comment line
/// in CSV, a "meta" object in JSON.
struct Metadata {
  std::string command;
  std::uint64_t seed = 0;
  std::string units = "natural";
  std::string version;
  std::map<std::string, std::string> extra;
};

/// Columns of equal length plus names. Values are written in scientific
/// notation with 16 significant digits.
struct Table {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
  std::vector<std::vector<std::string>> text_columns;  // optional, appended after numeric
  std::vector<std::string> text_names;
};

std::string format_double(double v);

std::string to_csv(const Table& table, const Metadata& meta);
std::string to_json(const Table& table, const Metadata& meta);

/// Write-then-rename so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& contents);

void emit(const Table& table, const Metadata& meta, const std::string& format,
          const std::string& path);

}  // namespace zpf::io
