#include "zpfield/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace zpf::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

namespace {

void check_table(const Table& table) {
  std::size_t rows = 0;
  bool have = false;
  for (const auto& c : table.columns) {
    if (!have) {
      rows = c.size();
      have = true;
    } else if (c.size() != rows) {
      throw std::invalid_argument("Table: columns must have equal length");
    }
  }
  for (const auto& c : table.text_columns)
    if (have && c.size() != rows)
      throw std::invalid_argument("Table: text columns must match numeric length");
  if (table.names.size() != table.columns.size() ||
      table.text_names.size() != table.text_columns.size())
    throw std::invalid_argument("Table: names must match columns");
}

std::string meta_comment(const Metadata& meta) {
  std::string line = "# command=" + meta.command + " seed=" + std::to_string(meta.seed) +
                     " units=" + meta.units + " version=" + meta.version;
  for (const auto& [k, v] : meta.extra) line += " " + k + "=" + v;
  line += "\n";
  return line;
}

}  // namespace

std::string to_csv(const Table& table, const Metadata& meta) {
  check_table(table);
  std::string out = meta_comment(meta);
  for (std::size_t i = 0; i < table.names.size(); ++i) {
    if (i) out += ",";
    out += table.names[i];
  }
  for (std::size_t i = 0; i < table.text_names.size(); ++i) {
    if (i || !table.names.empty()) out += ",";
    out += table.text_names[i];
  }
  out += "\n";
  const std::size_t rows = table.columns.empty()
                               ? (table.text_columns.empty() ? 0 : table.text_columns[0].size())
                               : table.columns[0].size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      if (i) out += ",";
      out += format_double(table.columns[i][r]);
    }
    for (std::size_t i = 0; i < table.text_columns.size(); ++i) {
      if (i || !table.columns.empty()) out += ",";
      out += table.text_columns[i][r];
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const Table& table, const Metadata& meta) {
  check_table(table);
  nlohmann::json j;
  j["meta"] = {{"command", meta.command},
               {"seed", meta.seed},
               {"units", meta.units},
               {"version", meta.version}};
  for (const auto& [k, v] : meta.extra) j["meta"][k] = v;
  for (std::size_t i = 0; i < table.names.size(); ++i) j["columns"][table.names[i]] = table.columns[i];
  for (std::size_t i = 0; i < table.text_names.size(); ++i)
    j["columns"][table.text_names[i]] = table.text_columns[i];
  return j.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("rename failed: " + path);
  }
}

void emit(const Table& table, const Metadata& meta, const std::string& format,
          const std::string& path) {
  if (format == "csv") {
    write_file_atomic(path, to_csv(table, meta));
  } else if (format == "json") {
    write_file_atomic(path, to_json(table, meta));
  } else {
    throw std::invalid_argument("emit: unknown format " + format);
  }
}

}  // namespace zpf::io
