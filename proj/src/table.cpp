#include "nlcasimir/table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nlcasimir/error.hpp"

namespace nlcasimir {

void Table::validate() const {
  for (const auto& row : rows) {
    if (row.size() != columns.size()) throw ConfigError("table rows must match the column count");
  }
}

const std::vector<std::string>& force_columns() {
  static const std::vector<std::string> columns = {
      "L_nm", "L_omega_p_over_c", "F_local_Pa", "F_nonlocal_Pa", "delta_F_over_F", "err_local", "err_nonlocal"};
  return columns;
}

Table force_table(const std::vector<ForceRow>& rows) {
  Table t{force_columns(), {}};
  t.rows.reserve(rows.size());
  for (const auto& r : rows) {
    t.rows.push_back({r.L_nm, r.L_omega_p_over_c, r.F_local_Pa, r.F_nonlocal_Pa, r.delta_F_over_F,
                      r.err_local, r.err_nonlocal});
  }
  return t;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const Table& t) {
  t.validate();
  std::string out;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  t.validate();
  std::string out = "{";
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    out += c ? ",\n \"" : "\n \"";
    out += t.columns[c];
    out += "\": [";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      if (r) out += ", ";
      const double v = t.rows[r][c];
      out += std::isfinite(v) ? format_number(v) : "null";
    }
    out += ']';
  }
  out += "\n}\n";
  return out;
}

Table parse_csv(std::string_view text) {
  Table t;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("CSV is empty");
  {
    std::istringstream header(line);
    std::string cell;
    while (std::getline(header, cell, ',')) t.columns.push_back(cell);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cell.size() || cell.empty()) throw ConfigError("CSV: malformed number '" + cell + "'");
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  t.validate();
  return t;
}

TableFormat parse_format(std::string_view name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  throw ConfigError("--format must be csv or json, got '" + std::string(name) + "'");
}

void emit_table(const Table& t, TableFormat format, const std::filesystem::path& path) {
  const std::string text = format == TableFormat::Csv ? to_csv(t) : to_json(t);
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("--out: cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw ConfigError("--out: write to '" + path.string() + "' failed");
}

}  // namespace nlcasimir
