#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace nlcasimir {

enum class TableFormat { Csv, Json };

// Column-homogeneous numeric table.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void validate() const;
};

// Columns of every force table.
const std::vector<std::string>& force_columns();

struct ForceRow {
  double L_nm;
  double L_omega_p_over_c;
  double F_local_Pa;
  double F_nonlocal_Pa;
  double delta_F_over_F;
  double err_local;
  double err_nonlocal;
};

Table force_table(const std::vector<ForceRow>& rows);

// 17 significant digits; NaN prints as "nan".
std::string format_number(double v);

// Header line plus one line per row, comma separated, LF endings.
std::string to_csv(const Table& t);
// Object of named column arrays; NaN becomes null.
std::string to_json(const Table& t);
Table parse_csv(std::string_view text);

TableFormat parse_format(std::string_view name);

// Writes the table; "-" means stdout. Throws ConfigError on I/O failure.
void emit_table(const Table& t, TableFormat format, const std::filesystem::path& path);

}  // namespace nlcasimir
