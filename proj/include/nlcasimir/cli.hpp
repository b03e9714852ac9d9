#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nlcasimir/table.hpp"

namespace nlcasimir::cli {

enum class Scenario { ForceCurve, DeltaCurve, FeibelmanCompare, ReflectivityScan, DielectricScan };

struct RunSpec {
  Scenario scenario = Scenario::DeltaCurve;
  std::optional<std::filesystem::path> material;
  std::string model = "hydro";
  bool perfect_mirror = false;
  // Constant d_perp in angstrom, "hydro" for -i/k_l, or a table path.
  std::optional<std::string> dperp;
  std::optional<double> lmin_nm, lmax_nm;
  std::optional<double> xmin, xmax;  // L omega_p / c
  std::size_t points = 41;
  std::filesystem::path out = "-";
  TableFormat format = TableFormat::Csv;
  double rel_tol = 1e-8;
  int max_subdivisions = 200;
  unsigned threads = 1;

  // dielectric-scan
  double emin_eV = 0.01;
  double emax_eV = 100.0;
  double k_per_nm = 0.1;
  double q_per_nm = 0.0;
  // reflectivity-scan
  double energy_eV = 1.0;
  double qmin_per_nm = 1e-3;
  double qmax_per_nm = 10.0;

  void validate() const;
};

// Parses argv into a RunSpec. Throws ConfigError naming the offending flag.
// Returns nullopt after printing --help.
std::optional<RunSpec> parse_args(const std::vector<std::string>& args, std::ostream& out);

// Exit status: 0 success, 2 partial curve failure, 1 configuration or I/O
// error. A one-line JSON summary goes to `diagnostics`.
int run(const RunSpec& spec, std::ostream& diagnostics);

// parse_args + run with error reporting; what the executable calls.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& diagnostics);

// Output paths of the feibelman-compare scenario: <stem>_exact<ext> and
// <stem>_long_wavelength<ext>.
std::pair<std::filesystem::path, std::filesystem::path> comparison_paths(const std::filesystem::path& out);

}  // namespace nlcasimir::cli
