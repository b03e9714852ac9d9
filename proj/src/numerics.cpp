#include "nlcasimir/numerics.hpp"

#include <cmath>
#include <string>

namespace nlcasimir {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0)) throw ConfigError("quadrature rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw ConfigError("quadrature abs_tol must be >= 0");
  if (max_subdivisions < 1) throw ConfigError("quadrature max_subdivisions must be >= 1");
}

std::vector<double> log_grid(double min, double max, std::size_t n) {
  if (!(min > 0.0) || !(max > min) || !std::isfinite(max)) {
    throw ConfigError("log_grid: need 0 < min < max");
  }
  if (n < 2) throw ConfigError("log_grid: need at least 2 points");
  std::vector<double> grid(n);
  const double ratio = max / min;
  const double last = static_cast<double>(n - 1);
  grid.front() = min;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    grid[i] = min * std::pow(ratio, static_cast<double>(i) / last);
  }
  grid.back() = max;
  for (std::size_t i = 1; i < n; ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw ConfigError("log_grid: range too narrow for " + std::to_string(n) + " distinct points");
    }
  }
  return grid;
}

}  // namespace nlcasimir
