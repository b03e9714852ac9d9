#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "nlcasimir/constants.hpp"

namespace nlcasimir::testing {

// f_l(w, 0) = 1 - sum_n w^{2n} / (4n^2 - 1), from the Taylor series of the
// logarithm in the static Lindhard function.
inline double static_fl_taylor(double w) {
  double sum = 1.0;
  double power = 1.0;
  for (int n = 1; n <= 12; ++n) {
    power *= w * w;
    sum -= power / (4.0 * n * n - 1.0);
  }
  return sum;
}

// Large-|u| expansion, f_l = -1/(3u^2) [1 + 3/(5u^2) + w^2/u^2 + O(u^-4)].
inline std::complex<double> high_frequency_fl(double w, std::complex<double> u) {
  const std::complex<double> u2 = u * u;
  return -1.0 / (3.0 * u2) * (1.0 + 3.0 / (5.0 * u2) + w * w / u2);
}

// Unit reflection products: P = (hbar c / pi^2) sum_n int kappa^3 e^{-2 n kappa L}
// = 3 hbar c zeta(4) / (8 pi^2 L^4), with zeta(4) summed directly.
inline double perfect_mirror_oracle(double L) {
  double zeta4 = 0.0;
  const int n_max = 100000;
  for (int n = n_max; n >= 1; --n) zeta4 += std::pow(static_cast<double>(n), -4);
  zeta4 += 1.0 / (3.0 * std::pow(n_max + 0.5, 3));  // Euler-Maclaurin tail
  const double pi = std::numbers::pi;
  return 3.0 * constants::hbar * constants::c * zeta4 / (8.0 * pi * pi * std::pow(L, 4));
}

}  // namespace nlcasimir::testing
