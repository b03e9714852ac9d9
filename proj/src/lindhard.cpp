// Lindhard longitudinal function
//
//   f_l(w, u) = 1/2 + 1/(8w) { [1-(w-u)^2] ln((w-u+1)/(w-u-1))
//                            + [1-(w+u)^2] ln((w+u+1)/(w+u-1)) }
//
// With g(z) = (1 - z^2) ln((z+1)/(z-1)), which is odd, this is
// f_l = 1/2 + [g(u+w) - g(u-w)] / (8w). Both arguments then sit in the
// closed upper half plane, where ln((z+1)/(z-1)) = ln(z+1) - ln(z-1) is the
// branch continuous from the imaginary axis; its cut is [-1, 1].
//
// Two regimes keep the evaluation free of cancellation:
//   * |u +- w| >= kSeriesRadius: g(z) = -2z + 4 sum_n z^-(2n+1) / ((2n+1)(2n+3)),
//     and the -2z parts cancel the 1/2 analytically.
//   * otherwise the closed form, with ln((u+w+1)/(u+w-1)) - ln((u-w+1)/(u-w-1))
//     taken as log1p of a small ratio when w is small.

#include <cmath>

#include "nlcasimir/dielectric.hpp"
#include "nlcasimir/error.hpp"

namespace nlcasimir {

namespace {

constexpr double kSeriesRadius = 3.0;
constexpr int kMaxSeriesTerms = 80;

double series_coefficient(int n) {
  const double m = 2.0 * n + 1.0;
  return 1.0 / (m * (m + 2.0));
}

complex log_ratio(complex z) { return std::log(z + 1.0) - std::log(z - 1.0); }

complex g_function(complex z) {
  const complex a = 1.0 - z * z;
  if (a == complex{}) return {};
  return a * log_ratio(z);
}

// log(1 + d) accurate for small |d|.
complex log1p_complex(complex d) {
  const complex w = 1.0 + d;
  if (w == 1.0) return d;
  return std::log(w) * d / (w - 1.0);
}

// sum_n c_n [(w-u)^-m + (w+u)^-m] / (2w), m = 2n+1, written as
// -p q sum_n c_n h_m(p, q) with p = 1/(u+w), q = 1/(u-w) and h_m the complete
// homogeneous polynomial of degree m-1, so no 1/w survives.
complex series_fl(double w, complex u) {
  const complex p = 1.0 / (u + w);
  const complex q = 1.0 / (u - w);
  complex h = 1.0;       // h_1
  complex q_power = q;   // q^1
  complex sum = series_coefficient(0) * h;
  for (int n = 1; n < kMaxSeriesTerms; ++n) {
    // advance h_m -> h_{m+2} through h_{k+1} = p h_k + q^k
    h = p * h + q_power;
    q_power *= q;
    h = p * h + q_power;
    q_power *= q;
    const complex term = series_coefficient(n) * h;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return -p * q * sum;
}

}  // namespace

complex lindhard_fl(double w, complex u) {
  if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("lindhard_fl: w must be > 0");
  if (u.imag() < 0.0) throw DomainError("lindhard_fl: u must lie in the upper half plane");
  // Signed zero keeps real u on the upper lip of the cut.
  if (u.imag() == 0.0) u = complex{u.real(), 0.0};

  const complex z_plus = u + w;
  const complex z_minus = u - w;
  if (std::abs(z_plus) >= kSeriesRadius && std::abs(z_minus) >= kSeriesRadius) {
    return series_fl(w, u);
  }

  const complex delta = -4.0 * w / (u * u - (w - 1.0) * (w - 1.0));
  if (std::isfinite(delta.real()) && std::isfinite(delta.imag()) && std::abs(delta) <= 0.5) {
    // |delta| <= 1/2 keeps the ratio away from the cut, so the log1p form is
    // the same branch as the difference of the two logarithms.
    const complex diff = log1p_complex(delta);
    return 0.5 + (1.0 - z_plus * z_plus) * diff / (8.0 * w) - 0.5 * u * log_ratio(z_minus);
  }
  return 0.5 + (g_function(z_plus) - g_function(z_minus)) / (8.0 * w);
}

double lindhard_fl_imaginary(double w, double y) {
  if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("lindhard_fl: w must be > 0");
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("lindhard_fl_imaginary: y must be > 0");

  // z = w + i y; both arguments u +- w have modulus r.
  const double r = std::hypot(w, y);
  if (r >= kSeriesRadius) {
    // Re z^-m = (-1)^n r^-m sin(m phi) with phi = atan2(w, y), m = 2n+1.
    const double phi = std::atan2(w, y);
    const double inv_r2 = 1.0 / (r * r);
    double r_power = 1.0 / r;
    double sum = 0.0;
    double sign = 1.0;
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
      const double m = 2.0 * n + 1.0;
      const double term = series_coefficient(n) * sign * r_power * (std::sin(m * phi) / w);
      sum += term;
      if (n > 0 && std::abs(term) <= 1e-18 * std::abs(sum)) break;
      r_power *= inv_r2;
      sign = -sign;
    }
    return sum;
  }

  // f = 1/2 + Re g(z) / (4w); Re g = A C + 2 w y D with
  //   A = 1 - w^2 + y^2                 (real part of 1 - z^2)
  //   C = ln|(z+1)/(z-1)|               (log-modulus)
  //   D = arg((z+1)/(z-1)) = atan2(-2y, |z|^2 - 1)
  const double a = 1.0 - w * w + y * y;
  const double c = 0.5 * std::log1p(4.0 * w / ((w - 1.0) * (w - 1.0) + y * y));
  const double d = std::atan2(-2.0 * y, w * w + y * y - 1.0);
  return 0.5 + (a * c + 2.0 * w * y * d) / (4.0 * w);
}

}  // namespace nlcasimir
