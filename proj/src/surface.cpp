#include "nlcasimir/surface.hpp"

#include <cmath>
#include <string>

#include "nlcasimir/constants.hpp"
#include "nlcasimir/error.hpp"

namespace nlcasimir {

namespace {

constexpr complex kI{0.0, 1.0};
constexpr double c_light = constants::c;

double kappa_of(double Q, double xi) { return std::hypot(Q, xi / c_light); }

double kappa_l_of(double Q, double xi, const MaterialParams& p) {
  return std::sqrt(Q * Q + (xi * xi + p.gamma * xi + p.omega_p * p.omega_p) / p.beta2);
}

}  // namespace

complex branch_sqrt(complex z) {
  complex s = std::sqrt(z);
  if (s.imag() < 0.0 || (s.imag() == 0.0 && s.real() < 0.0)) s = -s;
  // std::sqrt of a negative real with a -0 imaginary part lands on -i|.|
  if (s.imag() == 0.0) s = complex{s.real(), 0.0};
  return s;
}

Channel::Channel(double Q, ComplexFrequency freq) : Q_(Q), freq_(freq) {
  if (!(Q >= 0.0) || !std::isfinite(Q)) throw DomainError("channel: Q must be finite and >= 0");
}

complex Channel::k_v() const {
  if (freq_.on_imaginary_axis()) return kI * kappa();
  const complex q = freq_.value() / c_light;
  return branch_sqrt(q * q - Q_ * Q_);
}

double Channel::kappa() const { return kappa_of(Q_, freq_.xi()); }

complex transverse_normal_wavevector(const Channel& ch, complex eps_t) {
  if (ch.freq().on_imaginary_axis()) {
    const double xi = ch.freq().xi();
    const complex radicand = ch.Q() * ch.Q() + eps_t * (xi * xi) / (c_light * c_light);
    return kI * branch_sqrt(radicand);
  }
  const complex q = ch.freq().value() / c_light;
  return branch_sqrt(eps_t * q * q - ch.Q() * ch.Q());
}

complex longitudinal_normal_wavevector(const Channel& ch, const MaterialParams& p) {
  if (ch.freq().on_imaginary_axis()) {
    return kI * kappa_l_of(ch.Q(), ch.freq().xi(), p);
  }
  const complex om = ch.freq().value();
  const complex kl2 =
      (om * om + kI * p.gamma * om - p.omega_p * p.omega_p) / p.beta2 - ch.Q() * ch.Q();
  return branch_sqrt(kl2);
}

NormalWavevectors normal_wavevectors(const Channel& ch, const MaterialParams& p) {
  const complex eps_t = drude_transverse(p, ch.freq());
  return {ch.k_v(), transverse_normal_wavevector(ch, eps_t), longitudinal_normal_wavevector(ch, p)};
}

Impedances vacuum_impedances(const Channel& ch) {
  const complex om = ch.freq().value();
  const complex kv = ch.k_v();
  if (om == complex{} || kv == complex{}) {
    throw DomainError("vacuum impedances undefined at omega = 0 or k_v = 0");
  }
  const complex z_vs = om / (kv * c_light);
  const complex z_vp = kv * c_light / om;
  return {z_vs, z_vp, z_vs, z_vp};
}

Reflection fresnel_local(const Channel& ch, complex eps_t) {
  const complex kv = ch.k_v();
  const complex kt = transverse_normal_wavevector(ch, eps_t);
  const complex rs_den = kv + kt;
  const complex rp_den = eps_t * kv + kt;
  if (rs_den == complex{} || rp_den == complex{}) {
    throw DomainError("fresnel_local: degenerate channel (vanishing denominator)");
  }
  return {(kv - kt) / rs_den, (eps_t * kv - kt) / rp_den};
}

complex hydrodynamic_rp(const Channel& ch, const MaterialParams& p) {
  if (!(p.beta2 > 0.0)) throw ConfigError("hydrodynamic_rp: beta^2 must be > 0");
  const auto [kv, kt, kl] = normal_wavevectors(ch, p);
  if (kl == complex{}) throw DomainError("hydrodynamic_rp: k_l = 0 (longitudinal branch point)");
  const complex eps_t = drude_transverse(p, ch.freq());
  const double Q2 = ch.Q() * ch.Q();
  const complex extra = Q2 * (eps_t - 1.0) / kl;
  return (eps_t * kv - kt + extra) / (eps_t * kv + kt - extra);
}

Impedances scib_impedances(const Channel& ch, const ImaginaryAxisResponse& eps_l,
                           const ImaginaryAxisResponse& eps_t, const QuadratureConfig& cfg) {
  if (!ch.freq().on_imaginary_axis()) {
    throw DomainError("scib_impedances: only the imaginary frequency axis is supported");
  }
  const double Q = ch.Q();
  const double xi = ch.freq().xi();
  const double q2 = xi * xi / (c_light * c_light);  // |omega/c|^2
  const double Q2 = Q * Q;
  const double prefactor = 2.0 * xi / (constants::pi * c_light);

  // With omega = i xi:
  //   Z_s = (2 xi / pi c) int_0^inf dk_z / (eps_t q2 + k^2)
  //   Z_p = (2 xi / pi c) int_0^inf dk_z / k^2 [Q^2 / (q2 eps_l) + k_z^2 / (eps_t q2 + k^2)]
  // with k^2 = Q^2 + k_z^2. Every integrand is positive.
  const double kappa_t = std::sqrt(Q2 + eps_t(Q, xi) * q2);

  auto transverse_s = [&](double kz) {
    const double k2 = Q2 + kz * kz;
    return 1.0 / (eps_t(std::sqrt(k2), xi) * q2 + k2);
  };
  auto transverse_p = [&](double kz) {
    const double k2 = Q2 + kz * kz;
    if (k2 == 0.0) return 1.0 / (eps_t(0.0, xi) * q2);
    return kz * kz / (k2 * (eps_t(std::sqrt(k2), xi) * q2 + k2));
  };
  auto longitudinal_p = [&](double kz) {
    const double k2 = Q2 + kz * kz;
    return Q2 / (k2 * q2 * eps_l(std::sqrt(k2), xi));
  };

  auto checked = [](const QuadratureResult& r, const char* which) {
    if (!r.converged) {
      throw QuadratureError(std::string("scib_impedances: ") + which + " integral did not converge",
                            r.value, r.error);
    }
    return r;
  };

  const auto s = checked(integrate_half_line(transverse_s, 0.0, kappa_t, cfg), "Z_s");
  const auto pt = checked(integrate_half_line(transverse_p, 0.0, kappa_t, cfg), "Z_p transverse");
  QuadratureResult pl;
  if (Q > 0.0) {
    // The longitudinal term is a Lorentzian of width ~Q in k_z.
    pl = checked(integrate_half_line(longitudinal_p, 0.0, Q, cfg), "Z_p longitudinal");
  }

  Impedances z = vacuum_impedances(ch);
  z.Z_s = prefactor * s.value;
  z.Z_p = prefactor * (pt.value + pl.value);
  z.error_s = prefactor * s.error;
  z.error_p = prefactor * (pt.error + pl.error);
  return z;
}

Reflection impedance_to_reflection(const Impedances& z) {
  const complex s_den = z.Z_s + z.Z_vs;
  const complex p_den = z.Z_vp + z.Z_p;
  if (s_den == complex{} || p_den == complex{}) {
    throw DomainError("impedance_to_reflection: degenerate channel (vanishing denominator)");
  }
  return {(z.Z_s - z.Z_vs) / s_den, (z.Z_vp - z.Z_p) / p_den};
}

complex feibelman_rp(const Channel& ch, complex eps_t, complex r_p0, complex d_perp) {
  if (!(ch.Q() > 0.0)) throw DomainError("feibelman_rp: requires Q > 0");
  const complex kv = ch.k_v();
  const complex denom = 1.0 + eps_t * kv * kv / (ch.Q() * ch.Q());
  if (denom == complex{}) throw DomainError("feibelman_rp: vanishing denominator");
  return r_p0 * (1.0 + 2.0 * kI * kv * eps_t / denom * d_perp);
}

complex hydrodynamic_dperp(const Channel& ch, const MaterialParams& p) {
  const complex kl = longitudinal_normal_wavevector(ch, p);
  if (kl == complex{}) throw DomainError("hydrodynamic_dperp: k_l = 0");
  return -kI / kl;
}

complex centroid_dperp(std::span<const double> z, std::span<const complex> delta_rho) {
  if (z.size() != delta_rho.size()) throw ConfigError("centroid_dperp: grid/profile size mismatch");
  if (z.size() < 2) throw ConfigError("centroid_dperp: need at least two samples");
  complex moment{};
  complex charge{};
  double scale = 0.0;
  for (std::size_t i = 1; i < z.size(); ++i) {
    const double h = z[i] - z[i - 1];
    if (!(h > 0.0)) throw ConfigError("centroid_dperp: z grid must be strictly increasing");
    charge += 0.5 * h * (delta_rho[i] + delta_rho[i - 1]);
    moment += 0.5 * h * (z[i] * delta_rho[i] + z[i - 1] * delta_rho[i - 1]);
    scale += 0.5 * h * (std::abs(delta_rho[i]) + std::abs(delta_rho[i - 1]));
  }
  if (!(std::abs(charge) > 1e-12 * scale)) {
    throw IllConditionedError("centroid_dperp: net induced charge is negligible", std::abs(charge));
  }
  return moment / charge;
}

namespace imaginary_axis {

RealReflection fresnel_local(double Q, double xi, double eps_t) {
  const double kappa = kappa_of(Q, xi);
  const double kappa_t = std::sqrt(Q * Q + eps_t * xi * xi / (c_light * c_light));
  return {(kappa - kappa_t) / (kappa + kappa_t), (eps_t * kappa - kappa_t) / (eps_t * kappa + kappa_t)};
}

double hydrodynamic_rp(double Q, double xi, const MaterialParams& p) {
  // k_v = i kappa, k_t = i kappa_t, k_l = i kappa_l; dividing through by i
  // flips the sign of the Q^2 (eps - 1)/k_l term.
  const double eps = drude_transverse(p, xi);
  const double kappa = kappa_of(Q, xi);
  const double kappa_t = std::sqrt(Q * Q + eps * xi * xi / (c_light * c_light));
  const double extra = Q * Q * (eps - 1.0) / kappa_l_of(Q, xi, p);
  return (eps * kappa - kappa_t - extra) / (eps * kappa + kappa_t + extra);
}

double feibelman_rp(double Q, double xi, double eps_t, double r_p0, double d_perp) {
  if (!(Q > 0.0)) throw DomainError("feibelman_rp: requires Q > 0");
  const double kappa = kappa_of(Q, xi);
  const double Q2 = Q * Q;
  return r_p0 * (1.0 + 2.0 * kappa * eps_t * d_perp * Q2 / (eps_t * kappa * kappa - Q2));
}

double hydrodynamic_dperp(double Q, double xi, const MaterialParams& p) {
  return -1.0 / kappa_l_of(Q, xi, p);
}

}  // namespace imaginary_axis

}  // namespace nlcasimir
