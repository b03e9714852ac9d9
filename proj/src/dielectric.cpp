#include "nlcasimir/dielectric.hpp"

#include <cmath>

#include "nlcasimir/constants.hpp"
#include "nlcasimir/error.hpp"

namespace nlcasimir {

namespace {

constexpr complex kI{0.0, 1.0};

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw ConfigError(std::string(what) + " must be finite");
}

}  // namespace

ComplexFrequency ComplexFrequency::real(double omega) {
  require_finite(omega, "real-axis frequency");
  return {complex{omega, 0.0}, Axis::Real};
}

ComplexFrequency ComplexFrequency::real(complex omega) {
  require_finite(omega.real(), "real-axis frequency");
  require_finite(omega.imag(), "real-axis frequency");
  if (omega.imag() < 0.0) throw DomainError("real-axis frequency must have Im(omega) >= 0");
  return {omega, Axis::Real};
}

ComplexFrequency ComplexFrequency::imaginary(double xi) {
  if (!(xi > 0.0) || !std::isfinite(xi)) {
    throw DomainError("imaginary-axis frequency requires finite xi > 0");
  }
  return {complex{0.0, xi}, Axis::Imaginary};
}

double ComplexFrequency::xi() const {
  if (axis_ != Axis::Imaginary) throw DomainError("xi() requested for a real-axis frequency");
  return value_.imag();
}

bool operator==(const ExcitonParams& a, const ExcitonParams& b) {
  return a.gap_energy == b.gap_energy && a.binding_energy == b.binding_energy &&
         a.mass == b.mass && a.weight == b.weight;
}

MaterialParams MaterialParams::drude(double omega_p, double gamma, double v_F) {
  MaterialParams p;
  p.omega_p = omega_p;
  p.gamma = gamma;
  p.v_F = v_F;
  p.beta2 = 0.6 * v_F * v_F;
  p.k_F = constants::m_e * v_F / constants::hbar;
  p.validate();
  return p;
}

MaterialParams MaterialParams::from_wigner_seitz(double r_s_bohr, double gamma) {
  using namespace constants;
  if (!(r_s_bohr > 0.0)) throw ConfigError("r_s must be > 0");
  const double r_s = r_s_bohr * bohr_radius;
  const double n = 3.0 / (4.0 * pi * r_s * r_s * r_s);
  const double omega_p = std::sqrt(n * e * e / (epsilon0 * m_e));
  const double k_F = std::cbrt(3.0 * pi * pi * n);
  MaterialParams p = drude(omega_p, gamma, hbar * k_F / m_e);
  p.k_F = k_F;
  return p;
}

double MaterialParams::electron_density() const {
  using namespace constants;
  return epsilon0 * m_e * omega_p * omega_p / (e * e);
}

void MaterialParams::validate() const {
  if (!(omega_p > 0.0) || !std::isfinite(omega_p)) throw ConfigError("omega_p must be > 0");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw ConfigError("gamma must be >= 0");
  if (!(v_F > 0.0) || !std::isfinite(v_F)) throw ConfigError("v_F must be > 0");
  if (!(beta2 > 0.0) || !std::isfinite(beta2)) throw ConfigError("beta2 must be > 0");
  if (!(k_F > 0.0) || !std::isfinite(k_F)) throw ConfigError("k_F must be > 0");
  if (!(eps_inf >= 1.0) || !std::isfinite(eps_inf)) throw ConfigError("eps_inf must be >= 1");
  if (exciton) {
    if (!(exciton->gap_energy > exciton->binding_energy)) {
      throw ConfigError("excitonic E_g must exceed E_b");
    }
    if (!(exciton->mass > 0.0)) throw ConfigError("excitonic mass must be > 0");
    if (!(exciton->weight >= 0.0)) throw ConfigError("excitonic weight must be >= 0");
  }
}

complex drude_transverse(const MaterialParams& p, ComplexFrequency w) {
  if (w.is_zero()) throw DomainError("drude_transverse: static pole at omega = 0");
  if (w.on_imaginary_axis()) return imaginary_axis::drude_transverse(p, w.xi());
  const complex om = w.value();
  return 1.0 - p.omega_p * p.omega_p / (om * om + kI * p.gamma * om);
}

complex hydrodynamic_longitudinal(const MaterialParams& p, double k, ComplexFrequency w) {
  if (!(k >= 0.0)) throw DomainError("hydrodynamic_longitudinal: k must be >= 0");
  if (k == 0.0) return drude_transverse(p, w);
  if (w.on_imaginary_axis()) return imaginary_axis::hydrodynamic_longitudinal(p, k, w.xi());
  const complex om = w.value();
  const complex denom = om * om + kI * p.gamma * om - p.beta2 * k * k;
  if (denom == complex{}) throw DomainError("hydrodynamic_longitudinal: evaluated at the pole");
  return 1.0 - p.omega_p * p.omega_p / denom;
}

double exciton_resonance(const ExcitonParams& x, double k) {
  const double hbar = constants::hbar;
  const double energy = x.gap_energy - x.binding_energy + hbar * hbar * k * k / (2.0 * x.mass);
  return energy / hbar;
}

complex excitonic_lorentz(const MaterialParams& p, double k, ComplexFrequency w) {
  if (!p.exciton) throw ConfigError("excitonic_lorentz: material has no excitonic parameters");
  if (!(p.exciton->gap_energy > p.exciton->binding_energy)) {
    throw ConfigError("excitonic_lorentz: E_g must exceed E_b");
  }
  if (w.on_imaginary_axis()) return imaginary_axis::excitonic_lorentz(p, k, w.xi());
  const double wt = exciton_resonance(*p.exciton, k);
  const complex om = w.value();
  const complex denom = wt * wt - om * om - kI * p.gamma * om;
  if (denom == complex{}) throw DomainError("excitonic_lorentz: evaluated at the resonance");
  return p.eps_inf + p.exciton->weight / denom;
}

complex lindhard_longitudinal(const MaterialParams& p, double k, ComplexFrequency w) {
  if (!(k > 0.0)) throw DomainError("lindhard_longitudinal: k must be > 0");
  const double kv = k * p.v_F;
  const complex u = w.value() / kv;
  const double prefactor = 3.0 * p.omega_p * p.omega_p / (kv * kv);
  return 1.0 + prefactor * lindhard_fl(k / (2.0 * p.k_F), u);
}

namespace imaginary_axis {

double drude_transverse(const MaterialParams& p, double xi) {
  if (!(xi > 0.0)) throw DomainError("imaginary-axis evaluation requires xi > 0");
  return 1.0 + p.omega_p * p.omega_p / (xi * xi + p.gamma * xi);
}

double hydrodynamic_longitudinal(const MaterialParams& p, double k, double xi) {
  if (!(xi > 0.0)) throw DomainError("imaginary-axis evaluation requires xi > 0");
  if (!(k >= 0.0)) throw DomainError("hydrodynamic_longitudinal: k must be >= 0");
  return 1.0 + p.omega_p * p.omega_p / (xi * xi + p.gamma * xi + p.beta2 * k * k);
}

double excitonic_lorentz(const MaterialParams& p, double k, double xi) {
  if (!p.exciton) throw ConfigError("excitonic_lorentz: material has no excitonic parameters");
  if (!(xi > 0.0)) throw DomainError("imaginary-axis evaluation requires xi > 0");
  const double wt = exciton_resonance(*p.exciton, k);
  return p.eps_inf + p.exciton->weight / (wt * wt + xi * xi + p.gamma * xi);
}

double lindhard_longitudinal(const MaterialParams& p, double k, double xi) {
  if (!(xi > 0.0)) throw DomainError("imaginary-axis evaluation requires xi > 0");
  if (!(k > 0.0)) throw DomainError("lindhard_longitudinal: k must be > 0");
  const double kv = k * p.v_F;
  const double prefactor = 3.0 * p.omega_p * p.omega_p / (kv * kv);
  return 1.0 + prefactor * lindhard_fl_imaginary(k / (2.0 * p.k_F), xi / kv);
}

}  // namespace imaginary_axis

ImaginaryAxisResponse ImaginaryAxisResponse::vacuum() { return {Kind::Vacuum, MaterialParams{}}; }
ImaginaryAxisResponse ImaginaryAxisResponse::drude(const MaterialParams& p) {
  p.validate();
  return {Kind::Drude, p};
}
ImaginaryAxisResponse ImaginaryAxisResponse::hydrodynamic(const MaterialParams& p) {
  p.validate();
  return {Kind::Hydrodynamic, p};
}
ImaginaryAxisResponse ImaginaryAxisResponse::lindhard(const MaterialParams& p) {
  p.validate();
  return {Kind::Lindhard, p};
}
ImaginaryAxisResponse ImaginaryAxisResponse::excitonic(const MaterialParams& p) {
  p.validate();
  if (!p.exciton) throw ConfigError("excitonic response requires excitonic parameters");
  return {Kind::Excitonic, p};
}

double ImaginaryAxisResponse::operator()(double k, double xi) const {
  switch (kind_) {
    case Kind::Vacuum:
      return 1.0;
    case Kind::Drude:
      return imaginary_axis::drude_transverse(material_, xi);
    case Kind::Hydrodynamic:
      return imaginary_axis::hydrodynamic_longitudinal(material_, k, xi);
    case Kind::Lindhard:
      return imaginary_axis::lindhard_longitudinal(material_, k, xi);
    case Kind::Excitonic:
      return imaginary_axis::excitonic_lorentz(material_, k, xi);
  }
  return 1.0;
}

std::string_view ImaginaryAxisResponse::name() const {
  switch (kind_) {
    case Kind::Vacuum: return "vacuum";
    case Kind::Drude: return "drude";
    case Kind::Hydrodynamic: return "hydrodynamic";
    case Kind::Lindhard: return "lindhard";
    case Kind::Excitonic: return "excitonic";
  }
  return "unknown";
}

}  // namespace nlcasimir
