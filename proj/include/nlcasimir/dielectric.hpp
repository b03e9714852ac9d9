#pragma once

#include <complex>
#include <optional>
#include <string_view>

namespace nlcasimir {

using complex = std::complex<double>;

enum class Axis { Real, Imaginary };

// A frequency either on the real axis (with the retarded +i0 limit implied
// by the tag) or on the positive imaginary axis. No finite damping
// parameter is ever introduced to select a branch.
class ComplexFrequency {
 public:
  static ComplexFrequency real(double omega);
  // Real-axis frequency with explicit absorption, Im(omega) >= 0.
  static ComplexFrequency real(complex omega);
  static ComplexFrequency imaginary(double xi);

  complex value() const { return value_; }
  Axis axis() const { return axis_; }
  bool on_imaginary_axis() const { return axis_ == Axis::Imaginary; }
  // xi for the imaginary axis; throws on the real axis.
  double xi() const;
  bool is_zero() const { return value_ == complex{}; }

 private:
  ComplexFrequency(complex v, Axis a) : value_(v), axis_(a) {}
  complex value_;
  Axis axis_;
};

struct ExcitonParams {
  double gap_energy;      // E_g, J
  double binding_energy;  // E_b, J
  double mass;            // M, kg
  double weight;          // oscillator weight omega_p^2, rad^2/s^2
};

// Bulk parameters of one mirror material, SI units throughout.
struct MaterialParams {
  double omega_p = 0.0;  // plasma frequency, rad/s
  double gamma = 0.0;    // damping rate, rad/s
  double v_F = 0.0;      // Fermi velocity, m/s
  double beta2 = 0.0;    // hydrodynamic speed squared, m^2/s^2
  double k_F = 0.0;      // Fermi wave-vector, 1/m
  double eps_inf = 1.0;
  std::optional<ExcitonParams> exciton;

  // Drude metal; beta2 = 3 v_F^2 / 5 and free-electron k_F = m_e v_F / hbar.
  static MaterialParams drude(double omega_p, double gamma, double v_F);
  // Free-electron gas of density n = 3 / (4 pi (r_s a_B)^3).
  static MaterialParams from_wigner_seitz(double r_s_bohr, double gamma = 0.0);

  // n = eps0 m_e omega_p^2 / e^2.
  double electron_density() const;
  void validate() const;

  friend bool operator==(const MaterialParams&, const MaterialParams&) = default;
};

bool operator==(const ExcitonParams&, const ExcitonParams&);

// ---- response functions, general complex frequency ----

// 1 - omega_p^2 / (omega^2 + i gamma omega).
complex drude_transverse(const MaterialParams& p, ComplexFrequency w);

// 1 - omega_p^2 / (omega^2 + i omega gamma - beta^2 k^2).
complex hydrodynamic_longitudinal(const MaterialParams& p, double k, ComplexFrequency w);

// Lorentz oscillator with k-dependent resonance; transverse and longitudinal
// responses coincide.
complex excitonic_lorentz(const MaterialParams& p, double k, ComplexFrequency w);

// Resonance frequency hbar omega_T(k) = E_g - E_b + hbar^2 k^2 / 2M, in rad/s.
double exciton_resonance(const ExcitonParams& x, double k);

// RPA longitudinal response, 1 + 3 omega_p^2 / (k v_F)^2 f_l(k / 2k_F, omega / k v_F).
complex lindhard_longitudinal(const MaterialParams& p, double k, ComplexFrequency w);

// Lindhard f_l(w, u) by direct complex evaluation. u must lie in the closed
// upper half plane; real u is read as the limit from above.
complex lindhard_fl(double w, complex u);

// f_l(w, i y) for y > 0 in real arithmetic (log-modulus/arctangent pairs).
double lindhard_fl_imaginary(double w, double y);

// ---- real-valued evaluation on the imaginary axis, omega = i xi ----
namespace imaginary_axis {

// 1 + omega_p^2 / (xi^2 + gamma xi)
double drude_transverse(const MaterialParams& p, double xi);
// 1 + omega_p^2 / (xi^2 + gamma xi + beta^2 k^2)
double hydrodynamic_longitudinal(const MaterialParams& p, double k, double xi);
double excitonic_lorentz(const MaterialParams& p, double k, double xi);
double lindhard_longitudinal(const MaterialParams& p, double k, double xi);

}  // namespace imaginary_axis

// A bulk response model bound to a material, evaluated on the imaginary
// axis. This is what the surface-impedance integrals consume.
class ImaginaryAxisResponse {
 public:
  enum class Kind { Vacuum, Drude, Hydrodynamic, Lindhard, Excitonic };

  static ImaginaryAxisResponse vacuum();
  static ImaginaryAxisResponse drude(const MaterialParams& p);
  static ImaginaryAxisResponse hydrodynamic(const MaterialParams& p);
  static ImaginaryAxisResponse lindhard(const MaterialParams& p);
  static ImaginaryAxisResponse excitonic(const MaterialParams& p);

  double operator()(double k, double xi) const;
  bool depends_on_k() const { return kind_ != Kind::Vacuum && kind_ != Kind::Drude; }
  Kind kind() const { return kind_; }
  std::string_view name() const;
  const MaterialParams& material() const { return material_; }

  friend bool operator==(const ImaginaryAxisResponse&, const ImaginaryAxisResponse&) = default;

 private:
  ImaginaryAxisResponse(Kind kind, MaterialParams p) : kind_(kind), material_(p) {}
  Kind kind_;
  MaterialParams material_;
};

}  // namespace nlcasimir
