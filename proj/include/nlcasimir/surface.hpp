#pragma once

#include <complex>
#include <span>

#include "nlcasimir/dielectric.hpp"
#include "nlcasimir/numerics.hpp"

namespace nlcasimir {

// Square root on the branch Im >= 0, ties (Im == 0) broken by Re >= 0, so
// that normal wave-vectors describe fields decaying away from the surface.
complex branch_sqrt(complex z);

// One (Q, frequency) point at which reflection amplitudes are evaluated.
class Channel {
 public:
  Channel(double Q, ComplexFrequency freq);

  double Q() const { return Q_; }
  ComplexFrequency freq() const { return freq_; }
  // Normal wave-vector in vacuum, sqrt(omega^2/c^2 - Q^2); i kappa on the
  // imaginary axis.
  complex k_v() const;
  // Vacuum decay constant sqrt(Q^2 + xi^2/c^2); imaginary axis only.
  double kappa() const;

 private:
  double Q_;
  ComplexFrequency freq_;
};

struct NormalWavevectors {
  complex k_v;
  complex k_t;
  complex k_l;
};

// k_t = sqrt(eps_t omega^2/c^2 - Q^2).
complex transverse_normal_wavevector(const Channel& ch, complex eps_t);
// Hydrodynamic longitudinal mode, k_l^2 = (omega^2 + i gamma omega - omega_p^2)/beta^2 - Q^2.
complex longitudinal_normal_wavevector(const Channel& ch, const MaterialParams& p);
// All three for the hydrodynamic metal (Drude eps_t).
NormalWavevectors normal_wavevectors(const Channel& ch, const MaterialParams& p);

struct Reflection {
  complex r_s;
  complex r_p;
};

// Surface impedances. Z_vs = omega/(k_v c) and Z_vp = k_v c/omega are the
// vacuum values.
struct Impedances {
  complex Z_s;
  complex Z_p;
  complex Z_vs;
  complex Z_vp;
  // Absolute quadrature error estimates when the impedances come from SCIB.
  double error_s = 0.0;
  double error_p = 0.0;
};

Impedances vacuum_impedances(const Channel& ch);

Reflection fresnel_local(const Channel& ch, complex eps_t);

// Hydrodynamic p amplitude with the continuity-of-all-fields boundary
// condition:
//   r_p = (eps_t k_v - k_t + Q^2 (eps_t - 1)/k_l) / (eps_t k_v + k_t - Q^2 (eps_t - 1)/k_l)
complex hydrodynamic_rp(const Channel& ch, const MaterialParams& p);

// Semi-classical infinite barrier impedances on the imaginary axis. The k_z
// integrals run over the half line (the integrands are even) and are real and
// pole free there. Throws QuadratureError if a tolerance cannot be met.
Impedances scib_impedances(const Channel& ch, const ImaginaryAxisResponse& eps_l,
                           const ImaginaryAxisResponse& eps_t, const QuadratureConfig& cfg);

// r_s = (Z_s - Z_vs)/(Z_s + Z_vs), r_p = (Z_vp - Z_p)/(Z_vp + Z_p).
Reflection impedance_to_reflection(const Impedances& z);

// First-order surface correction in the centroid d_perp of the induced
// charge: r_p = r_p0 [1 + 2i k_v eps_t d_perp / (1 + eps_t k_v^2 / Q^2)].
// Requires Q > 0.
complex feibelman_rp(const Channel& ch, complex eps_t, complex r_p0, complex d_perp);

// d_perp = -i / k_l of the hydrodynamic metal.
complex hydrodynamic_dperp(const Channel& ch, const MaterialParams& p);

// Centroid of a sampled induced charge density by the trapezoidal rule.
// Throws IllConditionedError when the net charge is negligible.
complex centroid_dperp(std::span<const double> z, std::span<const complex> delta_rho);

namespace imaginary_axis {

struct RealReflection {
  double r_s;
  double r_p;
};

RealReflection fresnel_local(double Q, double xi, double eps_t);
double hydrodynamic_rp(double Q, double xi, const MaterialParams& p);
// Real d_perp only; on the imaginary axis the correction factor is
// 1 + 2 kappa eps d Q^2 / (eps kappa^2 - Q^2).
double feibelman_rp(double Q, double xi, double eps_t, double r_p0, double d_perp);
// -1 / kappa_l with kappa_l = sqrt(Q^2 + (xi^2 + gamma xi + omega_p^2)/beta^2).
double hydrodynamic_dperp(double Q, double xi, const MaterialParams& p);

}  // namespace imaginary_axis

}  // namespace nlcasimir
