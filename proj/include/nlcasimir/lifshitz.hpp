#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "nlcasimir/dielectric.hpp"
#include "nlcasimir/numerics.hpp"
#include "nlcasimir/surface.hpp"

namespace nlcasimir {

// ---- optical models of a mirror ----

struct LocalFresnel {
  friend bool operator==(const LocalFresnel&, const LocalFresnel&) = default;
};
struct HydrodynamicClosedForm {
  friend bool operator==(const HydrodynamicClosedForm&, const HydrodynamicClosedForm&) = default;
};
struct Scib {
  enum class Longitudinal { Hydrodynamic, Lindhard };
  Longitudinal eps_l = Longitudinal::Hydrodynamic;
  // Only the Drude transverse response is available.
  friend bool operator==(const Scib&, const Scib&) = default;
};
// Per-frequency d_perp(xi), linear in xi between nodes, constant beyond the ends.
struct DperpTable {
  std::vector<double> xi;      // rad/s, strictly increasing
  std::vector<double> d_perp;  // m
  double at(double xi_value) const;
  void validate() const;
  friend bool operator==(const DperpTable&, const DperpTable&) = default;
};
struct Feibelman {
  // Constant real centroid (m), a per-xi table, or the hydrodynamic value
  // -i/k_l evaluated per channel.
  struct HydrodynamicCentroid {
    friend bool operator==(const HydrodynamicCentroid&, const HydrodynamicCentroid&) = default;
  };
  std::variant<double, DperpTable, HydrodynamicCentroid> d_perp = 0.0;
  friend bool operator==(const Feibelman&, const Feibelman&) = default;
};
// r_s = -1, r_p = 1 at every channel.
struct PerfectConductor {
  friend bool operator==(const PerfectConductor&, const PerfectConductor&) = default;
};

using MirrorKind =
    std::variant<LocalFresnel, HydrodynamicClosedForm, Scib, Feibelman, PerfectConductor>;

struct MirrorModel {
  MirrorKind kind;
  MaterialParams material;

  std::string descriptor() const;
};

// Reflection amplitudes on the imaginary axis, (Q, xi) -> {r_s, r_p}.
using ReflectionProvider = std::function<imaginary_axis::RealReflection(double Q, double xi)>;

ReflectionProvider make_reflection_provider(const MirrorModel& model, const QuadratureConfig& cfg);

// ---- forces ----

struct ForcePoint {
  double L = 0.0;               // m
  double pressure = 0.0;        // Pa, positive = attractive
  double error_estimate = 0.0;  // Pa
  bool converged = true;
  std::string model;
};

// Zero-temperature Lifshitz pressure on the imaginary frequency axis,
//   P = (hbar / 2 pi^2) int_0^inf dxi int_0^inf dQ Q kappa
//         sum_{s,p} r1 r2 e^{-2 kappa L} / (1 - r1 r2 e^{-2 kappa L}),
// kappa = sqrt(Q^2 + xi^2/c^2). Outer integral over xi, inner over Q.
ForcePoint casimir_pressure(double L, const MirrorModel& m1, const MirrorModel& m2,
                            const QuadratureConfig& cfg = {});
ForcePoint casimir_pressure(double L, const ReflectionProvider& r1, const ReflectionProvider& r2,
                            const QuadratureConfig& cfg = {}, std::string model = "custom");

// pi^2 hbar c / (240 L^4)
double perfect_mirror_pressure(double L);

struct CurvePoint {
  double L = 0.0;
  ForcePoint local;
  ForcePoint nonlocal;
  double delta = 0.0;  // (|F_nl| - |F_l|) / |F_l|
  bool ok = false;
  std::string error;   // empty when ok
};

struct ForceCurve {
  std::vector<CurvePoint> points;
  bool complete() const;
};

// (|F_nl| - |F_l|) / |F_l|
double relative_correction(double f_nonlocal, double f_local);

struct CurveOptions {
  QuadratureConfig quadrature;
  unsigned threads = 1;
};

// Local Fresnel baseline vs the requested kind, same material on both sides.
// A failing point is flagged; the others are kept.
ForceCurve nonlocal_correction_curve(const std::vector<double>& Ls, const MaterialParams& material,
                                     const MirrorKind& nonlocal_kind, const CurveOptions& opts = {});

struct FeibelmanComparison {
  ForceCurve exact;            // hydrodynamic closed form
  ForceCurve long_wavelength;  // long-wavelength correction with d_perp = -i/k_l
};

FeibelmanComparison feibelman_vs_exact_curve(const std::vector<double>& Ls,
                                             const MaterialParams& material,
                                             const CurveOptions& opts = {});

// Separation L for a dimensionless L omega_p / c.
double separation_from_dimensionless(double x, const MaterialParams& material);
double dimensionless_separation(double L, const MaterialParams& material);

}  // namespace nlcasimir
