#include "nlcasimir/lifshitz.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <thread>

#include "nlcasimir/constants.hpp"
#include "nlcasimir/error.hpp"

namespace nlcasimir {

namespace {

constexpr double c_light = constants::c;

// Inner integrals (Q, and SCIB k_z) run tighter than the outer one so that
// their noise stays below the outer error target.
QuadratureConfig inner_config(const QuadratureConfig& cfg) {
  QuadratureConfig inner = cfg;
  inner.rel_tol = cfg.rel_tol * 0.1;
  return inner;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

double DperpTable::at(double xi_value) const {
  if (xi_value <= xi.front()) return d_perp.front();
  if (xi_value >= xi.back()) return d_perp.back();
  const auto upper = std::upper_bound(xi.begin(), xi.end(), xi_value);
  const auto i = static_cast<std::size_t>(upper - xi.begin());
  const double t = (xi_value - xi[i - 1]) / (xi[i] - xi[i - 1]);
  return d_perp[i - 1] + t * (d_perp[i] - d_perp[i - 1]);
}

void DperpTable::validate() const {
  if (xi.empty() || xi.size() != d_perp.size()) {
    throw ConfigError("d_perp table: need matching, non-empty xi and d_perp columns");
  }
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (!(xi[i] > 0.0) || !std::isfinite(d_perp[i])) throw ConfigError("d_perp table: invalid row");
    if (i > 0 && !(xi[i] > xi[i - 1])) throw ConfigError("d_perp table: xi must be strictly increasing");
  }
}

std::string MirrorModel::descriptor() const {
  return std::visit(
      overloaded{
          [](const LocalFresnel&) { return std::string("local"); },
          [](const HydrodynamicClosedForm&) { return std::string("hydro"); },
          [](const Scib& s) {
            return std::string(s.eps_l == Scib::Longitudinal::Hydrodynamic ? "scib-hydro"
                                                                           : "scib-lindhard");
          },
          [](const Feibelman& f) {
            return std::visit(overloaded{[](double d) {
                                           char buf[64];
                                           std::snprintf(buf, sizeof buf, "feibelman(d=%.6g m)", d);
                                           return std::string(buf);
                                         },
                                         [](const DperpTable&) { return std::string("feibelman(table)"); },
                                         [](const Feibelman::HydrodynamicCentroid&) {
                                           return std::string("feibelman(hydrodynamic)");
                                         }},
                              f.d_perp);
          },
          [](const PerfectConductor&) { return std::string("perfect"); },
      },
      kind);
}

ReflectionProvider make_reflection_provider(const MirrorModel& model, const QuadratureConfig& cfg) {
  if (!std::holds_alternative<PerfectConductor>(model.kind)) model.material.validate();
  const MaterialParams p = model.material;
  return std::visit(
      overloaded{
          [p](const LocalFresnel&) -> ReflectionProvider {
            return [p](double Q, double xi) {
              return imaginary_axis::fresnel_local(Q, xi, imaginary_axis::drude_transverse(p, xi));
            };
          },
          [p](const HydrodynamicClosedForm&) -> ReflectionProvider {
            return [p](double Q, double xi) {
              const double eps = imaginary_axis::drude_transverse(p, xi);
              return imaginary_axis::RealReflection{imaginary_axis::fresnel_local(Q, xi, eps).r_s,
                                                    imaginary_axis::hydrodynamic_rp(Q, xi, p)};
            };
          },
          [p, &cfg](const Scib& s) -> ReflectionProvider {
            const auto eps_t = ImaginaryAxisResponse::drude(p);
            const auto eps_l = s.eps_l == Scib::Longitudinal::Hydrodynamic
                                   ? ImaginaryAxisResponse::hydrodynamic(p)
                                   : ImaginaryAxisResponse::lindhard(p);
            const QuadratureConfig kz_cfg = inner_config(cfg);
            return [eps_t, eps_l, kz_cfg](double Q, double xi) {
              const Channel ch(Q, ComplexFrequency::imaginary(xi));
              const Reflection r = impedance_to_reflection(scib_impedances(ch, eps_l, eps_t, kz_cfg));
              return imaginary_axis::RealReflection{r.r_s.real(), r.r_p.real()};
            };
          },
          [p](const Feibelman& f) -> ReflectionProvider {
            if (const auto* table = std::get_if<DperpTable>(&f.d_perp)) table->validate();
            const auto d_perp = f.d_perp;
            return [p, d_perp](double Q, double xi) {
              const double eps = imaginary_axis::drude_transverse(p, xi);
              const auto local = imaginary_axis::fresnel_local(Q, xi, eps);
              const double d = std::visit(
                  overloaded{[](double v) { return v; },
                             [xi](const DperpTable& t) { return t.at(xi); },
                             [&](const Feibelman::HydrodynamicCentroid&) {
                               return imaginary_axis::hydrodynamic_dperp(Q, xi, p);
                             }},
                  d_perp);
              return imaginary_axis::RealReflection{
                  local.r_s, imaginary_axis::feibelman_rp(Q, xi, eps, local.r_p, d)};
            };
          },
          [](const PerfectConductor&) -> ReflectionProvider {
            return [](double, double) { return imaginary_axis::RealReflection{-1.0, 1.0}; };
          },
      },
      model.kind);
}

double perfect_mirror_pressure(double L) {
  using namespace constants;
  return pi * pi * hbar * c / (240.0 * L * L * L * L);
}

ForcePoint casimir_pressure(double L, const ReflectionProvider& r1, const ReflectionProvider& r2,
                            const QuadratureConfig& cfg, std::string model) {
  if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("casimir_pressure: L must be > 0");
  cfg.validate();
  const bool same = &r1 == &r2;
  const QuadratureConfig q_cfg = inner_config(cfg);

  const double xi_scale = 0.5 * c_light / L;
  double worst_inner_rel = 0.0;
  // An inner integral that misses its tolerance only matters through its
  // share of the outer one, bounded by its error times the local xi width.
  double unconverged_inner = 0.0;

  auto q_integrand = [&](double xi) {
    return [&, xi](double Q) {
      const auto a = r1(Q, xi);
      const auto b = same ? a : r2(Q, xi);
      const double kappa = std::hypot(Q, xi / c_light);
      const double decay = std::exp(-2.0 * kappa * L);
      double sum = 0.0;
      for (const double product : {a.r_s * b.r_s, a.r_p * b.r_p}) {
        const double x = product * decay;
        if (!(x < 1.0)) {
          throw ModelError("casimir_pressure: 1 - r1 r2 exp(-2 kappa L) <= 0 (non-passive mirrors)");
        }
        sum += x / (1.0 - x);
      }
      return Q * kappa * sum;
    };
  };

  auto xi_integrand = [&](double xi) {
    const double scale = std::max(0.5 / L, xi / c_light);
    const QuadratureResult inner = integrate_half_line(q_integrand(xi), 0.0, scale, q_cfg);
    if (!inner.converged) {
      unconverged_inner = std::max(unconverged_inner, inner.error * std::max(xi, xi_scale));
    } else if (inner.value != 0.0) {
      worst_inner_rel = std::max(worst_inner_rel, inner.error / std::abs(inner.value));
    }
    return inner.value;
  };

  const QuadratureResult outer = integrate_half_line(xi_integrand, 0.0, xi_scale, cfg);
  const double prefactor = constants::hbar / (2.0 * constants::pi * constants::pi);

  ForcePoint fp;
  fp.L = L;
  fp.pressure = prefactor * outer.value;
  fp.error_estimate = prefactor * (outer.error + unconverged_inner) + worst_inner_rel * std::abs(fp.pressure);
  fp.converged = outer.converged && unconverged_inner <= cfg.rel_tol * std::abs(outer.value);
  fp.model = std::move(model);
  return fp;
}

ForcePoint casimir_pressure(double L, const MirrorModel& m1, const MirrorModel& m2,
                            const QuadratureConfig& cfg) {
  const ReflectionProvider r1 = make_reflection_provider(m1, cfg);
  std::string name = m1.descriptor();
  const bool identical = m1.kind == m2.kind && m1.material == m2.material;
  if (identical) return casimir_pressure(L, r1, r1, cfg, std::move(name));
  const ReflectionProvider r2 = make_reflection_provider(m2, cfg);
  return casimir_pressure(L, r1, r2, cfg, name + "|" + m2.descriptor());
}

double relative_correction(double f_nonlocal, double f_local) {
  return (std::abs(f_nonlocal) - std::abs(f_local)) / std::abs(f_local);
}

bool ForceCurve::complete() const {
  return std::all_of(points.begin(), points.end(), [](const CurvePoint& p) { return p.ok; });
}

namespace {

// Evaluates `work(i)` for i in [0, n) on up to `threads` workers. Results
// are written by index, so the output does not depend on scheduling.
template <class Work>
void for_each_index(std::size_t n, unsigned threads, Work&& work) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) work(i);
    });
  }
}

void validate_grid(const std::vector<double>& Ls) {
  if (Ls.empty()) throw ConfigError("separation grid is empty");
  for (std::size_t i = 0; i < Ls.size(); ++i) {
    if (!(Ls[i] > 0.0)) throw ConfigError("separations must be > 0");
    if (i > 0 && !(Ls[i] > Ls[i - 1])) throw ConfigError("separation grid must be strictly increasing");
  }
}

std::vector<ForceCurve> curves_against_local(const std::vector<double>& Ls, const MaterialParams& material,
                                             const std::vector<MirrorKind>& kinds, const CurveOptions& opts) {
  validate_grid(Ls);
  material.validate();
  opts.quadrature.validate();
  const std::size_t n = Ls.size();
  std::vector<ForceCurve> curves(kinds.size());
  for (auto& c : curves) c.points.resize(n);

  for_each_index(n, opts.threads, [&](std::size_t i) {
    const double L = Ls[i];
    const MirrorModel local{LocalFresnel{}, material};
    ForcePoint baseline;
    std::string baseline_error;
    try {
      baseline = casimir_pressure(L, local, local, opts.quadrature);
    } catch (const std::exception& ex) {
      baseline_error = ex.what();
    }
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      CurvePoint& pt = curves[k].points[i];
      pt.L = L;
      pt.local = baseline;
      if (!baseline_error.empty()) {
        pt.error = "local baseline: " + baseline_error;
        continue;
      }
      try {
        const MirrorModel model{kinds[k], material};
        pt.nonlocal = casimir_pressure(L, model, model, opts.quadrature);
        pt.delta = relative_correction(pt.nonlocal.pressure, pt.local.pressure);
        pt.ok = pt.local.converged && pt.nonlocal.converged;
        if (!pt.ok) pt.error = "quadrature did not reach the requested tolerance";
      } catch (const std::exception& ex) {
        pt.error = ex.what();
      }
    }
  });
  return curves;
}

}  // namespace

ForceCurve nonlocal_correction_curve(const std::vector<double>& Ls, const MaterialParams& material,
                                     const MirrorKind& nonlocal_kind, const CurveOptions& opts) {
  return std::move(curves_against_local(Ls, material, {nonlocal_kind}, opts).front());
}

FeibelmanComparison feibelman_vs_exact_curve(const std::vector<double>& Ls, const MaterialParams& material,
                                             const CurveOptions& opts) {
  auto curves = curves_against_local(
      Ls, material, {HydrodynamicClosedForm{}, Feibelman{Feibelman::HydrodynamicCentroid{}}}, opts);
  return {std::move(curves[0]), std::move(curves[1])};
}

double separation_from_dimensionless(double x, const MaterialParams& material) {
  return x * c_light / material.omega_p;
}

double dimensionless_separation(double L, const MaterialParams& material) {
  return L * material.omega_p / c_light;
}

}  // namespace nlcasimir
