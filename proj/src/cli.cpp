#include "nlcasimir/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlcasimir/constants.hpp"
#include "nlcasimir/error.hpp"
#include "nlcasimir/lifshitz.hpp"
#include "nlcasimir/material_config.hpp"

namespace nlcasimir::cli {

namespace {

const std::map<std::string, Scenario> kScenarios = {
    {"force-curve", Scenario::ForceCurve},
    {"delta-curve", Scenario::DeltaCurve},
    {"feibelman-compare", Scenario::FeibelmanCompare},
    {"reflectivity-scan", Scenario::ReflectivityScan},
    {"dielectric-scan", Scenario::DielectricScan},
};

std::string scenario_name(Scenario s) {
  for (const auto& [name, value] : kScenarios) {
    if (value == s) return name;
  }
  return "unknown";
}

MaterialParams require_material(const RunSpec& spec) {
  if (!spec.material) throw ConfigError("--material is required for this scenario");
  return load_material(*spec.material);
}

MirrorKind mirror_kind(const RunSpec& spec) {
  const std::string& m = spec.model;
  if (m == "local") return LocalFresnel{};
  if (m == "hydro") return HydrodynamicClosedForm{};
  if (m == "scib-hydro") return Scib{Scib::Longitudinal::Hydrodynamic};
  if (m == "scib-lindhard") return Scib{Scib::Longitudinal::Lindhard};
  if (m == "feibelman") {
    if (!spec.dperp) throw ConfigError("--dperp is required with --model feibelman");
    const std::string& d = *spec.dperp;
    if (d == "hydro") return Feibelman{Feibelman::HydrodynamicCentroid{}};
    std::size_t used = 0;
    try {
      const double angstrom = std::stod(d, &used);
      if (used == d.size()) {
        if (!std::isfinite(angstrom)) throw ConfigError("--dperp must be finite");
        return Feibelman{angstrom * constants::angstrom};
      }
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
      throw ConfigError("--dperp: value out of range");
    }
    return Feibelman{load_dperp_table(d)};
  }
  throw ConfigError("--model must be one of local|hydro|scib-hydro|scib-lindhard|feibelman, got '" + m + "'");
}

std::vector<double> separations(const RunSpec& spec, const std::optional<MaterialParams>& material) {
  if (spec.xmin || spec.xmax) {
    if (!material) throw ConfigError("--xmin/--xmax need --material (for omega_p)");
    std::vector<double> grid = log_grid(*spec.xmin, *spec.xmax, spec.points);
    for (double& x : grid) x = separation_from_dimensionless(x, *material);
    return grid;
  }
  std::vector<double> grid = log_grid(*spec.lmin_nm, *spec.lmax_nm, spec.points);
  for (double& L : grid) L *= constants::nanometer;
  return grid;
}

double dimensionless_or_nan(double L, const std::optional<MaterialParams>& material) {
  return material ? dimensionless_separation(L, *material) : std::nan("");
}

ForceRow row_from(const CurvePoint& pt, const std::optional<MaterialParams>& material) {
  const double nan = std::nan("");
  const bool local_ok = pt.local.pressure != 0.0 || pt.ok;
  ForceRow row{pt.L / constants::nanometer,
               dimensionless_or_nan(pt.L, material),
               local_ok ? pt.local.pressure : nan,
               pt.ok ? pt.nonlocal.pressure : nan,
               pt.ok ? pt.delta : nan,
               local_ok ? pt.local.error_estimate : nan,
               pt.ok ? pt.nonlocal.error_estimate : nan};
  return row;
}

struct Outcome {
  std::size_t points = 0;
  double max_error = 0.0;
  bool partial = false;
};

void account(Outcome& o, const ForceCurve& curve) {
  for (const auto& pt : curve.points) {
    ++o.points;
    if (!pt.ok) {
      o.partial = true;
      continue;
    }
    o.max_error = std::max({o.max_error, pt.local.error_estimate, pt.nonlocal.error_estimate});
  }
}

Table curve_table(const ForceCurve& curve, const std::optional<MaterialParams>& material) {
  std::vector<ForceRow> rows;
  rows.reserve(curve.points.size());
  for (const auto& pt : curve.points) rows.push_back(row_from(pt, material));
  return force_table(rows);
}

Outcome run_force_curve(const RunSpec& spec, const QuadratureConfig& quad) {
  std::optional<MaterialParams> material;
  if (spec.material) material = load_material(*spec.material);
  if (!spec.perfect_mirror && !material) throw ConfigError("--material is required unless --perfect-mirror");
  const MirrorModel model{spec.perfect_mirror ? MirrorKind{PerfectConductor{}} : mirror_kind(spec),
                          material.value_or(MaterialParams{})};
  const std::vector<double> Ls = separations(spec, material);

  // Single-model sweep: the model's pressure fills both force columns.
  ForceCurve curve;
  curve.points.resize(Ls.size());
  for (std::size_t i = 0; i < Ls.size(); ++i) {
    CurvePoint& pt = curve.points[i];
    pt.L = Ls[i];
    try {
      pt.nonlocal = casimir_pressure(Ls[i], model, model, quad);
      pt.local = pt.nonlocal;
      pt.delta = 0.0;
      pt.ok = pt.nonlocal.converged;
    } catch (const std::exception& ex) {
      pt.error = ex.what();
    }
  }
  Outcome o;
  account(o, curve);
  emit_table(curve_table(curve, material), spec.format, spec.out);
  return o;
}

Outcome run_delta_curve(const RunSpec& spec, const QuadratureConfig& quad) {
  const MaterialParams material = require_material(spec);
  const auto Ls = separations(spec, material);
  const ForceCurve curve = nonlocal_correction_curve(Ls, material, mirror_kind(spec), {quad, spec.threads});
  Outcome o;
  account(o, curve);
  emit_table(curve_table(curve, material), spec.format, spec.out);
  return o;
}

Outcome run_feibelman_compare(const RunSpec& spec, const QuadratureConfig& quad) {
  if (spec.out == "-") throw ConfigError("--out must be a file path for feibelman-compare (two tables are written)");
  const MaterialParams material = require_material(spec);
  const auto Ls = separations(spec, material);
  const FeibelmanComparison cmp = feibelman_vs_exact_curve(Ls, material, {quad, spec.threads});
  Outcome o;
  account(o, cmp.exact);
  account(o, cmp.long_wavelength);
  const auto [exact_path, lw_path] = comparison_paths(spec.out);
  emit_table(curve_table(cmp.exact, material), spec.format, exact_path);
  emit_table(curve_table(cmp.long_wavelength, material), spec.format, lw_path);
  return o;
}

Outcome run_reflectivity_scan(const RunSpec& spec, const QuadratureConfig& quad) {
  const MaterialParams material = require_material(spec);
  if (!(spec.energy_eV > 0.0)) throw ConfigError("--energy must be > 0");
  const double xi = constants::ev_to_rad_per_s(spec.energy_eV);
  const auto local = make_reflection_provider({LocalFresnel{}, material}, quad);
  const auto model = make_reflection_provider({mirror_kind(spec), material}, quad);
  Table t{{"Q_per_nm", "r_s_local", "r_p_local", "r_s_model", "r_p_model"}, {}};
  for (const double q_nm : log_grid(spec.qmin_per_nm, spec.qmax_per_nm, spec.points)) {
    const double Q = q_nm / constants::nanometer;
    const auto a = local(Q, xi);
    const auto b = model(Q, xi);
    t.rows.push_back({q_nm, a.r_s, a.r_p, b.r_s, b.r_p});
  }
  emit_table(t, spec.format, spec.out);
  return {t.rows.size(), 0.0, false};
}

Outcome run_dielectric_scan(const RunSpec& spec) {
  const MaterialParams material = require_material(spec);
  if (!(spec.k_per_nm > 0.0)) throw ConfigError("--k must be > 0");
  if (!(spec.q_per_nm >= 0.0)) throw ConfigError("--q must be >= 0");
  const double k = spec.k_per_nm / constants::nanometer;
  const double Q = spec.q_per_nm / constants::nanometer;
  Table t{{"hbar_xi_eV", "eps_t_drude", "eps_l_hydro", "eps_l_lindhard", "r_s", "r_p"}, {}};
  if (material.exciton) t.columns.push_back("eps_excitonic");
  for (const double energy : log_grid(spec.emin_eV, spec.emax_eV, spec.points)) {
    const double xi = constants::ev_to_rad_per_s(energy);
    const double eps_t = imaginary_axis::drude_transverse(material, xi);
    const auto r = imaginary_axis::fresnel_local(Q, xi, eps_t);
    std::vector<double> row = {energy,
                               eps_t,
                               imaginary_axis::hydrodynamic_longitudinal(material, k, xi),
                               imaginary_axis::lindhard_longitudinal(material, k, xi),
                               r.r_s,
                               r.r_p};
    if (material.exciton) row.push_back(imaginary_axis::excitonic_lorentz(material, k, xi));
    t.rows.push_back(std::move(row));
  }
  emit_table(t, spec.format, spec.out);
  return {t.rows.size(), 0.0, false};
}

}  // namespace

void RunSpec::validate() const {
  if (points < 2) throw ConfigError("--points must be >= 2");
  if (!(rel_tol > 0.0)) throw ConfigError("--rel-tol must be > 0");
  if (max_subdivisions < 1) throw ConfigError("--max-subdivisions must be >= 1");
  const bool curve = scenario == Scenario::ForceCurve || scenario == Scenario::DeltaCurve ||
                     scenario == Scenario::FeibelmanCompare;
  if (curve) {
    const bool dimensional = lmin_nm || lmax_nm;
    const bool dimensionless = xmin || xmax;
    if (dimensional && dimensionless) throw ConfigError("give either --lmin/--lmax or --xmin/--xmax, not both");
    if (dimensional) {
      if (!lmin_nm || !lmax_nm) throw ConfigError("--lmin and --lmax must be given together");
      if (!(*lmin_nm > 0.0 && *lmax_nm > *lmin_nm)) throw ConfigError("--lmin/--lmax: need 0 < lmin < lmax");
    } else if (dimensionless) {
      if (!xmin || !xmax) throw ConfigError("--xmin and --xmax must be given together");
      if (!(*xmin > 0.0 && *xmax > *xmin)) throw ConfigError("--xmin/--xmax: need 0 < xmin < xmax");
    } else {
      throw ConfigError("a separation range is required: --lmin/--lmax (nm) or --xmin/--xmax");
    }
  }
  if (scenario == Scenario::DielectricScan && !(emin_eV > 0.0 && emax_eV > emin_eV)) {
    throw ConfigError("--emin/--emax: need 0 < emin < emax");
  }
  if (scenario == Scenario::ReflectivityScan && !(qmin_per_nm > 0.0 && qmax_per_nm > qmin_per_nm)) {
    throw ConfigError("--qmin/--qmax: need 0 < qmin < qmax");
  }
}

std::optional<RunSpec> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  RunSpec spec;
  CLI::App app{"Casimir pressure between spatially dispersive mirrors", "nlcasimir"};
  std::string scenario;
  std::string format = "csv";
  std::string material;
  std::string out_path = "-";
  app.add_option("--scenario", scenario, "force-curve|delta-curve|feibelman-compare|reflectivity-scan|dielectric-scan")
      ->required();
  app.add_option("--material", material, "material file (.toml or .json)");
  app.add_option("--model", spec.model, "local|hydro|scib-hydro|scib-lindhard|feibelman");
  app.add_flag("--perfect-mirror", spec.perfect_mirror, "force-curve with r_s = -1, r_p = 1");
  app.add_option("--dperp", spec.dperp, "d_perp in angstrom, 'hydro', or table path");
  app.add_option("--lmin", spec.lmin_nm, "smallest separation, nm");
  app.add_option("--lmax", spec.lmax_nm, "largest separation, nm");
  app.add_option("--xmin", spec.xmin, "smallest L omega_p / c");
  app.add_option("--xmax", spec.xmax, "largest L omega_p / c");
  app.add_option("--points", spec.points, "grid points");
  app.add_option("--out", out_path, "output path, '-' for stdout");
  app.add_option("--format", format, "csv|json");
  app.add_option("--rel-tol", spec.rel_tol, "quadrature relative tolerance");
  app.add_option("--max-subdivisions", spec.max_subdivisions, "quadrature panel budget per integral");
  app.add_option("--threads", spec.threads, "worker threads for curve points");
  app.add_option("--emin", spec.emin_eV, "dielectric-scan: smallest hbar xi, eV");
  app.add_option("--emax", spec.emax_eV, "dielectric-scan: largest hbar xi, eV");
  app.add_option("--k", spec.k_per_nm, "dielectric-scan: wave-vector for eps_l, 1/nm");
  app.add_option("--q", spec.q_per_nm, "dielectric-scan: Q for the reflectivities, 1/nm");
  app.add_option("--energy", spec.energy_eV, "reflectivity-scan: hbar xi, eV");
  app.add_option("--qmin", spec.qmin_per_nm, "reflectivity-scan: smallest Q, 1/nm");
  app.add_option("--qmax", spec.qmax_per_nm, "reflectivity-scan: largest Q, 1/nm");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  const auto it = kScenarios.find(scenario);
  if (it == kScenarios.end()) throw ConfigError("--scenario: unknown scenario '" + scenario + "'");
  spec.scenario = it->second;
  if (!material.empty()) spec.material = material;
  spec.out = out_path;
  spec.format = parse_format(format);
  spec.validate();
  return spec;
}

std::pair<std::filesystem::path, std::filesystem::path> comparison_paths(const std::filesystem::path& out) {
  const auto parent = out.parent_path();
  const auto stem = out.stem().string();
  const auto ext = out.extension().string();
  return {parent / (stem + "_exact" + ext), parent / (stem + "_long_wavelength" + ext)};
}

int run(const RunSpec& spec, std::ostream& diagnostics) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  QuadratureConfig quad;
  quad.rel_tol = spec.rel_tol;
  quad.max_subdivisions = spec.max_subdivisions;

  Outcome outcome;
  switch (spec.scenario) {
    case Scenario::ForceCurve: outcome = run_force_curve(spec, quad); break;
    case Scenario::DeltaCurve: outcome = run_delta_curve(spec, quad); break;
    case Scenario::FeibelmanCompare: outcome = run_feibelman_compare(spec, quad); break;
    case Scenario::ReflectivityScan: outcome = run_reflectivity_scan(spec, quad); break;
    case Scenario::DielectricScan: outcome = run_dielectric_scan(spec); break;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  const nlohmann::json summary = {{"scenario", scenario_name(spec.scenario)},
                                  {"points", outcome.points},
                                  {"max_error_estimate", outcome.max_error},
                                  {"wall_time", elapsed.count()}};
  diagnostics << summary.dump() << '\n';
  return outcome.partial ? 2 : 0;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& diagnostics) {
  try {
    const auto spec = parse_args(args, out);
    if (!spec) return 0;
    return run(*spec, diagnostics);
  } catch (const Error& e) {
    diagnostics << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace nlcasimir::cli
