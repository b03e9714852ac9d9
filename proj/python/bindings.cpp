#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <iostream>
#include <string>
#include <vector>

#include "nlcasimir/cli.hpp"
#include "nlcasimir/constants.hpp"
#include "nlcasimir/dielectric.hpp"
#include "nlcasimir/error.hpp"
#include "nlcasimir/lifshitz.hpp"
#include "nlcasimir/material_config.hpp"
#include "nlcasimir/surface.hpp"

namespace py = pybind11;
using namespace nlcasimir;

namespace {

MirrorKind kind_from_name(const std::string& name, std::optional<double> d_perp_angstrom) {
  if (name == "local") return LocalFresnel{};
  if (name == "hydro") return HydrodynamicClosedForm{};
  if (name == "scib-hydro") return Scib{Scib::Longitudinal::Hydrodynamic};
  if (name == "scib-lindhard") return Scib{Scib::Longitudinal::Lindhard};
  if (name == "perfect") return PerfectConductor{};
  if (name == "feibelman") {
    if (d_perp_angstrom) return Feibelman{*d_perp_angstrom * constants::angstrom};
    return Feibelman{Feibelman::HydrodynamicCentroid{}};
  }
  throw ConfigError("unknown model '" + name + "'");
}

QuadratureConfig quadrature(double rel_tol) {
  QuadratureConfig cfg;
  cfg.rel_tol = rel_tol;
  return cfg;
}

py::dict curve_to_dict(const ForceCurve& curve) {
  std::vector<double> L, local, nonlocal, delta;
  std::vector<bool> ok;
  for (const auto& pt : curve.points) {
    L.push_back(pt.L);
    local.push_back(pt.local.pressure);
    nonlocal.push_back(pt.nonlocal.pressure);
    delta.push_back(pt.delta);
    ok.push_back(pt.ok);
  }
  py::dict d;
  d["L"] = L;
  d["F_local"] = local;
  d["F_nonlocal"] = nonlocal;
  d["delta"] = delta;
  d["ok"] = ok;
  return d;
}

}  // namespace

PYBIND11_MODULE(_nlcasimir, m) {
  m.doc() = "Casimir pressure between spatially dispersive metallic mirrors";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ModelError>(m, "ModelError", base.ptr());

  py::class_<MaterialParams>(m, "Material")
      .def_static("drude", &MaterialParams::drude, py::arg("omega_p"), py::arg("gamma"), py::arg("v_F"),
                  "Drude metal from SI rates (rad/s) and Fermi velocity (m/s).")
      .def_static("from_wigner_seitz", &MaterialParams::from_wigner_seitz, py::arg("r_s_bohr"),
                  py::arg("gamma") = 0.0)
      .def_static("load", [](const std::filesystem::path& p) { return load_material(p); }, py::arg("path"))
      .def_readonly("omega_p", &MaterialParams::omega_p)
      .def_readonly("gamma", &MaterialParams::gamma)
      .def_readonly("v_F", &MaterialParams::v_F)
      .def_readonly("beta2", &MaterialParams::beta2)
      .def_readonly("k_F", &MaterialParams::k_F)
      .def_property_readonly("electron_density", &MaterialParams::electron_density)
      .def("__eq__", [](const MaterialParams& a, const MaterialParams& b) { return a == b; });

  m.def("ev_to_rad_per_s", &constants::ev_to_rad_per_s);

  auto im = m.def_submodule("imaginary_axis", "Real-valued responses at omega = i xi");
  im.def("drude_transverse", &imaginary_axis::drude_transverse, py::arg("material"), py::arg("xi"));
  im.def("hydrodynamic_longitudinal", &imaginary_axis::hydrodynamic_longitudinal, py::arg("material"), py::arg("k"),
         py::arg("xi"));
  im.def("lindhard_longitudinal", &imaginary_axis::lindhard_longitudinal, py::arg("material"), py::arg("k"),
         py::arg("xi"));
  im.def(
      "fresnel_local",
      [](double Q, double xi, double eps) {
        const auto r = imaginary_axis::fresnel_local(Q, xi, eps);
        return py::make_tuple(r.r_s, r.r_p);
      },
      py::arg("Q"), py::arg("xi"), py::arg("eps_t"));
  im.def("hydrodynamic_rp", &imaginary_axis::hydrodynamic_rp, py::arg("Q"), py::arg("xi"), py::arg("material"));

  m.def("lindhard_fl", &lindhard_fl, py::arg("w"), py::arg("u"));

  m.def(
      "casimir_pressure",
      [](double L, const MaterialParams& material, const std::string& model, std::optional<double> d_perp,
         double rel_tol) {
        const MirrorModel mm{kind_from_name(model, d_perp), material};
        const auto f = casimir_pressure(L, mm, mm, quadrature(rel_tol));
        return py::make_tuple(f.pressure, f.error_estimate);
      },
      py::arg("L"), py::arg("material"), py::arg("model") = "local", py::arg("d_perp_angstrom") = py::none(),
      py::arg("rel_tol") = 1e-8, "Pressure (Pa, attraction positive) and its error estimate.");
  m.def("perfect_mirror_pressure", &perfect_mirror_pressure, py::arg("L"));
  m.def(
      "nonlocal_correction_curve",
      [](const std::vector<double>& Ls, const MaterialParams& material, const std::string& model,
         std::optional<double> d_perp, double rel_tol, unsigned threads) {
        return curve_to_dict(
            nonlocal_correction_curve(Ls, material, kind_from_name(model, d_perp), {quadrature(rel_tol), threads}));
      },
      py::arg("Ls"), py::arg("material"), py::arg("model") = "hydro", py::arg("d_perp_angstrom") = py::none(),
      py::arg("rel_tol") = 1e-8, py::arg("threads") = 1);
  m.def("separation_from_dimensionless", &separation_from_dimensionless, py::arg("x"), py::arg("material"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        py::gil_scoped_release release;
        return cli::main_entry(args, std::cout, std::cerr);
      },
      py::arg("args"), "Run the command-line tool in-process; returns the exit status.");
}
