#include <doctest.h>

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "nlcasimir/cli.hpp"
#include "nlcasimir/constants.hpp"
#include "nlcasimir/error.hpp"
#include "nlcasimir/lifshitz.hpp"
#include "nlcasimir/material_config.hpp"
#include "nlcasimir/table.hpp"

using namespace nlcasimir;
namespace fs = std::filesystem;
namespace C = nlcasimir::constants;

namespace {

const fs::path kData = NLCASIMIR_DATA_DIR;

fs::path scratch_dir() {
  static std::atomic<int> counter{0};
  const fs::path dir = fs::temp_directory_path() /
                       ("nlcasimir_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

struct Run {
  int status;
  std::string out;
  std::string diagnostics;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream diag;
  const int status = cli::main_entry(args, out, diag);
  return {status, out.str(), diag.str()};
}

std::string gold() { return (kData / "gold.toml").string(); }

}  // namespace

TEST_CASE("CSV round trip is byte-identical") {
  Table t = force_table({{10.0, 0.456, 1.25e4, 1.2e4, -0.04, 1e-4, 1.1e-4},
                         {100.0, 4.56, 5.676, 5.657, -0.0033, 2.3e-8, std::nan("")}});
  const std::string csv = to_csv(t);
  CHECK(to_csv(parse_csv(csv)) == csv);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "L_nm,L_omega_p_over_c,F_local_Pa,F_nonlocal_Pa,delta_F_over_F,err_local,err_nonlocal");
}

TEST_CASE("17 significant digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(std::nan("")) == "nan");
  const double v = 1.0 / 3.0;
  CHECK(std::stod(format_number(v)) == v);
}

TEST_CASE("empty table gives a header-only CSV") {
  CHECK(to_csv(force_table({})) ==
        "L_nm,L_omega_p_over_c,F_local_Pa,F_nonlocal_Pa,delta_F_over_F,err_local,err_nonlocal\n");
}

TEST_CASE("JSON mirrors columns as equal-length arrays") {
  Table t = force_table({{1, 2, 3, 4, 5, 6, 7}, {8, 9, 10, 11, 12, 13, std::nan("")}});
  const auto doc = nlohmann::json::parse(to_json(t));
  CHECK(doc.size() == 7);
  for (const auto& name : force_columns()) {
    REQUIRE(doc.contains(name));
    CHECK(doc[name].size() == 2);
  }
  CHECK(doc["err_nonlocal"][1].is_null());
  CHECK(doc["L_nm"][1] == 8.0);
}

TEST_CASE("ragged tables are rejected") {
  Table t{{"a", "b"}, {{1.0}}};
  CHECK_THROWS_AS(to_csv(t), ConfigError);
  CHECK_THROWS_AS(parse_csv("a,b\n1,x\n"), ConfigError);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("material files: TOML and JSON agree") {
  const auto a = load_material(kData / "gold.toml");
  const auto b = load_material(kData / "gold.json");
  CHECK(a == b);
  CHECK(a.omega_p == doctest::Approx(C::ev_to_rad_per_s(9.0)));
  CHECK(a.beta2 == doctest::Approx(0.6 * 1.4e6 * 1.4e6));
}

TEST_CASE("material files: optional keys and Wigner-Seitz") {
  const auto p = parse_material_toml(
      "omega_p_eV = 9.0\ngamma_eV = 0.0\nv_F_m_per_s = 1e6\nbeta2_m2_per_s2 = 1e12\neps_inf = 2.0\n"
      "[excitonic]\nE_g_eV = 3.0\nE_b_eV = 0.1\nmass_m_e = 0.5\nomega_p_eV = 4.0\n");
  CHECK(p.beta2 == 1e12);
  CHECK(p.eps_inf == 2.0);
  REQUIRE(p.exciton);
  CHECK(p.exciton->gap_energy == doctest::Approx(3.0 * C::eV));
  CHECK(p.exciton->weight == doctest::Approx(std::pow(C::ev_to_rad_per_s(4.0), 2)));

  const auto ws = parse_material_json(R"({"r_s_bohr": 3.0})");
  CHECK(ws == MaterialParams::from_wigner_seitz(3.0));
  CHECK_THROWS_AS(parse_material_json(R"({"r_s_bohr": 3.0, "omega_p_eV": 9})"), ConfigError);
}

TEST_CASE("material files: errors name the key") {
  auto message = [](auto&& f) {
    try {
      f();
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message([] { parse_material_toml("omega_p_eV = 9\ngamma_eV = 0\nv_F_m_per_s = 1e6\ncolour = 1\n"); })
            .find("colour") != std::string::npos);
  CHECK(message([] { parse_material_json(R"({"omega_p_eV": 9, "gamma_eV": 0, "v_F_m_per_s": 1e6,
                                             "excitonic": {"E_g_eV": 3, "spin": 1}})"); })
            .find("excitonic.spin") != std::string::npos);
  CHECK(message([] { parse_material_json(R"({"omega_p_eV": "nine", "gamma_eV": 0, "v_F_m_per_s": 1e6})"); })
            .find("omega_p_eV") != std::string::npos);
  CHECK(message([] { parse_material_toml("gamma_eV = 0\nv_F_m_per_s = 1e6\n"); }).find("omega_p_eV") !=
        std::string::npos);
  CHECK_THROWS_AS(parse_material_json("{not json"), ConfigError);
  CHECK_THROWS_AS(load_material(kData / "missing.toml"), ConfigError);
  CHECK_THROWS_AS(load_material(kData / "gold.yaml"), ConfigError);
}

TEST_CASE("d_perp table files") {
  const auto dir = scratch_dir();
  write(dir / "d.csv", "hbar_xi_eV,d_perp_angstrom\n1,0.5\n10,-0.25\n");
  const auto t = load_dperp_table(dir / "d.csv");
  REQUIRE(t.xi.size() == 2);
  CHECK(t.xi[1] == doctest::Approx(C::ev_to_rad_per_s(10.0)));
  CHECK(t.d_perp[1] == doctest::Approx(-0.25 * C::angstrom));
  write(dir / "bad.csv", "xi,d\n1,2\n");
  CHECK_THROWS_AS(load_dperp_table(dir / "bad.csv"), ConfigError);
  write(dir / "bad2.csv", "hbar_xi_eV,d_perp_angstrom\n1,two\n");
  CHECK_THROWS_AS(load_dperp_table(dir / "bad2.csv"), ConfigError);
  fs::remove_all(dir);
}

TEST_CASE("argument parsing") {
  std::ostringstream help;
  const auto spec = cli::parse_args({"--scenario", "delta-curve", "--material", gold(), "--xmin", "0.1", "--xmax",
                                     "10", "--points", "7", "--format", "json", "--rel-tol", "1e-7"},
                                    help);
  REQUIRE(spec);
  CHECK(spec->scenario == cli::Scenario::DeltaCurve);
  CHECK(spec->points == 7);
  CHECK(spec->format == TableFormat::Json);
  CHECK(spec->rel_tol == 1e-7);
  CHECK(spec->xmin == 0.1);
  CHECK(spec->max_subdivisions == 200);

  CHECK_FALSE(cli::parse_args({"--help"}, help));
  CHECK(help.str().find("--scenario") != std::string::npos);

  auto fails_naming = [](std::vector<std::string> args, const std::string& field) {
    const auto r = run_cli(std::move(args));
    CHECK(r.status == 1);
    CHECK(r.diagnostics.find(field) != std::string::npos);
  };
  fails_naming({"--scenario", "delta-curve", "--material", gold(), "--lmin", "abc", "--lmax", "2"}, "--lmin");
  fails_naming({"--scenario", "sideways"}, "--scenario");
  fails_naming({"--scenario", "delta-curve", "--material", gold(), "--lmin", "5", "--lmax", "2"}, "--lmin");
  fails_naming({"--scenario", "delta-curve", "--material", gold(), "--lmin", "1", "--lmax", "2", "--points", "1"},
               "--points");
  fails_naming({"--scenario", "delta-curve", "--material", gold()}, "--lmin");
  fails_naming({"--scenario", "delta-curve", "--material", gold(), "--lmin", "1", "--lmax", "2", "--model", "magic"},
               "--model");
  fails_naming({"--scenario", "delta-curve", "--material", gold(), "--lmin", "1", "--lmax", "2", "--model",
                "feibelman"},
               "--dperp");
  fails_naming({"--scenario", "delta-curve", "--lmin", "1", "--lmax", "2"}, "--material");
  fails_naming({"--scenario", "delta-curve", "--material", gold(), "--lmin", "1", "--lmax", "2", "--bogus"},
               "--bogus");
}

TEST_CASE("unknown material key exits 1 naming the key") {
  const auto dir = scratch_dir();
  write(dir / "m.toml", "omega_p_eV = 9.0\ngamma_eV = 0.035\nv_F_m_per_s = 1.4e6\nplasma = 2\n");
  const auto r = run_cli({"--scenario", "delta-curve", "--material", (dir / "m.toml").string(), "--lmin", "10",
                          "--lmax", "100", "--points", "2"});
  CHECK(r.status == 1);
  CHECK(r.diagnostics.find("plasma") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("unwritable output exits 1") {
  const auto r = run_cli({"--scenario", "dielectric-scan", "--material", gold(), "--points", "2", "--out",
                          "/nonexistent-dir/x.csv"});
  CHECK(r.status == 1);
  CHECK(r.diagnostics.find("--out") != std::string::npos);
}

TEST_CASE("delta-curve over the Fig. 1 axis range") {
  const auto dir = scratch_dir();
  const auto out = dir / "delta.csv";
  const auto r = run_cli({"--scenario", "delta-curve", "--material", gold(), "--model", "hydro", "--xmin", "0.01",
                          "--xmax", "100", "--points", "81", "--out", out.string(), "--threads", "4"});
  REQUIRE(r.status == 0);
  const auto summary = nlohmann::json::parse(r.diagnostics);
  CHECK(summary["scenario"] == "delta-curve");
  CHECK(summary["points"] == 81);
  CHECK(summary["max_error_estimate"].get<double>() > 0.0);
  CHECK(summary.contains("wall_time"));

  const Table t = parse_csv(slurp(out));
  REQUIRE(t.rows.size() == 81);
  CHECK(t.columns == force_columns());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    if (i > 0) CHECK(row[0] > t.rows[i - 1][0]);
    CHECK(row[4] < 0.0);
    // delta column equals the correction recomputed from the force columns.
    CHECK(row[4] == doctest::Approx(relative_correction(row[3], row[2])).epsilon(1e-15));
  }
  CHECK(t.rows.front()[1] == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(t.rows.back()[1] == doctest::Approx(100.0).epsilon(1e-15));
  fs::remove_all(dir);
}

TEST_CASE("identical runs give byte-identical output") {
  const auto dir = scratch_dir();
  std::vector<std::string> outputs;
  for (const char* threads : {"1", "3"}) {
    const auto out = dir / (std::string("run") + threads + ".csv");
    const auto r = run_cli({"--scenario", "delta-curve", "--material", gold(), "--lmin", "1", "--lmax", "1000",
                            "--points", "9", "--threads", threads, "--out", out.string()});
    REQUIRE(r.status == 0);
    outputs.push_back(slurp(out));
  }
  CHECK(outputs[0] == outputs[1]);
  fs::remove_all(dir);
}

TEST_CASE("force-curve with perfect mirrors") {
  const auto dir = scratch_dir();
  const auto out = dir / "pm.csv";
  const auto r = run_cli({"--scenario", "force-curve", "--perfect-mirror", "--lmin", "1", "--lmax", "10000",
                          "--points", "5", "--out", out.string()});
  REQUIRE(r.status == 0);
  const Table t = parse_csv(slurp(out));
  REQUIRE(t.rows.size() == 5);
  for (const auto& row : t.rows) {
    const double L = row[0] * C::nanometer;
    CHECK(std::isnan(row[1]));
    CHECK(std::abs(row[3] / perfect_mirror_pressure(L) - 1.0) < 1e-4);
    CHECK(row[4] == 0.0);
  }
  fs::remove_all(dir);
}

TEST_CASE("feibelman-compare writes two tables") {
  const auto dir = scratch_dir();
  const auto out = dir / "cmp.csv";
  const auto r = run_cli({"--scenario", "feibelman-compare", "--material", gold(), "--xmin", "0.05", "--xmax", "50",
                          "--points", "3", "--out", out.string()});
  REQUIRE(r.status == 0);
  const auto [exact, lw] = cli::comparison_paths(out);
  CHECK(exact.filename() == "cmp_exact.csv");
  CHECK(lw.filename() == "cmp_long_wavelength.csv");
  const Table a = parse_csv(slurp(exact));
  const Table b = parse_csv(slurp(lw));
  CHECK(a.rows.size() == 3);
  CHECK(b.rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(a.rows[i][0] == b.rows[i][0]);
  CHECK(run_cli({"--scenario", "feibelman-compare", "--material", gold(), "--xmin", "0.05", "--xmax", "50"}).status ==
        1);
  fs::remove_all(dir);
}

TEST_CASE("dielectric-scan of a near-vacuum material reflects nothing") {
  const auto dir = scratch_dir();
  write(dir / "thin.json", R"({"omega_p_eV": 9e-6, "gamma_eV": 0.035, "v_F_m_per_s": 1.4e6})");
  const auto out = dir / "scan.json";
  const auto r = run_cli({"--scenario", "dielectric-scan", "--material", (dir / "thin.json").string(), "--points",
                          "11", "--q", "1", "--format", "json", "--out", out.string()});
  REQUIRE(r.status == 0);
  const auto doc = nlohmann::json::parse(slurp(out));
  REQUIRE(doc["r_s"].size() == 11);
  for (std::size_t i = 0; i < 11; ++i) {
    CHECK(std::abs(doc["r_s"][i].get<double>()) < 1e-6);
    CHECK(std::abs(doc["r_p"][i].get<double>()) < 1e-6);
    CHECK(doc["eps_t_drude"][i].get<double>() > 1.0);
  }
  fs::remove_all(dir);
}

TEST_CASE("reflectivity-scan compares the model with Fresnel") {
  const auto dir = scratch_dir();
  const auto out = dir / "refl.csv";
  const auto r = run_cli({"--scenario", "reflectivity-scan", "--material", gold(), "--model", "local", "--points",
                          "4", "--out", out.string()});
  REQUIRE(r.status == 0);
  const Table t = parse_csv(slurp(out));
  CHECK(t.columns == std::vector<std::string>{"Q_per_nm", "r_s_local", "r_p_local", "r_s_model", "r_p_model"});
  for (const auto& row : t.rows) {
    CHECK(row[1] == row[3]);
    CHECK(row[2] == row[4]);
  }
  fs::remove_all(dir);
}

TEST_CASE("partial curve failure exits 2 and keeps the good points") {
  const auto dir = scratch_dir();
  const auto out = dir / "partial.csv";
  const auto r = run_cli({"--scenario", "delta-curve", "--material", gold(), "--model", "feibelman", "--dperp", "50",
                          "--lmin", "0.5", "--lmax", "1000", "--points", "4", "--out", out.string()});
  CHECK(r.status == 2);
  const Table t = parse_csv(slurp(out));
  REQUIRE(t.rows.size() == 4);
  CHECK(std::isnan(t.rows.front()[4]));
  CHECK(std::isfinite(t.rows.back()[4]));
  fs::remove_all(dir);
}
