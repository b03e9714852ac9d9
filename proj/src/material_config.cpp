#include "nlcasimir/material_config.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>
#define TOML_EXCEPTIONS 1
#include <toml.hpp>

#include "nlcasimir/constants.hpp"
#include "nlcasimir/error.hpp"

namespace nlcasimir {

namespace {

using Fields = std::map<std::string, double>;

struct RawMaterial {
  Fields top;
  std::optional<Fields> excitonic;
};

const std::set<std::string> kTopKeys = {"omega_p_eV", "gamma_eV", "v_F_m_per_s", "beta2_m2_per_s2",
                                        "eps_inf", "r_s_bohr"};
const std::set<std::string> kExcitonKeys = {"E_g_eV", "E_b_eV", "mass_m_e", "omega_p_eV"};

void check_key(const std::string& key, const std::set<std::string>& allowed, const std::string& where) {
  if (!allowed.contains(key)) throw ConfigError("unknown key '" + where + key + "' in material file");
}

std::optional<double> take(const Fields& f, const std::string& key) {
  const auto it = f.find(key);
  if (it == f.end()) return std::nullopt;
  return it->second;
}

double require(const Fields& f, const std::string& key, const std::string& where = "") {
  const auto v = take(f, key);
  if (!v) throw ConfigError("missing required key '" + where + key + "' in material file");
  return *v;
}

MaterialParams build(const RawMaterial& raw) {
  using constants::ev_to_rad_per_s;
  MaterialParams p;
  const auto r_s = take(raw.top, "r_s_bohr");
  if (r_s) {
    for (const char* conflicting : {"omega_p_eV", "v_F_m_per_s"}) {
      if (raw.top.contains(conflicting)) {
        throw ConfigError(std::string("key '") + conflicting + "' conflicts with 'r_s_bohr'");
      }
    }
    p = MaterialParams::from_wigner_seitz(*r_s, ev_to_rad_per_s(take(raw.top, "gamma_eV").value_or(0.0)));
  } else {
    p = MaterialParams::drude(ev_to_rad_per_s(require(raw.top, "omega_p_eV")),
                              ev_to_rad_per_s(require(raw.top, "gamma_eV")),
                              require(raw.top, "v_F_m_per_s"));
  }
  if (const auto b = take(raw.top, "beta2_m2_per_s2")) p.beta2 = *b;
  if (const auto e = take(raw.top, "eps_inf")) p.eps_inf = *e;
  if (raw.excitonic) {
    const Fields& x = *raw.excitonic;
    const double w = ev_to_rad_per_s(require(x, "omega_p_eV", "excitonic."));
    p.exciton = ExcitonParams{require(x, "E_g_eV", "excitonic.") * constants::eV,
                              require(x, "E_b_eV", "excitonic.") * constants::eV,
                              require(x, "mass_m_e", "excitonic.") * constants::m_e, w * w};
  }
  p.validate();
  return p;
}

double json_number(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("key '" + key + "' must be a number");
  return v.get<double>();
}

double toml_number(const toml::node& v, const std::string& key) {
  if (const auto d = v.value<double>(); d && (v.is_floating_point() || v.is_integer())) return *d;
  throw ConfigError("key '" + key + "' must be a number");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

MaterialParams parse_material_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON material file: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("material file must contain an object");
  RawMaterial raw;
  for (const auto& [key, value] : doc.items()) {
    if (key == "excitonic") {
      if (!value.is_object()) throw ConfigError("key 'excitonic' must be a table");
      raw.excitonic.emplace();
      for (const auto& [xk, xv] : value.items()) {
        check_key(xk, kExcitonKeys, "excitonic.");
        (*raw.excitonic)[xk] = json_number(xv, "excitonic." + xk);
      }
      continue;
    }
    check_key(key, kTopKeys, "");
    raw.top[key] = json_number(value, key);
  }
  return build(raw);
}

MaterialParams parse_material_toml(std::string_view text) {
  toml::table doc;
  try {
    doc = toml::parse(text);
  } catch (const toml::parse_error& e) {
    throw ConfigError(std::string("malformed TOML material file: ") + std::string(e.description()));
  }
  RawMaterial raw;
  for (const auto& [k, value] : doc) {
    const std::string key(k.str());
    if (key == "excitonic") {
      const auto* table = value.as_table();
      if (!table) throw ConfigError("key 'excitonic' must be a table");
      raw.excitonic.emplace();
      for (const auto& [xk, xv] : *table) {
        const std::string xkey(xk.str());
        check_key(xkey, kExcitonKeys, "excitonic.");
        (*raw.excitonic)[xkey] = toml_number(xv, "excitonic." + xkey);
      }
      continue;
    }
    check_key(key, kTopKeys, "");
    raw.top[key] = toml_number(value, key);
  }
  return build(raw);
}

MaterialParams load_material(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".json") return parse_material_json(read_file(path));
  if (ext == ".toml") return parse_material_toml(read_file(path));
  throw ConfigError("material file '" + path.string() + "' must end in .toml or .json");
}

DperpTable load_dperp_table(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line) || line != "hbar_xi_eV,d_perp_angstrom") {
    throw ConfigError("d_perp table '" + path.string() + "' must start with header hbar_xi_eV,d_perp_angstrom");
  }
  DperpTable table;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    double energy = 0.0;
    double d = 0.0;
    try {
      if (comma == std::string::npos) throw std::invalid_argument("no comma");
      const std::string a = line.substr(0, comma);
      const std::string b = line.substr(comma + 1);
      energy = std::stod(a, &used_a);
      d = std::stod(b, &used_b);
      if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ConfigError("d_perp table '" + path.string() + "': malformed row " + std::to_string(row));
    }
    table.xi.push_back(constants::ev_to_rad_per_s(energy));
    table.d_perp.push_back(d * constants::angstrom);
  }
  table.validate();
  return table;
}

}  // namespace nlcasimir
