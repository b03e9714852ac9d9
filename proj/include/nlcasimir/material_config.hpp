#pragma once

#include <filesystem>
#include <string_view>

#include "nlcasimir/dielectric.hpp"
#include "nlcasimir/lifshitz.hpp"

namespace nlcasimir {

// Material file, TOML or JSON by extension (.toml / .json). Keys:
//   omega_p_eV, gamma_eV, v_F_m_per_s     Drude-metal form (all three required)
//   r_s_bohr                              free-electron form (replaces omega_p_eV and v_F)
//   beta2_m2_per_s2, eps_inf              optional overrides
//   [excitonic] E_g_eV, E_b_eV, mass_m_e, omega_p_eV
// Unknown keys are rejected.
MaterialParams load_material(const std::filesystem::path& path);
MaterialParams parse_material_json(std::string_view text);
MaterialParams parse_material_toml(std::string_view text);

// CSV with header `hbar_xi_eV,d_perp_angstrom`.
DperpTable load_dperp_table(const std::filesystem::path& path);

}  // namespace nlcasimir
