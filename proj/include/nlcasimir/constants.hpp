#pragma once

// CODATA 2018 values, SI units.
namespace nlcasimir::constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double c = 299792458.0;                  // m / s
inline constexpr double e = 1.602176634e-19;              // C
inline constexpr double m_e = 9.1093837015e-31;           // kg
inline constexpr double epsilon0 = 8.8541878128e-12;      // F / m
inline constexpr double bohr_radius = 5.29177210903e-11;  // m
inline constexpr double eV = 1.602176634e-19;             // J

inline constexpr double angstrom = 1e-10;
inline constexpr double nanometer = 1e-9;

// Angular frequency corresponding to an energy in eV.
constexpr double ev_to_rad_per_s(double energy_ev) { return energy_ev * eV / hbar; }
constexpr double rad_per_s_to_ev(double omega) { return omega * hbar / eV; }

}  // namespace nlcasimir::constants
