#pragma once

// Unit conventions used throughout: energies and (angular) frequencies are
// carried as energies in eV, lengths in micrometres, temperatures in kelvin.
// A frequency xi is always represented by hbar*xi in eV; a wave number in 1/um.

namespace casimir {

inline constexpr double pi = 3.14159265358979323846;

// hbar*c in eV*um (CODATA)
inline constexpr double hbar_c = 0.1973269804;

// Boltzmann constant in eV/K (CODATA)
inline constexpr double k_boltzmann = 8.617333e-5;

// Riemann zeta(3), zeta(4)
inline constexpr double zeta3 = 1.2020569031595943;
inline constexpr double zeta4 = 1.0823232337111382;

inline constexpr double default_fine_structure = 7.2973525693e-3;  // e^2/(hbar c)
inline constexpr double default_fermi_velocity_ratio = 1.0 / 300.0;

// First Matsubara energy 2*pi*k_B*T*l in eV.
inline constexpr double matsubara_energy(double T_kelvin, long l) {
  return 2.0 * pi * k_boltzmann * T_kelvin * static_cast<double>(l);
}

}  // namespace casimir
