#pragma once

#include "casimir/parallel.hpp"
#include "casimir/reflection.hpp"

namespace casimir {

// Two parallel planar structures at separation a (um). Free energies are per
// unit area, in eV/um^2.
struct PlatePlateSystem {
  ReflectionProvider plate1;
  ReflectionProvider plate2;
  double a_um = 1.0;

  void validate() const {
    if (!(a_um > 0.0)) throw ConfigError("separation a must be > 0");
  }
};

// Ground-state atom above a planar structure; energies in eV.
struct AtomPlateSystem {
  AtomModel atom;
  ReflectionProvider plate;
  double a_um = 1.0;

  void validate() const {
    atom.validate();
    if (!(a_um > 0.0)) throw ConfigError("separation a must be > 0");
  }
};

// Thermal correction F(T) - E(0) split into the part carried by Matsubara
// summation alone (implicit) and the parts carried by the temperature
// dependence of the reflection coefficients (explicit, l=0 and l>=1).
struct FreeEnergyBreakdown {
  double total_correction = 0.0;
  double implicit = 0.0;
  double explicit_l0 = 0.0;
  double explicit_lge1 = 0.0;
};

// Lifshitz free energy per unit area at temperature T (K).
double casimir_free_energy(const PlatePlateSystem& system, double T_kelvin,
                           double rel_tol, ThreadPool* pool = nullptr);

// Zero-temperature energy per unit area (continuous frequency integral over
// the T=0 reflection coefficients).
double casimir_energy_T0(const PlatePlateSystem& system, double rel_tol);

// Casimir-Polder free energy of the atom-plate system at T (K).
double casimir_polder_free_energy(const AtomPlateSystem& system,
                                  double T_kelvin, double rel_tol,
                                  ThreadPool* pool = nullptr);

double casimir_polder_energy_T0(const AtomPlateSystem& system, double rel_tol);

// Cancellation-safe decomposition of F(T) - E(0): the implicit part is the
// Abel-Plana sum-minus-integral of the T=0 coefficient spectrum; the
// explicit parts integrate the exact logarithm difference built from
// r(T) - r(0), never a difference of two large energies.
FreeEnergyBreakdown thermal_correction_breakdown(const PlatePlateSystem& system,
                                                 double T_kelvin,
                                                 double rel_tol,
                                                 ThreadPool* pool = nullptr);
FreeEnergyBreakdown thermal_correction_breakdown(const AtomPlateSystem& system,
                                                 double T_kelvin,
                                                 double rel_tol,
                                                 ThreadPool* pool = nullptr);

// Sphere-plate force in the proximity force approximation, 2 pi R F_C(a,T),
// in eV/um. Warns on stderr when a/R > 0.1.
double pfa_sphere_force(const PlatePlateSystem& system, double T_kelvin,
                        double R_um, double rel_tol,
                        ThreadPool* pool = nullptr);

}  // namespace casimir
