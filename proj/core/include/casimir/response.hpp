#pragma once

#include <complex>
#include <limits>

#include "casimir/errors.hpp"

namespace casimir {

// Parametric dielectric response on the imaginary frequency axis. All
// frequency arguments are hbar*xi in eV.
struct DielectricModel {
  enum class Kind {
    IdealMetal,
    Plasma,          // eps = 1 + wp^2/xi^2
    Drude,           // eps = 1 + wp^2/(xi(xi+gamma))
    ConstantEps,     // eps = eps0
    ConstantEpsDC,   // eps = eps0 + 4*pi*sigma0/xi
  };
  enum class Permeability { Unity, Constant };

  Kind kind = Kind::IdealMetal;
  double hwp_eV = 0.0;      // hbar*omega_p
  double hgamma_eV = 0.0;   // hbar*gamma
  double eps0 = 1.0;        // static permittivity
  double hsigma_eV = 0.0;   // hbar*4*pi*sigma0
  Permeability perm = Permeability::Unity;
  double mu0 = 1.0;

  static DielectricModel ideal_metal() { return {}; }
  static DielectricModel plasma(double hwp) {
    DielectricModel m;
    m.kind = Kind::Plasma;
    m.hwp_eV = hwp;
    return m;
  }
  static DielectricModel drude(double hwp, double hgamma) {
    DielectricModel m;
    m.kind = Kind::Drude;
    m.hwp_eV = hwp;
    m.hgamma_eV = hgamma;
    return m;
  }
  static DielectricModel constant_eps(double eps0_) {
    DielectricModel m;
    m.kind = Kind::ConstantEps;
    m.eps0 = eps0_;
    return m;
  }
  static DielectricModel constant_eps_dc(double eps0_, double hsigma) {
    DielectricModel m;
    m.kind = Kind::ConstantEpsDC;
    m.eps0 = eps0_;
    m.hsigma_eV = hsigma;
    return m;
  }
  DielectricModel& with_mu(double mu) {
    perm = Permeability::Constant;
    mu0 = mu;
    return *this;
  }

  void validate() const;

  // True when eps(i xi) varies with xi and diverges as xi -> 0, so the l=0
  // reflection must come from a dedicated limit.
  bool divergent_at_zero() const {
    return kind == Kind::Drude || kind == Kind::ConstantEpsDC ||
           kind == Kind::Plasma || kind == Kind::IdealMetal;
  }
};

// eps(i xi). Returns +inf for the ideal metal; throws DomainError at xi = 0
// for Drude and the dc-conductivity model.
double permittivity_at(const DielectricModel& model, double xi_eV);
std::complex<double> permittivity_at(const DielectricModel& model,
                                     std::complex<double> xi_eV);

double permeability_at(const DielectricModel& model, double xi_eV);

// Single-oscillator ground-state polarizability alpha0/(1 + xi^2/w0^2).
// hw0_eV = inf selects the static limit alpha(i xi) = alpha0.
struct AtomModel {
  double alpha0_um3 = 0.0;
  double hw0_eV = std::numeric_limits<double>::infinity();

  static AtomModel static_atom(double alpha0) { return {alpha0}; }
  static AtomModel oscillator(double alpha0, double hw0) {
    return {alpha0, hw0};
  }
  void validate() const;
};

double polarizability_at(const AtomModel& atom, double xi_eV);
std::complex<double> polarizability_at(const AtomModel& atom,
                                       std::complex<double> xi_eV);

// Two-dimensional free-electron-gas sheet with wave number K.
struct HydrodynamicSheet {
  double K_per_um = 0.675;  // 6.75e5 m^-1

  static HydrodynamicSheet from_per_m(double K_per_m) {
    return {K_per_m * 1e-6};
  }
  void validate() const;
};

}  // namespace casimir
