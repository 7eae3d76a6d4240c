#include "casimir/response.hpp"

#include <cmath>
#include <limits>

namespace casimir {

void DielectricModel::validate() const {
  switch (kind) {
    case Kind::Plasma:
      if (!(hwp_eV > 0.0)) throw ConfigError("plasma: hwp must be > 0");
      break;
    case Kind::Drude:
      if (!(hwp_eV > 0.0)) throw ConfigError("drude: hwp must be > 0");
      if (hgamma_eV < 0.0) throw ConfigError("drude: hgamma must be >= 0");
      break;
    case Kind::ConstantEps:
      if (!(eps0 >= 1.0)) throw ConfigError("dielectric: eps0 must be >= 1");
      break;
    case Kind::ConstantEpsDC:
      if (!(eps0 >= 1.0)) throw ConfigError("dielectric_dc: eps0 must be >= 1");
      if (hsigma_eV < 0.0)
        throw ConfigError("dielectric_dc: sigma0 must be >= 0");
      break;
    case Kind::IdealMetal:
      break;
  }
  if (perm == Permeability::Constant && !(mu0 > 0.0))
    throw ConfigError("permeability: mu0 must be > 0");
}

double permittivity_at(const DielectricModel& m, double xi) {
  switch (m.kind) {
    case DielectricModel::Kind::IdealMetal:
      return std::numeric_limits<double>::infinity();
    case DielectricModel::Kind::ConstantEps:
      return m.eps0;
    case DielectricModel::Kind::Plasma:
      if (xi == 0.0) return std::numeric_limits<double>::infinity();
      return 1.0 + (m.hwp_eV / xi) * (m.hwp_eV / xi);
    case DielectricModel::Kind::Drude:
      if (!(xi > 0.0))
        throw DomainError("drude permittivity diverges at xi = 0");
      return 1.0 + m.hwp_eV * m.hwp_eV / (xi * (xi + m.hgamma_eV));
    case DielectricModel::Kind::ConstantEpsDC:
      if (!(xi > 0.0))
        throw DomainError("dc permittivity diverges at xi = 0");
      return m.eps0 + m.hsigma_eV / xi;
  }
  throw DomainError("permittivity_at: unknown model");
}

std::complex<double> permittivity_at(const DielectricModel& m,
                                     std::complex<double> xi) {
  switch (m.kind) {
    case DielectricModel::Kind::IdealMetal:
      throw DomainError("ideal metal has no finite permittivity");
    case DielectricModel::Kind::ConstantEps:
      return m.eps0;
    case DielectricModel::Kind::Plasma:
      return 1.0 + m.hwp_eV * m.hwp_eV / (xi * xi);
    case DielectricModel::Kind::Drude:
      return 1.0 + m.hwp_eV * m.hwp_eV / (xi * (xi + m.hgamma_eV));
    case DielectricModel::Kind::ConstantEpsDC:
      return m.eps0 + m.hsigma_eV / xi;
  }
  throw DomainError("permittivity_at: unknown model");
}

double permeability_at(const DielectricModel& m, double) {
  return m.perm == DielectricModel::Permeability::Constant ? m.mu0 : 1.0;
}

void AtomModel::validate() const {
  if (!(alpha0_um3 >= 0.0)) throw ConfigError("atom: alpha0 must be >= 0");
  if (!(hw0_eV > 0.0)) throw ConfigError("atom: hw0 must be > 0");
}

double polarizability_at(const AtomModel& a, double xi) {
  if (xi < 0.0) throw DomainError("polarizability_at: xi must be >= 0");
  if (std::isinf(a.hw0_eV)) return a.alpha0_um3;
  const double r = xi / a.hw0_eV;
  return a.alpha0_um3 / (1.0 + r * r);
}

std::complex<double> polarizability_at(const AtomModel& a,
                                       std::complex<double> xi) {
  if (std::isinf(a.hw0_eV)) return a.alpha0_um3;
  const std::complex<double> r = xi / a.hw0_eV;
  return a.alpha0_um3 / (1.0 + r * r);
}

void HydrodynamicSheet::validate() const {
  if (!(K_per_um > 0.0)) throw ConfigError("hydrodynamic: K must be > 0");
}

}  // namespace casimir
