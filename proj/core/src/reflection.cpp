#include "casimir/reflection.hpp"

#include <cmath>

#include "casimir/constants.hpp"

namespace casimir {

namespace {

using cplx = std::complex<double>;

void check_node(double xi, double kperp) {
  if (xi < 0.0 || kperp < 0.0)
    throw DomainError("reflection: xi and kperp must be >= 0");
  if (xi == 0.0 && kperp == 0.0)
    throw DomainError("reflection: origin node (xi = kperp = 0)");
}

ReflectionPair fresnel_limit_xi0(const DielectricModel& m, double kperp) {
  switch (m.kind) {
    case DielectricModel::Kind::IdealMetal:
      return {1.0, -1.0};
    case DielectricModel::Kind::Drude:
    case DielectricModel::Kind::ConstantEpsDC:
      // eps ~ 1/xi: r_tm -> 1 while eps*xi^2 -> 0 leaves r_te -> 0.
      return {1.0, 0.0};
    case DielectricModel::Kind::Plasma: {
      // eps*xi^2 -> hwp^2: the TE coefficient keeps a nonzero limit.
      const double w = m.hwp_eV / hbar_c;
      const double kl = std::hypot(kperp, w);
      const double mu = m.perm == DielectricModel::Permeability::Constant
                            ? m.mu0
                            : 1.0;
      return {1.0, (mu * kperp - kl) / (mu * kperp + kl)};
    }
    case DielectricModel::Kind::ConstantEps: {
      const double mu = m.perm == DielectricModel::Permeability::Constant
                            ? m.mu0
                            : 1.0;
      return {(m.eps0 - 1.0) / (m.eps0 + 1.0), (mu - 1.0) / (mu + 1.0)};
    }
  }
  throw DomainError("fresnel: unknown model");
}

ReflectionPair tensor_to_reflection(const TensorPair& t, double q,
                                    double kperp) {
  const double k2 = kperp * kperp;
  const double tm_den = q * t.pi00 + 2.0 * k2;
  const double te_den = t.pi + 2.0 * k2 * q;
  return {tm_den == 0.0 ? 0.0 : q * t.pi00 / tm_den,
          te_den == 0.0 ? 0.0 : -t.pi / te_den};
}

}  // namespace

ReflectionPair fresnel(const DielectricModel& m, double xi, double kperp) {
  check_node(xi, kperp);
  if (m.kind == DielectricModel::Kind::IdealMetal) return {1.0, -1.0};
  if (xi == 0.0) return fresnel_limit_xi0(m, kperp);
  const double eps = permittivity_at(m, xi);
  const double mu = permeability_at(m, xi);
  const double z = xi / hbar_c;
  // same expression as k_l so that vacuum (eps = mu = 1) cancels exactly
  const double q = std::sqrt(kperp * kperp + z * z);
  if (std::isinf(eps)) return {1.0, -1.0};
  const double kl = std::sqrt(kperp * kperp + eps * mu * z * z);
  return {(eps * q - kl) / (eps * q + kl), (mu * q - kl) / (mu * q + kl)};
}

ReflectionPair hydrodynamic(const HydrodynamicSheet& s, double xi,
                            double kperp) {
  check_node(xi, kperp);
  const double z2 = (xi / hbar_c) * (xi / hbar_c);
  const double q = std::sqrt(kperp * kperp + z2);
  const double K = s.K_per_um;
  return {q * K / (q * K + z2), -K / (K + q)};
}

ReflectionPair graphene_pt(const GrapheneParams& p, long l, double kperp,
                           double T) {
  if (T < 0.0) throw DomainError("graphene_pt: T must be >= 0");
  const double xi = T > 0.0 ? matsubara_energy(T, l) : 0.0;
  check_node(xi, kperp);
  const TensorPair t = tensor_components(p, xi, kperp, T);
  const double q = std::hypot(kperp, xi / hbar_c);
  return tensor_to_reflection(t, q, kperp);
}

ReflectionPair graphene_pt_T0(const GrapheneParams& p, double xi,
                              double kperp) {
  check_node(xi, kperp);
  const TensorPair t = tensor_components(p, xi, kperp, 0.0);
  const double q = std::hypot(kperp, xi / hbar_c);
  return tensor_to_reflection(t, q, kperp);
}

ReflectionPair graphene_correlation(const GrapheneParams& p, long l,
                                    double kperp, double T) {
  if (l < 1)
    throw DomainError(
        "graphene_correlation: the TE channel needs l >= 1 (xi_l in the "
        "transverse correlation function)");
  const double xi = matsubara_energy(T, l);
  check_node(xi, kperp);
  const TensorPair t = tensor_components(p, xi, kperp, T);
  const double e2 = p.alpha_fs * hbar_c;  // Gaussian e^2 in eV*um
  const double z = xi / hbar_c;
  const double q = std::hypot(kperp, z);
  const double k2 = kperp * kperp;
  // Longitudinal and transverse density-density correlation functions.
  const double chi_par = -t.pi00 / (4.0 * pi * e2);
  const double chi_perp = -t.pi / (4.0 * pi * e2 * z * z);
  const double tm_num = 2.0 * pi * e2 * q * chi_par;
  const double te_num = 2.0 * pi * e2 * z * z * chi_perp;
  return {tm_num / (tm_num - k2), -te_num / (te_num - k2 * q)};
}

ReflectionPair graphene_conductivity(const GrapheneParams& p, long l,
                                     double kperp, double T) {
  if (l < 1)
    throw DomainError("graphene_conductivity: needs l >= 1 (sigma carries a "
                      "factor xi_l)");
  const double xi = matsubara_energy(T, l);
  check_node(xi, kperp);
  const TensorPair t = tensor_components(p, xi, kperp, T);
  const double e2 = p.alpha_fs * hbar_c;
  const double z = xi / hbar_c;
  const double q = std::hypot(kperp, z);
  const double k2 = kperp * kperp;
  // sigma = -e^2 xi chi / k^2, carried as 2 pi sigma / c (dimensionless).
  const double chi_par = -t.pi00 / (4.0 * pi * e2);
  const double chi_perp = -t.pi / (4.0 * pi * e2 * z * z);
  const double s_par = -2.0 * pi * e2 * z * chi_par / k2;
  const double s_perp = -2.0 * pi * e2 * z * chi_perp / k2;
  return {q * s_par / (q * s_par + z), -z * s_perp / (z * s_perp + q)};
}

ReflectionProvider ReflectionProvider::ideal_metal() {
  ReflectionProvider r;
  r.kind_ = Kind::IdealMetal;
  return r;
}

ReflectionProvider ReflectionProvider::fresnel(const DielectricModel& m) {
  ReflectionProvider r;
  r.kind_ = Kind::Fresnel;
  r.dielectric_ = m;
  return r;
}

ReflectionProvider ReflectionProvider::hydrodynamic(
    const HydrodynamicSheet& s) {
  ReflectionProvider r;
  r.kind_ = Kind::Hydrodynamic;
  r.sheet_ = s;
  return r;
}

ReflectionProvider ReflectionProvider::graphene_pt(const GrapheneParams& p) {
  ReflectionProvider r;
  r.kind_ = Kind::GraphenePT;
  r.graphene_ = p;
  return r;
}

ReflectionProvider ReflectionProvider::graphene_correlation(
    const GrapheneParams& p) {
  ReflectionProvider r = graphene_pt(p);
  r.kind_ = Kind::GrapheneCorrelation;
  return r;
}

ReflectionProvider ReflectionProvider::graphene_conductivity(
    const GrapheneParams& p) {
  ReflectionProvider r = graphene_pt(p);
  r.kind_ = Kind::GrapheneConductivity;
  return r;
}

ReflectionPair ReflectionProvider::at_node(long l, double kperp,
                                           double T) const {
  switch (kind_) {
    case Kind::IdealMetal:
      return {1.0, -1.0};
    case Kind::Fresnel:
      return casimir::fresnel(dielectric_, matsubara_energy(T, l), kperp);
    case Kind::Hydrodynamic:
      return casimir::hydrodynamic(sheet_, matsubara_energy(T, l), kperp);
    case Kind::GraphenePT:
      return casimir::graphene_pt(graphene_, l, kperp, T);
    case Kind::GrapheneCorrelation:
      // The l=0 TE channel is defined only through the tensor form.
      return l >= 1 ? casimir::graphene_correlation(graphene_, l, kperp, T)
                    : casimir::graphene_pt(graphene_, l, kperp, T);
    case Kind::GrapheneConductivity:
      return l >= 1 ? casimir::graphene_conductivity(graphene_, l, kperp, T)
                    : casimir::graphene_pt(graphene_, l, kperp, T);
  }
  throw DomainError("reflection provider: unknown kind");
}

ReflectionPair ReflectionProvider::t0(double xi, double kperp) const {
  switch (kind_) {
    case Kind::IdealMetal:
      return {1.0, -1.0};
    case Kind::Fresnel:
      return casimir::fresnel(dielectric_, xi, kperp);
    case Kind::Hydrodynamic:
      return casimir::hydrodynamic(sheet_, xi, kperp);
    default:
      return casimir::graphene_pt_T0(graphene_, xi, kperp);
  }
}

ReflectionPairC ReflectionProvider::t0_complex(cplx xi, double kperp) const {
  const cplx z = xi / hbar_c;
  const cplx q = std::sqrt(kperp * kperp + z * z);
  switch (kind_) {
    case Kind::IdealMetal:
      return {1.0, -1.0};
    case Kind::Fresnel: {
      const cplx eps = permittivity_at(dielectric_, xi);
      const double mu = permeability_at(dielectric_, 0.0);
      const cplx kl = std::sqrt(kperp * kperp + eps * mu * z * z);
      return {(eps * q - kl) / (eps * q + kl), (mu * q - kl) / (mu * q + kl)};
    }
    case Kind::Hydrodynamic: {
      const double K = sheet_.K_per_um;
      return {q * K / (q * K + z * z), -K / (K + q)};
    }
    default: {
      const auto t = detail::tensor_T0_c(graphene_, xi, kperp);
      const double k2 = kperp * kperp;
      return {q * t.pi00 / (q * t.pi00 + 2.0 * k2),
              -t.pi / (t.pi + 2.0 * k2 * q)};
    }
  }
}

ReflectionProvider::NodeEval ReflectionProvider::node_eval(long l,
                                                           double kperp,
                                                           double T) const {
  if (!is_graphene()) {
    const ReflectionPair r = at_node(l, kperp, T);
    return {r, r, {0.0, 0.0}};
  }
  const double xi = matsubara_energy(T, l);
  const TensorPair base = tensor_zeroT_undoped(graphene_, xi, kperp);
  const TensorPair th = tensor_thermal_part(graphene_, xi, kperp, T);
  const TensorPair th0 = tensor_thermal_part_T0(graphene_, xi, kperp);
  const TensorPair at_T = base + th;
  const TensorPair at_0 = base + th0;
  const TensorPair d = th - th0;
  const double q = std::hypot(kperp, xi / hbar_c);
  const double k2 = kperp * kperp;
  NodeEval out;
  out.at_T = tensor_to_reflection(at_T, q, kperp);
  out.at_0 = tensor_to_reflection(at_0, q, kperp);
  // r(T) - r(0) in closed form: no subtraction of nearly equal coefficients.
  out.delta.r_tm =
      2.0 * q * k2 * d.pi00 /
      ((q * at_T.pi00 + 2.0 * k2) * (q * at_0.pi00 + 2.0 * k2));
  out.delta.r_te = -2.0 * q * k2 * d.pi /
                   ((at_T.pi + 2.0 * k2 * q) * (at_0.pi + 2.0 * k2 * q));
  return out;
}

ReflectionPair ReflectionProvider::delta_T(long l, double kperp,
                                           double T) const {
  if (!is_graphene()) return {0.0, 0.0};
  return node_eval(l, kperp, T).delta;
}

double ReflectionProvider::im_support_cutoff(double s) const {
  // Only models whose coefficients stay real (and pole-free) on the
  // imaginary axis beyond a branch point admit a hard support cutoff.
  // Everything else -- lossy models, and models carrying surface-plasmon
  // poles on the axis (hydrodynamic and plasma TM, doped graphene) -- must
  // be integrated over the full numerically live range.
  switch (kind_) {
    case Kind::IdealMetal:
      return s / hbar_c;
    case Kind::Fresnel:
      switch (dielectric_.kind) {
        case DielectricModel::Kind::ConstantEps:
          return std::sqrt(dielectric_.eps0 *
                           permeability_at(dielectric_, 0.0)) *
                 s / hbar_c;
        case DielectricModel::Kind::IdealMetal:
          return s / hbar_c;
        default:
          return -1.0;
      }
    default:
      return -1.0;
  }
}

std::vector<double> ReflectionProvider::axis_pole_breakpoints(
    double s) const {
  std::vector<double> pts;
  const double z = s / hbar_c;
  switch (kind_) {
    case Kind::Hydrodynamic: {
      // TM pole of the sheet (plasmon): q K = (s/hbar c)^2
      const double qp = z * z / sheet_.K_per_um;
      pts.push_back(std::hypot(z, qp));
      break;
    }
    case Kind::Fresnel: {
      if (dielectric_.kind == DielectricModel::Kind::Plasma) {
        // surface plasmon: eps(is) q + k_l = 0 for eps(is) < -1
        const double w = dielectric_.hwp_eV;
        if (s < w) {
          const double ae = w * w / (s * s) - 1.0;  // |eps(is)|
          if (ae > 1.0) pts.push_back(z * std::sqrt(ae / (ae - 1.0)));
        }
      }
      break;
    }
    default:
      break;
  }
  return pts;
}

}  // namespace casimir
