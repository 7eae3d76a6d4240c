#include "casimir/energy.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <vector>

#include "casimir/abel_plana.hpp"
#include "casimir/constants.hpp"
#include "casimir/matsubara.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

using cplx = std::complex<double>;

constexpr long engine_l_max = 2000000;

// Contributions are dead once 2 a Re q exceeds this.
constexpr double decay_cut = 60.0;

void require_positive_T(double T) {
  if (!(T > 0.0)) throw DomainError("free energy: T must be > 0");
}

// Identical sheets are the common case; skip the second tensor evaluation.
bool same_provider(const ReflectionProvider& a, const ReflectionProvider& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ReflectionProvider::Kind::IdealMetal:
      return true;
    case ReflectionProvider::Kind::Fresnel: {
      const auto &da = a.dielectric(), &db = b.dielectric();
      return da.kind == db.kind && da.hwp_eV == db.hwp_eV &&
             da.hgamma_eV == db.hgamma_eV && da.eps0 == db.eps0 &&
             da.hsigma_eV == db.hsigma_eV && da.perm == db.perm &&
             da.mu0 == db.mu0;
    }
    case ReflectionProvider::Kind::Hydrodynamic:
      return a.sheet().K_per_um == b.sheet().K_per_um;
    default: {
      const auto &ga = a.graphene(), &gb = b.graphene();
      return ga.gap_eV == gb.gap_eV && ga.mu_eV == gb.mu_eV &&
             ga.vf_ratio == gb.vf_ratio && ga.alpha_fs == gb.alpha_fs;
    }
  }
  return false;
}

void rethrow_with_node(NonConvergence& e, const char* where, long l,
                       double T) {
  e.add_context(std::string(where) + " at l=" + std::to_string(l) +
                ", T=" + std::to_string(T) + " K");
  throw e;
}

// ---- plate-plate -----------------------------------------------------------

double plate_k_integral(const PlatePlateSystem& s, long l, double T,
                        double rel_tol) {
  const double E = matsubara_energy(T, l);
  const double z = E / hbar_c;
  const double a = s.a_um;
  if (2.0 * a * z > decay_cut) return 0.0;
  const bool identical = same_provider(s.plate1, s.plate2);
  auto f = [&](double k) -> double {
    const double q = std::hypot(k, z);
    const double w = std::exp(-2.0 * a * q);
    if (w == 0.0) return 0.0;
    const ReflectionPair r1 = s.plate1.at_node(l, k, T);
    const ReflectionPair r2 = identical ? r1 : s.plate2.at_node(l, k, T);
    return k * (std::log1p(-r1.r_tm * r2.r_tm * w) +
                std::log1p(-r1.r_te * r2.r_te * w));
  };
  return integrate_semi_infinite(f, 1.0 / (2.0 * a), rel_tol, {z}).value;
}

double plate_t0_k_integral(const PlatePlateSystem& s, double E,
                           double rel_tol) {
  const double z = E / hbar_c;
  const double a = s.a_um;
  if (2.0 * a * z > decay_cut) return 0.0;
  const bool identical = same_provider(s.plate1, s.plate2);
  auto f = [&](double k) -> double {
    const double q = std::hypot(k, z);
    const double w = std::exp(-2.0 * a * q);
    if (w == 0.0) return 0.0;
    const ReflectionPair r1 = s.plate1.t0(E, k);
    const ReflectionPair r2 = identical ? r1 : s.plate2.t0(E, k);
    return k * (std::log1p(-r1.r_tm * r2.r_tm * w) +
                std::log1p(-r1.r_te * r2.r_te * w));
  };
  return integrate_semi_infinite(f, 1.0 / (2.0 * a), rel_tol, {z}).value;
}

// ---- atom-plate ------------------------------------------------------------

// k q e^{-2aq} [(2 - b^2) r_tm - b^2 r_te] with b = xi/(c q); the l=0 term is
// 2 r_tm alone and never touches the TE coefficient.
template <class PairFn>
double cp_k_integral(double a, double E, PairFn&& pair_at, double rel_tol) {
  const double z = E / hbar_c;
  if (2.0 * a * z > decay_cut) return 0.0;
  auto f = [&](double k) -> double {
    const double q = std::hypot(k, z);
    const double w = std::exp(-2.0 * a * q);
    if (w == 0.0) return 0.0;
    const ReflectionPair r = pair_at(k);
    if (E == 0.0) return k * q * w * 2.0 * r.r_tm;
    const double b2 = (z / q) * (z / q);
    return k * q * w * ((2.0 - b2) * r.r_tm - b2 * r.r_te);
  };
  return integrate_semi_infinite(f, 1.0 / (2.0 * a), rel_tol, {z}).value;
}

// ---- Abel-Plana contour helpers -------------------------------------------

// Breakpoints in kperp where the on-axis integrand changes analytic
// character (photon branch, material/Dirac thresholds, plasmon poles).
std::vector<double> contour_breakpoints(const ReflectionProvider& p, double s,
                                        double upper) {
  std::vector<double> pts{s / hbar_c};
  if (p.is_graphene()) {
    const auto& g = p.graphene();
    const double vh = g.vf_ratio * hbar_c;
    const double gap = g.gap_eV, mu = g.mu_eV;
    if (s > gap) pts.push_back(std::sqrt(s * s - gap * gap) / vh);
    pts.push_back((s + 2.0 * mu) / vh);
    pts.push_back(std::abs(s - 2.0 * mu) / vh);
    if (mu > 0.0) pts.push_back(2.0 * mu / vh);
  }
  for (double k : p.axis_pole_breakpoints(s)) pts.push_back(k);
  std::vector<double> out;
  for (double k : pts)
    if (k > 0.0 && k < upper) out.push_back(k);
  return out;
}

// Around an on-axis plasmon pole the logarithm's imaginary part jumps by
// +-pi over a window |r1 r2 e^{-2aq}| > 1 whose edges are log-singular
// points; located by bisection and seeded as segment boundaries, the
// integrand becomes piecewise smooth. A window too narrow for the adaptive
// error estimate to notice would otherwise be silently dropped.
template <class MagFn>
void add_pole_window_edges(MagFn&& mag, double k_pole, double k_lo,
                           double k_hi, std::vector<double>& pts) {
  if (!(k_pole > k_lo && k_pole < k_hi)) return;
  auto bisect_edge = [&](double inside, double outside) {
    if (!(mag(inside) > 1.0) || !(mag(outside) < 1.0)) return;
    for (int it = 0; it < 120; ++it) {
      const double mid = 0.5 * (inside + outside);
      if (mid == inside || mid == outside) break;
      (mag(mid) > 1.0 ? inside : outside) = mid;
    }
    pts.push_back(inside);
    pts.push_back(outside);
  };
  // step off the pole itself; the magnitude there is effectively infinite
  const double h = 1e-9 * k_pole;
  bisect_edge(k_pole - h, k_lo);
  bisect_edge(k_pole + h, k_hi);
  pts.push_back(k_pole);
}

// Upper integration limit for the Im part on the contour: the integrand is
// identically zero beyond every branch cutoff, and numerically dead once
// 2 a Re q is large.
double contour_upper(const PlatePlateSystem* pp, const AtomPlateSystem* ap,
                     double s, double a) {
  const double z = s / hbar_c;
  const double k_dead = std::hypot(z, decay_cut / (2.0 * a));
  double cut = -1.0;
  auto merge = [&cut](double c) {
    if (c < 0.0 || cut < 0.0)
      cut = -1.0;
    else
      cut = std::max(cut, c);
  };
  if (pp) {
    cut = pp->plate1.im_support_cutoff(s);
    merge(pp->plate2.im_support_cutoff(s));
  } else {
    cut = ap->plate.im_support_cutoff(s);
  }
  if (cut < 0.0) return k_dead;
  return std::min(cut, k_dead);
}

// Boundary values on the imaginary axis are taken a hair inside the right
// half-plane. This makes every branch choice (square roots, the +-pi windows
// of the logarithm around on-axis plasmon poles) by continuity instead of
// relying on signed-zero conventions, at an O(offset) cost far below the
// quadrature tolerances.
constexpr double contour_offset = 1e-8;

double plate_im_integral(const PlatePlateSystem& s, double sE,
                         double rel_tol) {
  const double a = s.a_um;
  const cplx E(contour_offset * sE, sE);
  const cplx z = E / hbar_c;
  const double upper = contour_upper(&s, nullptr, sE, a);
  const bool identical = same_provider(s.plate1, s.plate2);
  auto f = [&](double k) -> double {
    const cplx q = std::sqrt(k * k + z * z);
    const cplx w = std::exp(-2.0 * a * q);
    const ReflectionPairC r1 = s.plate1.t0_complex(E, k);
    const ReflectionPairC r2 = identical ? r1 : s.plate2.t0_complex(E, k);
    const cplx sum = std::log(1.0 - r1.r_tm * r2.r_tm * w) +
                     std::log(1.0 - r1.r_te * r2.r_te * w);
    return k * sum.imag();
  };
  std::vector<double> pts{0.0};
  for (double b : contour_breakpoints(s.plate1, sE, upper)) pts.push_back(b);
  for (double b : contour_breakpoints(s.plate2, sE, upper)) pts.push_back(b);
  auto mag = [&](double k) -> double {
    const cplx q = std::sqrt(k * k + z * z);
    const ReflectionPairC r1 = s.plate1.t0_complex(E, k);
    const ReflectionPairC r2 = s.plate2.t0_complex(E, k);
    const double w = std::exp(-2.0 * a * q.real());
    return std::max(std::abs(r1.r_tm * r2.r_tm), std::abs(r1.r_te * r2.r_te)) *
           w;
  };
  for (double kp : s.plate1.axis_pole_breakpoints(sE))
    add_pole_window_edges(mag, kp, 0.0, upper, pts);
  if (&s.plate1 != &s.plate2)
    for (double kp : s.plate2.axis_pole_breakpoints(sE))
      add_pole_window_edges(mag, kp, 0.0, upper, pts);
  pts.push_back(upper);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pts.erase(std::remove_if(pts.begin(), pts.end(),
                           [upper](double k) { return k < 0.0 || k > upper; }),
            pts.end());
  return integrate_segmented(f, pts, rel_tol, 6000).value;
}

double atom_im_integral(const AtomPlateSystem& s, double sE, double rel_tol) {
  const double a = s.a_um;
  const cplx E(contour_offset * sE, sE);
  const cplx z = E / hbar_c;
  const double upper = contour_upper(nullptr, &s, sE, a);
  // alpha(i xi) is real on the imaginary axis for the oscillator model.
  const double alpha = polarizability_at(s.atom, E).real();
  auto f = [&](double k) -> double {
    const cplx q = std::sqrt(k * k + z * z);
    const cplx w = std::exp(-2.0 * a * q);
    const ReflectionPairC r = s.plate.t0_complex(E, k);
    const cplx b2 = (z / q) * (z / q);
    const cplx val = k * q * w * ((2.0 - b2) * r.r_tm - b2 * r.r_te);
    return val.imag();
  };
  std::vector<double> pts{0.0};
  for (double b : contour_breakpoints(s.plate, sE, upper)) pts.push_back(b);
  // The atom integrand is linear in r, so an on-axis plasmon pole shows up
  // as a principal-value spike of width ~ the contour offset; satellites at
  // geometric distances let the refinement walk into it from both sides.
  for (double kp : s.plate.axis_pole_breakpoints(sE)) {
    if (!(kp > 0.0 && kp < upper)) continue;
    pts.push_back(kp);
    for (double f_rel = 1e-7; f_rel < 0.2; f_rel *= 10.0) {
      if (kp * (1.0 - f_rel) > 0.0) pts.push_back(kp * (1.0 - f_rel));
      if (kp * (1.0 + f_rel) < upper) pts.push_back(kp * (1.0 + f_rel));
    }
  }
  pts.push_back(upper);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pts.erase(std::remove_if(pts.begin(), pts.end(),
                           [upper](double k) { return k < 0.0 || k > upper; }),
            pts.end());
  return alpha * integrate_segmented(f, pts, rel_tol, 8000).value;
}

// ---- explicit thermal corrections ------------------------------------------

// Exact per-node logarithm difference
//   ln[1 - r1 r2 w] - ln[1 - r1(0) r2(0) w]
// evaluated through log1p of the increment, so small delta_T r never cancels.
double plate_explicit_k_integral(const PlatePlateSystem& s, long l, double T,
                                 double rel_tol) {
  const double E = matsubara_energy(T, l);
  const double z = E / hbar_c;
  const double a = s.a_um;
  if (2.0 * a * z > decay_cut) return 0.0;
  const bool identical = same_provider(s.plate1, s.plate2);
  auto f = [&](double k) -> double {
    const double q = std::hypot(k, z);
    const double w = std::exp(-2.0 * a * q);
    if (w == 0.0) return 0.0;
    const auto n1 = s.plate1.node_eval(l, k, T);
    const auto n2 = identical ? n1 : s.plate2.node_eval(l, k, T);
    double sum = 0.0;
    {
      const double dprod = n1.delta.r_tm * n2.at_0.r_tm +
                           n1.at_0.r_tm * n2.delta.r_tm +
                           n1.delta.r_tm * n2.delta.r_tm;
      sum += std::log1p(-dprod * w /
                        (1.0 - n1.at_0.r_tm * n2.at_0.r_tm * w));
    }
    {
      const double dprod = n1.delta.r_te * n2.at_0.r_te +
                           n1.at_0.r_te * n2.delta.r_te +
                           n1.delta.r_te * n2.delta.r_te;
      sum += std::log1p(-dprod * w /
                        (1.0 - n1.at_0.r_te * n2.at_0.r_te * w));
    }
    return k * sum;
  };
  return integrate_semi_infinite(f, 1.0 / (2.0 * a), rel_tol, {z}).value;
}

double atom_explicit_k_integral(const AtomPlateSystem& s, long l, double T,
                                double rel_tol) {
  const double E = matsubara_energy(T, l);
  auto pair_at = [&](double k) { return s.plate.delta_T(l, k, T); };
  return cp_k_integral(s.a_um, E, pair_at, rel_tol);
}

}  // namespace

double casimir_free_energy(const PlatePlateSystem& s, double T,
                           double rel_tol, ThreadPool* pool) {
  s.validate();
  require_positive_T(T);
  auto term = [&](long l) { return plate_k_integral(s, l, T, rel_tol); };
  try {
    const double sum =
        matsubara_sum_blocked(term, rel_tol, engine_l_max, pool);
    return k_boltzmann * T / (2.0 * pi) * sum;
  } catch (NonConvergence& e) {
    rethrow_with_node(e, "casimir_free_energy", -1, T);
    throw;
  }
}

double casimir_energy_T0(const PlatePlateSystem& s, double rel_tol) {
  s.validate();
  const double scale = hbar_c / (2.0 * s.a_um);
  auto g = [&](double E) {
    return plate_t0_k_integral(s, E, 0.25 * rel_tol);
  };
  const double I = integrate_semi_infinite(g, scale, rel_tol).value;
  return I / (4.0 * pi * pi);
}

double casimir_polder_free_energy(const AtomPlateSystem& s, double T,
                                  double rel_tol, ThreadPool* pool) {
  s.validate();
  require_positive_T(T);
  auto term = [&](long l) -> double {
    const double E = matsubara_energy(T, l);
    const double alpha = polarizability_at(s.atom, E);
    if (alpha == 0.0) return 0.0;
    auto pair_at = [&](double k) { return s.plate.at_node(l, k, T); };
    return alpha * cp_k_integral(s.a_um, E, pair_at, rel_tol);
  };
  try {
    const double sum =
        matsubara_sum_blocked(term, rel_tol, engine_l_max, pool);
    return -k_boltzmann * T * sum;
  } catch (NonConvergence& e) {
    rethrow_with_node(e, "casimir_polder_free_energy", -1, T);
    throw;
  }
}

double casimir_polder_energy_T0(const AtomPlateSystem& s, double rel_tol) {
  s.validate();
  if (s.atom.alpha0_um3 == 0.0) return 0.0;
  const double scale = hbar_c / (2.0 * s.a_um);
  auto g = [&](double E) -> double {
    const double alpha = polarizability_at(s.atom, E);
    auto pair_at = [&](double k) { return s.plate.t0(E, k); };
    return alpha * cp_k_integral(s.a_um, E, pair_at, 0.25 * rel_tol);
  };
  const double I = integrate_semi_infinite(g, scale, rel_tol).value;
  return -I / (2.0 * pi);
}

FreeEnergyBreakdown thermal_correction_breakdown(const PlatePlateSystem& s,
                                                 double T, double rel_tol,
                                                 ThreadPool* pool) {
  s.validate();
  require_positive_T(T);
  FreeEnergyBreakdown out;
  const double pref = k_boltzmann * T / (2.0 * pi);

  auto g = [&](double t) {
    return plate_im_integral(s, 2.0 * pi * k_boltzmann * T * t,
                             0.3 * rel_tol);
  };
  out.implicit = pref * abel_plana_im(g, rel_tol);

  if (s.plate1.has_explicit_temperature_dependence() ||
      s.plate2.has_explicit_temperature_dependence()) {
    out.explicit_l0 =
        pref * 0.5 * plate_explicit_k_integral(s, 0, T, rel_tol);
    auto term = [&](long l) {
      return l == 0 ? 0.0 : plate_explicit_k_integral(s, l, T, rel_tol);
    };
    try {
      out.explicit_lge1 =
          pref * matsubara_sum_blocked(term, rel_tol, engine_l_max, pool);
    } catch (NonConvergence& e) {
      rethrow_with_node(e, "breakdown explicit sum", -1, T);
    }
  }
  out.total_correction = out.implicit + out.explicit_l0 + out.explicit_lge1;
  return out;
}

FreeEnergyBreakdown thermal_correction_breakdown(const AtomPlateSystem& s,
                                                 double T, double rel_tol,
                                                 ThreadPool* pool) {
  s.validate();
  require_positive_T(T);
  FreeEnergyBreakdown out;
  if (s.atom.alpha0_um3 == 0.0) return out;

  auto g = [&](double t) {
    return atom_im_integral(s, 2.0 * pi * k_boltzmann * T * t, 0.3 * rel_tol);
  };
  out.implicit = -k_boltzmann * T * abel_plana_im(g, rel_tol);

  if (s.plate.has_explicit_temperature_dependence()) {
    const double alpha0 = polarizability_at(s.atom, 0.0);
    out.explicit_l0 = -k_boltzmann * T * 0.5 * alpha0 *
                      atom_explicit_k_integral(s, 0, T, rel_tol);
    auto term = [&](long l) -> double {
      if (l == 0) return 0.0;
      const double alpha = polarizability_at(s.atom, matsubara_energy(T, l));
      return alpha * atom_explicit_k_integral(s, l, T, rel_tol);
    };
    try {
      out.explicit_lge1 =
          -k_boltzmann * T *
          matsubara_sum_blocked(term, rel_tol, engine_l_max, pool);
    } catch (NonConvergence& e) {
      rethrow_with_node(e, "breakdown explicit sum", -1, T);
    }
  }
  out.total_correction = out.implicit + out.explicit_l0 + out.explicit_lge1;
  return out;
}

double pfa_sphere_force(const PlatePlateSystem& s, double T, double R_um,
                        double rel_tol, ThreadPool* pool) {
  if (!(R_um > 0.0)) throw DomainError("pfa: R must be > 0");
  if (s.a_um / R_um > 0.1)
    std::cerr << "warning: pfa accuracy degrades for a/R = "
              << s.a_um / R_um << " > 0.1\n";
  return 2.0 * pi * R_um * casimir_free_energy(s, T, rel_tol, pool);
}

}  // namespace casimir
