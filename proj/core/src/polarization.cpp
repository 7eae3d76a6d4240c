#include "casimir/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

using detail::cplx;

// Beyond this the direct form of Psi loses too many digits to cancellation;
// switch to the large-x series 8/(3x) - 16/(15x^3) + 24/(35x^5) - ...
constexpr double psi_series_threshold = 100.0;

template <class T>
T psi_large(T x) {
  const T ix2 = 1.0 / (x * x);
  return (1.0 / x) *
         (8.0 / 3.0 + ix2 * (-16.0 / 15.0 + ix2 * (24.0 / 35.0 +
                                                   ix2 * (-32.0 / 63.0))));
}

struct NodeGeometry {
  double kappa;  // hbar v_F kperp, eV
  double ep;     // hbar p = sqrt(kappa^2 + xi^2), eV
  double D;      // gap/ep
};

NodeGeometry node_geometry(const GrapheneParams& p, double xi, double kperp) {
  NodeGeometry g;
  g.kappa = p.vf_ratio * hbar_c * kperp;
  g.ep = std::hypot(g.kappa, xi);
  if (g.ep == 0.0)
    throw DomainError("polarization tensor undefined at the origin node");
  g.D = p.gap_eV / g.ep;
  return g;
}

double fermi_pair(double x_plus, double x_minus) {
  // 1/(e^{x+}+1) + 1/(e^{x-}+1); IEEE semantics give the right limits for
  // large |x| without special cases.
  return 1.0 / (std::exp(x_plus) + 1.0) + 1.0 / (std::exp(x_minus) + 1.0);
}

// log(1 + e^x) without overflow; x can be the full Fermi-sea depth.
double softplus(double x) {
  if (x > 36.0) return x;
  if (x < -745.0) return 0.0;
  return std::log1p(std::exp(x));
}

// Exact rounding residual of a + b (two-sum), returned as (a + b) - s.
double sum_residual(double a, double b, double s) {
  const double z = s - a;
  return (a - (s - z)) + (b - z);
}

}  // namespace

double psi(double x) {
  if (x < 0.0) throw DomainError("psi: x must be >= 0");
  if (x == 0.0) return pi;
  if (x > psi_series_threshold) return psi_large(x);
  return 2.0 * (x + (1.0 - x * x) * std::atan(1.0 / x));
}

std::complex<double> psi(std::complex<double> x) {
  if (std::abs(x) == 0.0) return {pi, 0.0};
  if (std::abs(x) > psi_series_threshold) return psi_large(x);
  return 2.0 * (x + (1.0 - x * x) * std::atan(1.0 / x));
}

TensorPair tensor_zeroT_undoped(const GrapheneParams& p, double xi,
                                double kperp) {
  const NodeGeometry g = node_geometry(p, xi, kperp);
  const double ps = psi(g.D);
  const double k2 = kperp * kperp;
  return {p.alpha_fs * k2 * hbar_c * ps / g.ep,
          p.alpha_fs * k2 * (g.ep / hbar_c) * ps};
}

TensorPair tensor_thermal_part(const GrapheneParams& p, double xi,
                               double kperp, double T) {
  if (!(T > 0.0)) throw DomainError("tensor_thermal_part: T must be > 0");
  const NodeGeometry g = node_geometry(p, xi, kperp);
  const double kT = k_boltzmann * T;
  const double B = g.ep / (2.0 * kT);
  const double m = std::abs(p.mu_eV) / kT;  // Fermi pair is even in mu

  // Fermi factors bound the whole integrand by ~2 e^{-(B D - |m|)}.
  if (B * g.D - m > 46.0) return {0.0, 0.0};

  const double r = xi / g.ep;
  const double d2 = (g.kappa * g.kappa) / (g.ep * g.ep) * g.D * g.D;
  const double uF = 2.0 * std::abs(p.mu_eV) / g.ep;  // Fermi edge
  const double u_hi = std::max(g.D, uF) + 40.0 / B;
  const double ustar = std::sqrt(1.0 + d2);  // Re sqrt-argument zero

  const double ep2 = g.ep * g.ep;
  const double kD2 = g.kappa * g.kappa * g.D * g.D;
  const double xi2 = xi * xi;

  auto phi = [&](double u) { return fermi_pair(B * u + m, B * u - m); };

  // Fermi-edge skirt; the step has thermal width 1/B.
  auto edge_breakpoints = [&](std::vector<double>& pts, double lo, double hi) {
    if (uF <= lo) return;
    for (double du : {-37.0 / B, -5.0 / B, 0.0, 5.0 / B, 37.0 / B}) {
      const double u = uF + du;
      if (u > lo && u < hi) pts.push_back(u);
    }
  };

  constexpr double tol = 1e-9;
  constexpr long max_segs = 20000;
  double I00 = 0.0, IP = 0.0;

  if (xi == 0.0) {
    // Static limit. The square-root argument 1 + D^2 - u^2 crosses zero at
    // ustar with an integrable inverse-square-root singularity; substituting
    // u = ustar - v^2 makes the integrand regular. Beyond ustar the real
    // part of the ratio vanishes, leaving the bare Fermi integral for pi00
    // (closed form) and nothing for pi.
    // ustar - D without cancellation (d2 == D^2 exactly when xi = 0)
    const double dstar = (1.0 + d2 - g.D * g.D) / (ustar + g.D);
    const double vmax = std::sqrt(std::max(dstar, 0.0));
    std::vector<double> vpts{0.0};
    {
      std::vector<double> upts;
      edge_breakpoints(upts, g.D, ustar);
      for (double ub : upts) {
        const double dv2 = dstar - (ub - g.D);
        if (dv2 > 0.0) vpts.push_back(std::sqrt(dv2));
      }
    }
    vpts.push_back(vmax);
    std::sort(vpts.begin(), vpts.end());
    vpts.erase(std::unique(vpts.begin(), vpts.end()), vpts.end());

    auto f00v = [&](double v) -> double {
      const double u = ustar - v * v;
      const double root = std::sqrt(ustar + u);
      return phi(u) * (2.0 * v - 2.0 * (1.0 - u * u) / root);
    };
    auto fPv = [&](double v) -> double {
      const double u = ustar - v * v;
      const double root = std::sqrt(ustar + u);
      // u^2 - D^2 = (dstar - v^2)(u + D): the direct difference of squares
      // loses the whole sliver when D is large
      const double u2mD2 = (dstar - v * v) * (u + g.D);
      return phi(u) * 2.0 * g.kappa * g.kappa * u2mD2 / root;
    };
    I00 = integrate_segmented(f00v, vpts, tol, max_segs).value;
    IP = integrate_segmented(fPv, vpts, tol, max_segs).value;
    if (u_hi > ustar) {
      // integral of the Fermi pair from ustar to infinity
      I00 += (softplus(-(B * ustar + m)) + softplus(-(B * ustar - m))) / B;
    }
  } else {
    // The two numerators relate to the square-root argument w by
    //   num_00 = w - d2,   num_P = ep2 * w - kappa^2,
    // so both brackets reduce to expressions in s = 1 - Re sqrt(w), which
    // has the closed small-u form below; the naive 1 - Re(num/sqrt(w))
    // cancels catastrophically wherever the thermal part is a small
    // correction (small u, xi close to ep).
    const double kap2 = g.kappa * g.kappa;
    const double ep2sum = kap2 + xi2;
    const double ep2res = sum_residual(kap2, xi2, ep2sum);  // kap2+xi2-ep2sum
    auto brackets = [&](double u, double& b00, double& bP) {
      const double wr = 1.0 - u * u + d2;
      const double wi = 2.0 * r * u;
      const double wabs = std::hypot(wr, wi);
      const double t = std::sqrt(0.5 * (wabs + wr));  // Re sqrt(w)
      const double APB = (1.0 + u * u - d2) + wabs;
      const double s = 2.0 * (kap2 / ep2sum) * (u - g.D) * (u + g.D) /
                       (APB * (1.0 + t));
      b00 = s + d2 * t / wabs;
      // 1 - |w| without cancellation: (1 - |w|^2)/(1 + |w|)
      const double md = u * u - d2;
      const double one_m_wabs =
          (md * (2.0 - md) - wi * wi) / (1.0 + wabs);
      bP = xi2 * s + t * ep2res + kap2 * t * one_m_wabs / wabs;
    };
    auto f00 = [&](double u) -> double {
      double b00, bP;
      brackets(u, b00, bP);
      return phi(u) * b00;
    };
    auto fP = [&](double u) -> double {
      double b00, bP;
      brackets(u, b00, bP);
      return phi(u) * bP;
    };

    std::vector<double> pts{g.D, u_hi};
    if (ustar > g.D && ustar < u_hi) {
      // near-singular peak of width ~ r*ustar
      pts.push_back(ustar);
      for (double f : {100.0, 10.0, 1.0, 0.1}) {
        const double w = f * std::max(r, 1e-14) * ustar;
        if (ustar - w > g.D) pts.push_back(ustar - w);
        if (ustar + w < u_hi) pts.push_back(ustar + w);
      }
    }
    edge_breakpoints(pts, g.D, u_hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    I00 = integrate_segmented(f00, pts, tol, max_segs).value;
    IP = integrate_segmented(fP, pts, tol, max_segs).value;
  }

  const double v2 = p.vf_ratio * p.vf_ratio;
  const double pref00 = 4.0 * p.alpha_fs / v2 * (g.ep / hbar_c);
  const double prefP =
      -4.0 * p.alpha_fs / v2 * g.ep / (hbar_c * hbar_c * hbar_c);
  return {pref00 * I00, prefP * IP};
}

TensorPair tensor_zeroT_doped(const GrapheneParams& p, double xi,
                              double kperp) {
  if (!(p.gap_eV < 2.0 * p.mu_eV))
    throw CaseError("tensor_zeroT_doped: requires gap < 2 mu");
  const auto tc = detail::tensor_zeroT_doped_c(p, cplx(xi, 0.0), kperp);
  return {tc.pi00.real(), tc.pi.real()};
}

TensorPair tensor_thermal_part_T0(const GrapheneParams& p, double xi,
                                  double kperp) {
  if (p.gap_eV >= 2.0 * p.mu_eV) return {0.0, 0.0};
  return tensor_zeroT_doped(p, xi, kperp) - tensor_zeroT_undoped(p, xi, kperp);
}

TensorPair tensor_components(const GrapheneParams& p, double xi, double kperp,
                             double T) {
  if (T < 0.0) throw DomainError("tensor_components: T must be >= 0");
  if (T > 0.0)
    return tensor_zeroT_undoped(p, xi, kperp) +
           tensor_thermal_part(p, xi, kperp, T);
  if (p.gap_eV >= 2.0 * p.mu_eV) return tensor_zeroT_undoped(p, xi, kperp);
  return tensor_zeroT_doped(p, xi, kperp);
}

namespace detail {

TensorPairC tensor_zeroT_undoped_c(const GrapheneParams& p, cplx xi,
                                   double kperp) {
  const double kappa = p.vf_ratio * hbar_c * kperp;
  const cplx ep = std::sqrt(kappa * kappa + xi * xi);
  if (std::abs(ep) == 0.0)
    throw DomainError("polarization tensor undefined at the origin node");
  const cplx ps = p.gap_eV == 0.0 ? cplx(pi, 0.0) : psi(p.gap_eV / ep);
  const double k2 = kperp * kperp;
  return {p.alpha_fs * k2 * hbar_c * ps / ep,
          p.alpha_fs * k2 * (ep / hbar_c) * ps};
}

TensorPairC tensor_zeroT_doped_c(const GrapheneParams& p, cplx xi,
                                 double kperp) {
  const double kappa = p.vf_ratio * hbar_c * kperp;
  if (kappa == 0.0)
    throw DomainError("polarization tensor undefined at the origin node");
  const double mu = p.mu_eV;
  const cplx ep2 = kappa * kappa + xi * xi;
  const cplx ep = std::sqrt(ep2);
  const cplx M = 1.0 + p.gap_eV * p.gap_eV / ep2;
  const cplx denom = kappa * std::sqrt(M);

  // Im f(y) on the real-frequency section continues to (f(y) - f(y~))/(2i),
  // where y~ carries mu -> -mu; for real xi it reduces to the imaginary part.
  const cplx y = (xi + cplx(0.0, 2.0 * mu)) / denom;
  const cplx yt = (xi - cplx(0.0, 2.0 * mu)) / denom;
  const cplx sq = std::sqrt(1.0 + y * y);
  const cplx sqt = std::sqrt(1.0 + yt * yt);
  const cplx half_i(0.0, -0.5);  // 1/(2i)
  const cplx G1 = half_i * (y * sq - yt * sqt);
  const cplx G2 = half_i * (std::log(y + sq) - std::log(yt + sqt));

  const cplx bracket00 = 2.0 * M * G1 + (2.0 - M) * (2.0 * G2 - pi);
  const cplx bracketP = 2.0 * M * G1 - (2.0 - M) * (2.0 * G2 - pi);

  const double v2 = p.vf_ratio * p.vf_ratio;
  const double k2 = kperp * kperp;
  const cplx pi00 =
      8.0 * p.alpha_fs * mu / (hbar_c * v2) -
      p.alpha_fs * k2 * hbar_c / ep * bracket00;
  const cplx piv =
      -8.0 * p.alpha_fs * mu * xi * xi / (v2 * hbar_c * hbar_c * hbar_c) +
      p.alpha_fs * k2 * (ep / hbar_c) * bracketP;
  return {pi00, piv};
}

TensorPairC tensor_T0_c(const GrapheneParams& p, cplx xi, double kperp) {
  if (p.gap_eV >= 2.0 * p.mu_eV) return tensor_zeroT_undoped_c(p, xi, kperp);
  return tensor_zeroT_doped_c(p, xi, kperp);
}

}  // namespace detail

}  // namespace casimir
