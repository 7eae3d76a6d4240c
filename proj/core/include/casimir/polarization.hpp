#pragma once

#include <complex>

#include "casimir/errors.hpp"

namespace casimir {

// Graphene sheet characterised by an energy gap and a chemical potential.
struct GrapheneParams {
  double gap_eV = 0.0;  // Delta
  double mu_eV = 0.0;   // chemical potential
  double vf_ratio = 1.0 / 300.0;   // v_F/c
  double alpha_fs = 7.2973525693e-3;

  void validate() const {
    if (gap_eV < 0.0) throw ConfigError("graphene: gap must be >= 0");
    if (mu_eV < 0.0) throw ConfigError("graphene: mu must be >= 0");
    if (!(vf_ratio > 0.0 && vf_ratio < 1.0))
      throw ConfigError("graphene: vF ratio must lie in (0,1)");
    if (!(alpha_fs > 0.0)) throw ConfigError("graphene: alpha must be > 0");
  }
};

// Polarization tensor components scaled by hbar:
//   pi00 = Pi_00/hbar in 1/um,  pi = Pi/hbar in 1/um^3.
// In these units the sheet reflection coefficients read
//   r_TM = q pi00 / (q pi00 + 2 k^2),  r_TE = -pi / (pi + 2 k^2 q).
struct TensorPair {
  double pi00 = 0.0;
  double pi = 0.0;

  TensorPair operator+(const TensorPair& o) const {
    return {pi00 + o.pi00, pi + o.pi};
  }
  TensorPair operator-(const TensorPair& o) const {
    return {pi00 - o.pi00, pi - o.pi};
  }
};

// Psi(x) = 2[x + (1-x^2) arctan(1/x)], continuous at x=0 with Psi(0)=pi.
double psi(double x);
std::complex<double> psi(std::complex<double> x);

// Zero-temperature, undoped (mu=0) tensor at the node (xi, kperp); xi is
// hbar*xi in eV, kperp in 1/um. Valid for any gap. For gap >= 2 mu this is
// the exact T=0 tensor.
TensorPair tensor_zeroT_undoped(const GrapheneParams& p, double xi_eV,
                                double kperp);

// Finite-temperature / chemical-potential part (the u-integrals with Fermi
// factors). xi = 0 takes the analytic static limit. Requires T > 0.
TensorPair tensor_thermal_part(const GrapheneParams& p, double xi_eV,
                               double kperp, double T_kelvin);

// T -> 0+ limit of the thermal part: zero for gap >= 2 mu, and the
// closed-form doped T=0 tensor minus the undoped one otherwise.
TensorPair tensor_thermal_part_T0(const GrapheneParams& p, double xi_eV,
                                  double kperp);

// Exact T=0 tensor for doped graphene (gap < 2 mu), closed form with
// principal-branch complex square root and logarithm.
TensorPair tensor_zeroT_doped(const GrapheneParams& p, double xi_eV,
                              double kperp);

// Dispatcher: T > 0 -> undoped + thermal; T = 0 -> the appropriate branch of
// the zero-temperature tensor on either side of gap = 2 mu.
TensorPair tensor_components(const GrapheneParams& p, double xi_eV,
                             double kperp, double T_kelvin);

namespace detail {

using cplx = std::complex<double>;

struct TensorPairC {
  cplx pi00;
  cplx pi;
};

// Analytic continuations of the zero-temperature branches to complex
// frequency (right half-plane, boundary values on the imaginary axis taken
// from the right via signed zeros). Used on the Abel-Plana contour.
TensorPairC tensor_zeroT_undoped_c(const GrapheneParams& p, cplx xi_eV,
                                   double kperp);
TensorPairC tensor_zeroT_doped_c(const GrapheneParams& p, cplx xi_eV,
                                 double kperp);
TensorPairC tensor_T0_c(const GrapheneParams& p, cplx xi_eV, double kperp);

}  // namespace detail

}  // namespace casimir
