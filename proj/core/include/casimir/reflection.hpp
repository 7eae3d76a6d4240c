#pragma once

#include <complex>
#include <vector>

#include "casimir/polarization.hpp"
#include "casimir/response.hpp"

namespace casimir {

// Reflection amplitudes on the imaginary frequency axis. Sign convention:
// 0 <= r_tm <= 1 and -1 <= r_te <= 0 for all materials handled here.
struct ReflectionPair {
  double r_tm = 0.0;
  double r_te = 0.0;
};

struct ReflectionPairC {
  std::complex<double> r_tm;
  std::complex<double> r_te;
};

// Fresnel coefficients of a dielectric/magnetic half-space at (xi, kperp);
// xi is hbar*xi in eV, kperp in 1/um. xi = 0 uses the per-model analytic
// limit (Drude and dc: r_te = 0, r_tm = 1; plasma: closed form).
ReflectionPair fresnel(const DielectricModel& model, double xi_eV,
                       double kperp);

// Two-dimensional free-electron-gas sheet.
ReflectionPair hydrodynamic(const HydrodynamicSheet& sheet, double xi_eV,
                            double kperp);

// Graphene sheet via the polarization tensor at the Matsubara node l.
ReflectionPair graphene_pt(const GrapheneParams& p, long l, double kperp,
                           double T_kelvin);

// Same sheet via the density-density correlation functions; equal to
// graphene_pt wherever defined. The TE channel needs l >= 1.
ReflectionPair graphene_correlation(const GrapheneParams& p, long l,
                                    double kperp, double T_kelvin);

// Same sheet via the in-plane/out-of-plane conductivities; l >= 1.
ReflectionPair graphene_conductivity(const GrapheneParams& p, long l,
                                     double kperp, double T_kelvin);

// Zero-temperature graphene coefficients at continuous imaginary frequency.
ReflectionPair graphene_pt_T0(const GrapheneParams& p, double xi_eV,
                              double kperp);

// Uniform provider over all material families.
class ReflectionProvider {
 public:
  enum class Kind {
    IdealMetal,
    Fresnel,
    Hydrodynamic,
    GraphenePT,
    GrapheneCorrelation,
    GrapheneConductivity,
  };

  static ReflectionProvider ideal_metal();
  static ReflectionProvider fresnel(const DielectricModel& m);
  static ReflectionProvider hydrodynamic(const HydrodynamicSheet& s);
  static ReflectionProvider graphene_pt(const GrapheneParams& p);
  static ReflectionProvider graphene_correlation(const GrapheneParams& p);
  static ReflectionProvider graphene_conductivity(const GrapheneParams& p);

  Kind kind() const { return kind_; }
  const GrapheneParams& graphene() const { return graphene_; }
  const DielectricModel& dielectric() const { return dielectric_; }
  const HydrodynamicSheet& sheet() const { return sheet_; }

  bool is_graphene() const {
    return kind_ == Kind::GraphenePT || kind_ == Kind::GrapheneCorrelation ||
           kind_ == Kind::GrapheneConductivity;
  }

  // Finite-temperature coefficients at the Matsubara node l.
  ReflectionPair at_node(long l, double kperp, double T_kelvin) const;

  // Zero-temperature coefficients at continuous imaginary frequency.
  ReflectionPair t0(double xi_eV, double kperp) const;

  // T=0 coefficients continued to complex frequency (right-half-plane
  // boundary values); used on the Abel-Plana contour.
  ReflectionPairC t0_complex(std::complex<double> xi_eV, double kperp) const;

  // Whether the coefficients depend on T other than through the Matsubara
  // frequencies (true only for the graphene family).
  bool has_explicit_temperature_dependence() const { return is_graphene(); }

  // Finite-T and T=0 coefficients at one node plus their exact difference,
  // sharing a single tensor evaluation. delta is computed cancellation-free
  // from the thermal part of the polarization tensor and is exactly zero for
  // T-independent models.
  struct NodeEval {
    ReflectionPair at_T;
    ReflectionPair at_0;
    ReflectionPair delta;
  };
  NodeEval node_eval(long l, double kperp, double T_kelvin) const;

  // Exact r(T) - r(0) at the node.
  ReflectionPair delta_T(long l, double kperp, double T_kelvin) const;

  // The imaginary part of t0_complex(i s, k) vanishes identically beyond a
  // finite kperp for models that stay real and pole-free on the imaginary
  // axis. Returns that cutoff, or a negative value when no finite cutoff
  // exists (lossy models, and models with axis plasmon poles).
  double im_support_cutoff(double s_eV) const;

  // kperp locations of on-axis poles (surface plasmons) at imaginary
  // frequency s; seeded as quadrature breakpoints so the +-pi branch windows
  // around them are resolved.
  std::vector<double> axis_pole_breakpoints(double s_eV) const;

 private:
  Kind kind_ = Kind::IdealMetal;
  DielectricModel dielectric_;
  HydrodynamicSheet sheet_;
  GrapheneParams graphene_;
};

}  // namespace casimir
