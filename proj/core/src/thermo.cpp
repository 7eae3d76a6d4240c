#include "casimir/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "casimir/constants.hpp"
#include "casimir/derivative.hpp"
#include "casimir/special.hpp"

namespace casimir {

const char* to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::Pristine: return "Pristine";
    case CaseLabel::Gapped: return "Gapped";
    case CaseLabel::Critical: return "Critical";
    case CaseLabel::Doped: return "Doped";
  }
  return "?";
}

const char* to_string(Verdict v) {
  return v == Verdict::Satisfied ? "Satisfied" : "Violated";
}

CaseLabel classify_case(const GrapheneParams& p, double tol_eV) {
  if (!(tol_eV > 0.0)) throw DomainError("classify_case: tol must be > 0");
  if (p.gap_eV <= tol_eV && p.mu_eV <= tol_eV) return CaseLabel::Pristine;
  const double d = p.gap_eV - 2.0 * p.mu_eV;
  if (std::abs(d) <= tol_eV) return CaseLabel::Critical;
  return d > 0.0 ? CaseLabel::Gapped : CaseLabel::Doped;
}

namespace {

template <class System>
EntropyResult entropy_impl(const System& s, double T, double rel_tol,
                           ThreadPool* pool, double h_floor) {
  if (!(T > 0.0)) throw DomainError("entropy: T must be > 0");
  double h0 = std::max(T / 20.0, h_floor);
  h0 = std::min(h0, 0.4 * T);  // keep T - 2h > 0
  auto F = [&](double t) {
    return thermal_correction_breakdown(s, t, rel_tol, pool).total_correction;
  };
  const DerivativeResult d = derivative_wrt_parameter(F, T, h0);
  return {-d.value, d.error_estimate};
}

bool provider_graphene(const ReflectionProvider& p, GrapheneParams* out) {
  if (!p.is_graphene()) return false;
  if (out) *out = p.graphene();
  return true;
}

template <class System>
ScanResult scan_impl(const System& s, const ReflectionProvider& provider,
                     SystemKind kind, double alpha0, double E0,
                     std::span<const double> grid, double rel_tol,
                     ThreadPool* pool) {
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (!(grid[i] < grid[i + 1]))
      throw DomainError("low_T_scan: T grid must be strictly increasing");
  if (grid.empty() || !(grid.front() > 0.0))
    throw DomainError("low_T_scan: T grid must be positive");

  ScanResult out;
  out.kind = kind;
  out.a_um = s.a_um;
  out.alpha0_um3 = alpha0;
  out.graphene = provider_graphene(provider, &out.params);
  out.E0 = E0;

  const CaseLabel c =
      out.graphene ? classify_case(out.params) : CaseLabel::Pristine;

  auto row_at = [&](std::size_t i, ThreadPool* inner) {
    ScanRow row;
    row.T_K = grid[i];
    row.breakdown = thermal_correction_breakdown(s, row.T_K, rel_tol, inner);
    const EntropyResult e = entropy_impl(s, row.T_K, rel_tol, inner, 1e-3);
    row.S = e.S;
    row.S_err = e.S_err;
    row.in_window =
        !out.graphene || in_validity_window(c, out.params, s.a_um, row.T_K);
    return row;
  };

  // Rows are independent; parallelise across rows with sequential insides so
  // the computation graph (and hence the output bytes) never depends on the
  // worker count.
  if (pool && grid.size() > 1) {
    out.rows = pool->map<ScanRow>(
        grid.size(), [&](std::size_t i) { return row_at(i, nullptr); });
  } else {
    out.rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      out.rows.push_back(row_at(i, nullptr));
  }

  bool warned = false;
  for (const auto& r : out.rows) {
    if (!r.in_window && !warned) {
      std::cerr << "warning: T = " << r.T_K
                << " K lies outside the low-temperature validity window for "
                << to_string(c) << "\n";
      warned = true;
    }
  }
  return out;
}

struct QuadFit {
  double c0, rms;
};

// Least-squares quadratic in T; returns the T=0 intercept.
QuadFit quad_intercept(const std::vector<double>& T,
                       const std::vector<double>& y) {
  const std::size_t n = T.size();
  double s0 = n, s1 = 0, s2 = 0, s3 = 0, s4 = 0, b0 = 0, b1 = 0, b2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = T[i], t2 = t * t;
    s1 += t;
    s2 += t2;
    s3 += t2 * t;
    s4 += t2 * t2;
    b0 += y[i];
    b1 += y[i] * t;
    b2 += y[i] * t2;
  }
  // Solve the 3x3 normal equations by Cramer's rule.
  const double det = s0 * (s2 * s4 - s3 * s3) - s1 * (s1 * s4 - s3 * s2) +
                     s2 * (s1 * s3 - s2 * s2);
  if (det == 0.0) throw DegenerateData("extrapolation: singular normal matrix");
  const double c0 = (b0 * (s2 * s4 - s3 * s3) - s1 * (b1 * s4 - s3 * b2) +
                     s2 * (b1 * s3 - s2 * b2)) /
                    det;
  const double c1 = (s0 * (b1 * s4 - b2 * s3) - b0 * (s1 * s4 - s3 * s2) +
                     s2 * (s1 * b2 - b1 * s2)) /
                    det;
  const double c2 = (s0 * (s2 * b2 - s3 * b1) - s1 * (s1 * b2 - s3 * b0) +
                     s2 * (s1 * b1 - s2 * b0)) /
                    det;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - c0 - c1 * T[i] - c2 * T[i] * T[i];
    ssr += r * r;
  }
  return {c0, std::sqrt(ssr / n)};
}

QuadFit linear_intercept(const std::vector<double>& T,
                         const std::vector<double>& y) {
  const std::size_t n = T.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += T[i];
    sy += y[i];
    sxx += T[i] * T[i];
    sxy += T[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / det;
  const double c0 = (sy - slope * sx) / n;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - c0 - slope * T[i];
    ssr += r * r;
  }
  return {c0, std::sqrt(ssr / n)};
}

}  // namespace

EntropyResult entropy(const PlatePlateSystem& s, double T, double rel_tol,
                      ThreadPool* pool, double h_floor) {
  return entropy_impl(s, T, rel_tol, pool, h_floor);
}

EntropyResult entropy(const AtomPlateSystem& s, double T, double rel_tol,
                      ThreadPool* pool, double h_floor) {
  return entropy_impl(s, T, rel_tol, pool, h_floor);
}

ScanResult low_T_scan(const PlatePlateSystem& s,
                      std::span<const double> grid, double rel_tol,
                      ThreadPool* pool) {
  const double E0 = casimir_energy_T0(s, rel_tol);
  return scan_impl(s, s.plate1, SystemKind::PlatePlate, 0.0, E0, grid,
                   rel_tol, pool);
}

ScanResult low_T_scan(const AtomPlateSystem& s, std::span<const double> grid,
                      double rel_tol, ThreadPool* pool) {
  const double E0 = casimir_polder_energy_T0(s, rel_tol);
  return scan_impl(s, s.plate, SystemKind::AtomPlate, s.atom.alpha0_um3, E0,
                   grid, rel_tol, pool);
}

bool in_validity_window(CaseLabel c, const GrapheneParams& p, double a,
                        double T) {
  constexpr double small = 0.1;  // operational reading of "much less than"
  const double kT = k_boltzmann * T;
  const bool thermal_photon = 4.0 * pi * kT * a / hbar_c <= small;
  switch (c) {
    case CaseLabel::Pristine:
      // k_B T << hbar v_F/(2a)
      return 2.0 * a * kT / (p.vf_ratio * hbar_c) <= small;
    case CaseLabel::Gapped:
      return thermal_photon &&
             p.vf_ratio * hbar_c / (2.0 * a * p.gap_eV) <= small &&
             std::exp(-(p.gap_eV - 2.0 * p.mu_eV) / (2.0 * kT)) <= small;
    case CaseLabel::Critical:
      return thermal_photon &&
             p.vf_ratio * hbar_c / (2.0 * a * p.gap_eV) <= small;
    case CaseLabel::Doped:
      return thermal_photon &&
             std::exp(-(2.0 * p.mu_eV - p.gap_eV) / (2.0 * kT)) <= small;
  }
  return true;
}

ScalingDescriptor expected_asymptote(CaseLabel c, SystemKind kind, double a,
                                     const GrapheneParams& p, double alpha0,
                                     double T_ref) {
  const double kT = k_boltzmann * T_ref;
  const double hc = hbar_c;
  const double vhc = p.vf_ratio * hc;
  ScalingDescriptor d;
  if (kind == SystemKind::AtomPlate) {
    switch (c) {
      case CaseLabel::Pristine:
        d = {2.0, false, alpha0 * kT * kT / (vhc * vhc * a)};
        break;
      case CaseLabel::Gapped:
        d = {4.0, false,
             alpha0 * kT * kT * kT * kT / (hc * hc * hc * p.gap_eV)};
        break;
      case CaseLabel::Critical:
        d = {0.0, false, alpha0 / (a * a * a)};
        break;
      case CaseLabel::Doped:
        d = {1.0, false,
             alpha0 * p.mu_eV * p.mu_eV * kT /
                 (hc * hc * a *
                  std::sqrt(4.0 * p.mu_eV * p.mu_eV - p.gap_eV * p.gap_eV))};
        break;
    }
  } else {
    switch (c) {
      case CaseLabel::Pristine:
        d = {2.0, true,
             (kT / hc) * (kT / hc) * std::abs(std::log(a * kT / hc))};
        break;
      case CaseLabel::Gapped:
        d = {4.0, false,
             kT * kT * kT * kT / (hc * hc * p.gap_eV * p.gap_eV)};
        break;
      case CaseLabel::Critical:
        d = {0.0, false, 1.0 / (a * a)};
        break;
      case CaseLabel::Doped:
        d = {1.0, false,
             a * (4.0 * p.mu_eV * p.mu_eV - p.gap_eV * p.gap_eV) * kT /
                 (hc * hc * hc)};
        break;
    }
  }
  return d;
}

void extrapolate_entropy_limit(const ScanResult& scan, double* limit_kB,
                               double* err_kB) {
  std::vector<double> T, y;
  for (const auto& r : scan.rows) {
    if (!r.in_window) continue;
    T.push_back(r.T_K);
    y.push_back(r.S / k_boltzmann);
  }
  if (T.size() < 4)
    throw DegenerateData("extrapolation: need at least 4 in-window rows");
  const QuadFit q = quad_intercept(T, y);
  const QuadFit lin = linear_intercept(T, y);
  *limit_kB = q.c0;
  // Model spread plus residual scatter; a crude but serviceable error bar.
  *err_kB = std::max(3.0 * q.rms, std::abs(q.c0 - lin.c0));
}

NernstReport nernst_verdict(const ScanResult& scan, CaseLabel c) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : scan.rows) {
    if (!r.in_window) continue;
    // Reduced temperature tau = a k_B T/(hbar c): the exponent is unchanged
    // and the logarithmic factor of the pristine-sheet law becomes ln|tau|.
    const double tau = scan.a_um * k_boltzmann * r.T_K / hbar_c;
    pts.emplace_back(tau, r.S / k_boltzmann);
  }
  if (pts.size() < 6)
    throw DegenerateData("nernst_verdict: need >= 6 rows inside the window");

  NernstReport rep;
  rep.case_label = c;
  rep.fit = fit_scaling(pts, /*try_log=*/true);
  const ScalingDescriptor exp_d =
      expected_asymptote(c, scan.kind, scan.a_um, scan.params,
                         scan.alpha0_um3, scan.rows.front().T_K);
  rep.expected_exponent = exp_d.exponent;
  rep.expected_log = exp_d.log_factor;
  extrapolate_entropy_limit(scan, &rep.entropy_limit, &rep.limit_err);
  const bool limit_zero =
      std::abs(rep.entropy_limit) <= 2.0 * rep.limit_err;
  rep.verdict = (rep.fit.exponent > 0.5 && limit_zero) ? Verdict::Satisfied
                                                       : Verdict::Violated;
  return rep;
}

double drude_entropy_T0_kB(double a, double hwp) {
  if (!(a > 0.0) || !(hwp > 0.0))
    throw DomainError("drude_entropy_T0: a and hwp must be > 0");
  const double x = hbar_c / (a * hwp);  // c/(a omega_p)
  if (x > 0.3)
    throw SeriesOutOfRange("drude_entropy_T0: series needs c/(a wp) <= 0.3");
  const double bracket = 1.0 - 4.0 * x + 12.0 * x * x;
  return -zeta3 / (16.0 * pi * a * a) * bracket;
}

double dielectric_dc_entropy_T0_kB(double a, double eps0) {
  if (!(eps0 > 1.0))
    throw DomainError("dielectric_dc_entropy_T0: eps0 must be > 1");
  const double z = (eps0 - 1.0) / (eps0 + 1.0);
  return (zeta3 - li3(z * z)) / (16.0 * pi * a * a);
}

double cp_dc_entropy_T0_kB(double a, double alpha0, double eps0) {
  if (!(eps0 > 1.0))
    throw DomainError("cp_dc_entropy_T0: eps0 must be > 1");
  if (!(alpha0 > 0.0))
    throw DomainError("cp_dc_entropy_T0: alpha0 must be > 0");
  // l = 0 TM discontinuity: the conductor value 1 minus the conductivity-free
  // value (eps0-1)/(eps0+1), mirroring the zeta(3) - Li_3 structure of the
  // two-plate formula. Verified against low-temperature scans at several
  // eps0; the often-quoted form with the bare (eps0-1)/(eps0+1) factor is
  // inconsistent with both.
  const double z = (eps0 - 1.0) / (eps0 + 1.0);
  return alpha0 / (4.0 * a * a * a) * (1.0 - z);
}

}  // namespace casimir
