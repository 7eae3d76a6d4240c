#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

namespace detail {

// Gauss7-Kronrod15 pair on [-1,1]; nodes at odd indices plus the centre are
// the embedded Gauss points.
inline constexpr double gk_nodes[7] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898};
inline constexpr double gk_wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double gk_wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <class T>
struct QuadSegment {
  double a, b;
  T value;
  double err;
  bool stuck = false;  // too narrow to split further
};

template <class T, class F>
QuadSegment<T> gk15(F& f, double a, double b, long& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fc = f(c);
  T resk = gk_wk[7] * fc;
  T resg = gk_wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * gk_nodes[i];
    T f1 = f(c - dx);
    T f2 = f(c + dx);
    resk += gk_wk[i] * (f1 + f2);
    if (i % 2 == 1) resg += gk_wg[i / 2] * (f1 + f2);
  }
  resk *= h;
  resg *= h;
  evals += 15;
  const double diff = std::abs(resk - resg);
  double err = diff;
  const double scaled = std::pow(200.0 * diff, 1.5);
  if (scaled < err) err = scaled;
  return {a, b, resk, err, false};
}

// Globally adaptive refinement over an initial partition. Deterministic:
// the worst segment (ties broken by position) is split until the summed
// error estimate meets rel_tol relative to the accumulated value.
template <class T, class F>
std::pair<T, QuadratureResult> adaptive_gk(F&& f,
                                           const std::vector<double>& pts,
                                           double rel_tol, long max_segments,
                                           const char* what) {
  if (!(rel_tol > 0.0)) throw DomainError("quadrature: rel_tol must be > 0");
  long evals = 0;
  std::vector<QuadSegment<T>> segs;
  segs.reserve(64);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i] < pts[i + 1])) continue;
    segs.push_back(gk15<T>(f, pts[i], pts[i + 1], evals));
  }
  if (segs.empty()) throw DomainError("quadrature: empty integration range");

  for (;;) {
    T total{};
    double err = 0.0;
    double l1 = 0.0;
    for (const auto& s : segs) {
      total += s.value;
      err += s.err;
      l1 += std::abs(s.value);
    }
    // The L1 fallback bounds the effort spent on integrals that cancel to
    // (near) zero: such a result is accurate in absolute terms relative to
    // the mass that produced it.
    const double target =
        std::max(rel_tol * std::abs(total), rel_tol * 1e-3 * l1);
    if (err <= target || err <= 1e-300) {
      QuadratureResult qr{0.0, err, evals};
      return {total, qr};
    }

    std::size_t worst = segs.size();
    double worst_err = -1.0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      if (!segs[i].stuck && segs[i].err > worst_err) {
        worst_err = segs[i].err;
        worst = i;
      }
    }
    bool budget = static_cast<long>(segs.size()) >= max_segments;
    if (worst == segs.size() || budget) {
      if (budget || err > 16.0 * target) {
        NonConvergence nc("quadrature: subdivision limit reached",
                          std::abs(total), err);
        nc.add_context(what);
        throw nc;
      }
      QuadratureResult qr{0.0, err, evals};
      return {total, qr};  // only stuck slivers left; error is acceptable
    }

    auto seg = segs[worst];
    const double mid = 0.5 * (seg.a + seg.b);
    if (!(seg.a < mid && mid < seg.b)) {
      segs[worst].stuck = true;
      continue;
    }
    segs[worst] = gk15<T>(f, seg.a, mid, evals);
    segs.push_back(gk15<T>(f, mid, seg.b, evals));
  }
}

// Maps [0,inf) to s in [0,1) via x = scale*s/(1-s).
template <class T, class F>
std::pair<T, QuadratureResult> semi_infinite_gk(
    F&& f, double decay_scale, double rel_tol,
    const std::vector<double>& breakpoints_x, long max_segments,
    const char* what) {
  if (!(decay_scale > 0.0))
    throw DomainError("integrate_semi_infinite: decay_scale must be > 0");
  const double L = decay_scale;
  auto g = [&f, L](double s) {
    const double om = 1.0 - s;
    const double x = L * s / om;
    return f(x) * (L / (om * om));
  };
  std::vector<double> pts{0.0};
  for (double x : breakpoints_x) {
    if (x > 0.0 && std::isfinite(x)) pts.push_back(x / (x + L));
  }
  pts.push_back(0.5);  // x = scale
  pts.push_back(1.0);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return adaptive_gk<T>(g, pts, rel_tol, max_segments, what);
}

}  // namespace detail

// Integrates f over [a,b] to a relative tolerance.
template <class F>
QuadratureResult integrate_interval(F&& f, double a, double b, double rel_tol,
                                    long max_segments = 4000) {
  auto [value, qr] = detail::adaptive_gk<double>(
      f, std::vector<double>{a, b}, rel_tol, max_segments, "interval");
  qr.value = value;
  return qr;
}

// As above but with a caller-supplied initial partition (sorted breakpoints).
template <class F>
QuadratureResult integrate_segmented(F&& f, std::vector<double> breakpoints,
                                     double rel_tol, long max_segments = 4000) {
  auto [value, qr] = detail::adaptive_gk<double>(f, breakpoints, rel_tol,
                                                 max_segments, "segmented");
  qr.value = value;
  return qr;
}

// Integrates f over [0,inf). f must be finite on (0,inf) and decay at least
// exponentially beyond decay_scale; the tail is mapped to a finite interval
// by x = decay_scale*(1/(1-s) - 1).
template <class F>
QuadratureResult integrate_semi_infinite(F&& f, double decay_scale,
                                         double rel_tol,
                                         std::vector<double> breakpoints = {},
                                         long max_segments = 4000) {
  auto [value, qr] = detail::semi_infinite_gk<double>(
      f, decay_scale, rel_tol, breakpoints, max_segments, "semi-infinite");
  qr.value = value;
  return qr;
}

namespace detail {

// Complex-valued variants used on the imaginary-frequency contour.
template <class F>
std::pair<std::complex<double>, QuadratureResult> integrate_interval_c(
    F&& f, std::vector<double> breakpoints, double rel_tol,
    long max_segments = 4000) {
  return adaptive_gk<std::complex<double>>(f, breakpoints, rel_tol,
                                           max_segments, "interval(c)");
}

}  // namespace detail

}  // namespace casimir
