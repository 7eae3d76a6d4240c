#pragma once

#include <complex>
#include <functional>

namespace casimir {

// Abel-Plana difference for a function F analytic in the right half-plane
// and decaying along the real axis:
//
//   sum'_{l>=0} F(l) - int_0^inf F(t) dt = i int_0^inf [F(it)-F(-it)] /
//                                          (e^{2 pi t} - 1) dt.
//
// Throws DomainError if F returns a non-finite value on the sampled contour,
// NonConvergence if the contour quadrature fails.
double abel_plana_difference(
    const std::function<std::complex<double>(std::complex<double>)>& F,
    double rel_tol);

// Same contour integral when only Im F(it) is available (F real on the real
// axis, so i[F(it)-F(-it)] = -2 Im F(it)). This is the engine-facing form:
// resolving the imaginary part directly avoids losing it inside a
// complex-norm error estimate.
double abel_plana_im(const std::function<double(double)>& im_F_it,
                     double rel_tol);

}  // namespace casimir
