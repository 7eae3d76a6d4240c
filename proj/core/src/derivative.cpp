#include "casimir/derivative.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "casimir/errors.hpp"

namespace casimir {

DerivativeResult derivative_wrt_parameter(
    const std::function<double(double)>& F, double T, double h0) {
  if (!(h0 > 0.0)) throw DomainError("derivative: h0 must be > 0");
  if (!(T - 2.0 * h0 > 0.0))
    throw DomainError("derivative: need T - 2*h0 > 0");
  const double eps = std::numeric_limits<double>::epsilon();
  if (h0 < 64.0 * eps * std::max(std::abs(T), 1.0))
    throw StepUnderflow("derivative: h0 below parameter resolution");

  constexpr int depth = 3;
  double R[depth][depth];
  double fmag = 0.0;
  double h = h0;
  for (int i = 0; i < depth; ++i, h *= 0.5) {
    const double fp = F(T + h);
    const double fm = F(T - h);
    fmag = std::max(fmag, std::max(std::abs(fp), std::abs(fm)));
    R[i][0] = (fp - fm) / (2.0 * h);
    double p4 = 4.0;
    for (int j = 1; j <= i; ++j, p4 *= 4.0) {
      R[i][j] = (p4 * R[i][j - 1] - R[i - 1][j - 1]) / (p4 - 1.0);
    }
  }

  const double value = R[depth - 1][depth - 1];
  // Successive-order spread plus a rounding floor from the difference quotient.
  const double spread = std::max(std::abs(value - R[depth - 1][depth - 2]),
                                 std::abs(value - R[depth - 2][depth - 2]));
  const double floor = 8.0 * eps * fmag / (h0 / 2.0);
  return {value, spread + floor};
}

}  // namespace casimir
