#pragma once

#include <functional>

namespace casimir {

struct DerivativeResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

// d/dT of a smooth F at T by central differences with a depth-3 Richardson
// ladder (step shrink factor 2). Requires T - 2*h0 > 0.
DerivativeResult derivative_wrt_parameter(const std::function<double(double)>& F,
                                          double T, double h0);

}  // namespace casimir
