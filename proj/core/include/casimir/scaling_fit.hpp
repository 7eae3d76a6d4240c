#pragma once

#include <span>
#include <utility>

namespace casimir {

struct ScalingFit {
  double exponent = 0.0;
  bool log_factor = false;
  double prefactor = 0.0;
  double rms_residual = 0.0;
};

// Least-squares fit of ln|y| against ln T to p*lnT + c, and, when try_log is
// set and feasible, to p*lnT + ln|lnT| + c. Returns the model with the lower
// rms residual; ties within 5% go to the plain power law.
//
// Requires at least 5 points, all T > 0, all y of one sign.
ScalingFit fit_scaling(std::span<const std::pair<double, double>> points,
                       bool try_log);

}  // namespace casimir
