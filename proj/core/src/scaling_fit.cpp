#include "casimir/scaling_fit.hpp"

#include <cmath>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

struct LineFit {
  double slope, intercept, rms;
};

LineFit least_squares(const std::vector<double>& x,
                      const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw DegenerateData("fit_scaling: degenerate abscissae");
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - slope * x[i] - intercept;
    ssr += r * r;
  }
  return {slope, intercept, std::sqrt(ssr / n)};
}

}  // namespace

ScalingFit fit_scaling(std::span<const std::pair<double, double>> points,
                       bool try_log) {
  if (points.size() < 5)
    throw DegenerateData("fit_scaling: need at least 5 points");

  std::vector<double> x, y;
  x.reserve(points.size());
  y.reserve(points.size());
  int sign = 0;
  for (const auto& [t, v] : points) {
    if (!(t > 0.0)) throw DegenerateData("fit_scaling: all T must be > 0");
    if (v == 0.0) throw DegenerateData("fit_scaling: zero y value");
    const int s = v > 0.0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) throw DegenerateData("fit_scaling: y changes sign");
    x.push_back(std::log(t));
    y.push_back(std::log(std::abs(v)));
  }

  const LineFit plain = least_squares(x, y);

  bool log_feasible = try_log;
  for (double xi : x) {
    if (std::abs(xi) < 1e-12) log_feasible = false;
  }
  if (log_feasible) {
    std::vector<double> y2(y);
    for (std::size_t i = 0; i < x.size(); ++i)
      y2[i] -= std::log(std::abs(x[i]));
    const LineFit logged = least_squares(x, y2);
    // Parsimony: the log-factor model must win by more than 5%.
    if (logged.rms < 0.95 * plain.rms) {
      return {logged.slope, true, sign * std::exp(logged.intercept),
              logged.rms};
    }
  }
  return {plain.slope, false, sign * std::exp(plain.intercept), plain.rms};
}

}  // namespace casimir
