#include "casimir/matsubara.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace casimir {

namespace {

struct TailTracker {
  double t0 = -1.0, t1 = -1.0, t2 = -1.0;  // last three |term| values

  void push(double t) {
    t0 = t1;
    t1 = t2;
    t2 = t;
  }

  bool full() const { return t0 >= 0.0; }

  // Geometric extrapolation of the remaining tail from the last three terms.
  // For power-law decay the measured ratio drifts toward 1 and the estimate
  // stays a (mild) underestimate; the factor-2 safety margin covers that.
  double estimate() const {
    if (t2 == 0.0 && t1 == 0.0) return 0.0;
    double r = 0.0;
    if (t1 > 0.0) r = std::max(r, t2 / t1);
    if (t0 > 0.0) r = std::max(r, t1 / t0);
    if (r >= 1.0) return -1.0;  // not decaying yet
    return 2.0 * t2 * r / (1.0 - r);
  }
};

}  // namespace

double matsubara_sum_blocked(const std::function<double(long)>& term,
                             double rel_tol, long l_max, ThreadPool* pool,
                             int block) {
  if (!(rel_tol > 0.0)) throw DomainError("matsubara_sum: rel_tol must be > 0");
  if (l_max < 1) throw DomainError("matsubara_sum: l_max must be >= 1");
  block = std::max(block, 1);

  double sum = 0.5 * term(0);
  TailTracker tail;
  long consecutive_zero = 0;
  int passes = 0;
  double last_estimate = 0.0;

  long l = 1;
  while (l <= l_max) {
    const int n = static_cast<int>(std::min<long>(block, l_max - l + 1));
    std::vector<double> vals;
    if (pool && pool->size() > 1 && n > 1) {
      vals = pool->map<double>(static_cast<std::size_t>(n),
                               [&](std::size_t i) {
                                 return term(l + static_cast<long>(i));
                               });
    } else {
      vals.resize(n);
      for (int i = 0; i < n; ++i) vals[i] = term(l + i);
    }
    for (int i = 0; i < n; ++i) {
      sum += vals[i];
      const double a = std::abs(vals[i]);
      tail.push(a);
      consecutive_zero = (a == 0.0) ? consecutive_zero + 1 : 0;
    }
    l += n;

    if (consecutive_zero >= std::max(2 * block, 6)) return sum;
    if (!tail.full()) continue;
    const double est = tail.estimate();
    if (est < 0.0) {
      passes = 0;
      continue;
    }
    last_estimate = est;
    const double target = rel_tol * std::max(std::abs(sum), 1e-300);
    passes = (est <= target) ? passes + 1 : 0;
    if (passes >= 2) return sum;
  }

  throw NonConvergence("matsubara_sum: tail above tolerance at l_max", sum,
                       last_estimate);
}

}  // namespace casimir
