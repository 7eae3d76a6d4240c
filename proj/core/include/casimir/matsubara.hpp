#pragma once

#include <functional>

#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"

namespace casimir {

// Primed Matsubara sum: (1/2)*term(0) + sum_{l>=1} term(l).
//
// Terms are consumed in fixed blocks; the truncation test (geometric
// extrapolation of the last three terms) runs only at block boundaries, so
// the result is bit-identical for any worker-pool size.
double matsubara_sum_blocked(const std::function<double(long)>& term,
                             double rel_tol, long l_max,
                             ThreadPool* pool = nullptr, int block = 8);

inline double matsubara_sum(const std::function<double(long)>& term,
                            double rel_tol, long l_max) {
  return matsubara_sum_blocked(term, rel_tol, l_max, nullptr);
}

}  // namespace casimir
