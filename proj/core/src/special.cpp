#include "casimir/special.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

double li3(double z) {
  if (!(std::abs(z) <= 1.0))
    throw DomainError("li3: series requires |z| <= 1");
  if (z == 1.0) return zeta3;
  double sum = 0.0;
  double zk = 1.0;
  for (int k = 1; k < 100000; ++k) {
    zk *= z;
    const double term = zk / (static_cast<double>(k) * k * k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(std::abs(sum), 1e-30)) break;
  }
  return sum;
}

}  // namespace casimir
