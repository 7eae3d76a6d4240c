#pragma once

namespace casimir {

// Trilogarithm Li_3(z) for |z| <= 1 by direct series sum z^k/k^3.
double li3(double z);

}  // namespace casimir
