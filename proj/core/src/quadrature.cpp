#include "casimir/quadrature.hpp"

// Adaptive kernels are header templates; this TU anchors the library target.

namespace casimir {}
