#pragma once

#include "abcage/types.hpp"

namespace abcage {

// Dense matrix exponential by scaling-and-squaring with a [13/13] Pade
// approximant. Handles defective matrices (the exceptional point J = Gamma),
// where a spectral decomposition is not available.
ComplexMatrix matrix_exponential(const ComplexMatrix& A);

} // namespace abcage
