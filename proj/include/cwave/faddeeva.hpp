#pragma once

#include "cwave/vec3.hpp"

namespace cwave {

/// Faddeeva function w(z) = exp(-z^2) erfc(-i z), the scaled complementary
/// error function of complex argument.
///
/// Truncated Taylor series near the origin, Laplace continued fraction
/// (with Gautschi's convergence acceleration in the intermediate region)
/// elsewhere; the lower half-plane follows from w(-z) = 2 exp(-z^2) - w(z).
/// Accurate to about 14 significant digits. Throws Divergent on overflow.
cplx faddeeva_w(cplx z);

}  // namespace cwave
