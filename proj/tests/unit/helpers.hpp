#pragma once

#include <cmath>
#include <random>

#include "cwave/geometry.hpp"

namespace testutil {

using cwave::cplx;

inline double rel_err(cplx got, cplx want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline double rel_err(const cwave::CVec3& got, const cwave::CVec3& want) {
  return cwave::norm(got - want) / std::max(cwave::norm(want), 1e-300);
}

/// Random point off the disk, circle and axis: spheroidal xi in [0.2a, 5a],
/// |eta| <= 0.95a, as the verification suites draw them.
inline cwave::Point3 exterior_point(std::mt19937_64& rng, const cwave::DisplacementConfig& cfg) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    cwave::Spheroidal s{cfg.a * (0.2 + 4.8 * u(rng)), cfg.a * (-0.95 + 1.9 * u(rng)),
                        2.0 * cwave::kPi * u(rng)};
    const auto x = cwave::from_spheroidal(s, cfg);
    if (std::hypot(x.x, x.y) > 1e-2 * cfg.a) return x;
  }
}

inline cplx random_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  return {re, u(rng)};
}

}  // namespace testutil
