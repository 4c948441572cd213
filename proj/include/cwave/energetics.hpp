#pragma once

// Energy, momentum and inertia densities of real fields, their complex
// counterparts, and the complex energy velocity of the null wavelets.

#include "cwave/fields.hpp"

namespace cwave {

struct DensitySample {
  double u = 0;       // (E^2 + B^2)/2
  Vec3 S;             // E x B
  Vec3 g_mom;         // momentum density, equal to S for c = 1
  double inertia = 0; // sqrt(u^2 - S^2) from the invariant form
  Vec3 v;             // S/u
  double u2_minus_S2 = 0;  // computed directly, for cross-checks
};

/// Throws ZeroEnergy when u = 0.
DensitySample densities(const Vec3& E, const Vec3& B);

struct ComplexDensitySample {
  cplx u_tilde;
  CVec3 S_tilde;
  CVec3 v_tilde;  // S/u; NaN when u vanishes
};

ComplexDensitySample complex_densities(const CVec3& E_tilde, const CVec3& B_tilde);

/// u and S in closed form from the potential constants.
ComplexDensitySample complex_densities_closed_form(const PointContext& pc, const GaugeParams& gp);

struct ComplexVelocity {
  CVec3 v;     // zeta_hat - q_opp^-1 (g rho/(g' zeta^2)) phi_tilde
  cplx h;      // q_opp^-1 g/g'
  cplx twist;  // +/- i h sin(2 theta)
  CVec3 v_ratio;  // S/u from the complex densities; also null
};

/// Requires a null gauge for helicity `hel` (DomainError otherwise). Throws
/// DegenerateGauge if q of the opposite helicity vanishes and PulseNode when
/// |g'| < 1e-12 * peak |g'|.
ComplexVelocity complex_velocity(const Point3& x, double t, const WaveletParams& wp,
                                 const GaugeParams& gp, Helicity hel,
                                 Side side = Side::Unspecified);

}  // namespace cwave
