#pragma once

// The static axisymmetric vector field w solving
//   zeta_hat . w = 1,  div w = 1/zeta,  D_zeta w = 0,  Laplacian w = 0,
// and the complex vector potential A = Psi w.

#include "cwave/helicity.hpp"
#include "cwave/scalar_wavelet.hpp"
#include "cwave/verify/fd.hpp"

namespace cwave {

/// The three free complex constants of the family.
struct GaugeParams {
  cplx kappa{};
  cplx lambda{};
  cplx mu{};

  bool is_null_plus(double tol = 1e-12) const;   // lambda = -i
  bool is_null_minus(double tol = 1e-12) const;  // lambda = +i
  bool is_null(Helicity h, double tol = 1e-12) const;
  /// lambda = -/+ i and kappa = +/- i mu.
  bool is_pure_gauge(Helicity h, double tol = 1e-12) const;

  /// p = 1 -/+ i lambda, q = -kappa +/- i mu.
  cplx p(Helicity h) const;
  cplx q(Helicity h) const;

  static GaugeParams null_gauge(Helicity h, cplx kappa, cplx mu);
  static GaugeParams pure_gauge(Helicity h, cplx mu);
};

/// zeta_hat + (zeta/rho)(cos + kappa) theta_hat + (zeta/rho)(lambda cos + mu) phi_hat.
CVec3 w_field(const ComplexDistance& cd, const FrameTriad& fr, const ComplexAngle& ang,
              const GaugeParams& gp);
CVec3 w_field(const Point3& x, const DisplacementConfig& cfg, const GaugeParams& gp,
              Side side = Side::Unspecified);

CVec3 vector_potential(const Point3& x, double t, const WaveletParams& wp,
                       const GaugeParams& gp, Side side = Side::Unspecified);

struct ConstraintResiduals {
  double r_a = 0;  // |zeta_hat . w - 1|
  double r_b = 0;  // div w vs 1/zeta
  double r_c = 0;  // D_zeta w
  double r_d = 0;  // Laplacian w

  double max() const;
};

/// r_a is algebraic; r_b..r_d come from FD oracles and are normalised by the
/// local derivative scale.
ConstraintResiduals constraint_residuals(const Point3& x, const DisplacementConfig& cfg,
                                         const GaugeParams& gp, const FdConfig& fc);

}  // namespace cwave
