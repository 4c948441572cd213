#pragma once

// Complex field strengths of the vector potential A = Psi w:
//   E = -grad Psi - dA/dt,  B = curl A,  F+/- = E +/- iB.

#include <utility>

#include "cwave/potential.hpp"

namespace cwave {

/// Null transverse vectors theta_hat +/- i phi_hat.
struct HelicityBasis {
  CVec3 phi_tilde_plus;
  CVec3 phi_tilde_minus;

  const CVec3& operator[](Helicity h) const {
    return h == Helicity::Plus ? phi_tilde_plus : phi_tilde_minus;
  }
};

HelicityBasis helicity_basis(const FrameTriad& fr);

struct FieldSample {
  CVec3 E_tilde, B_tilde, F_plus, F_minus;
  cplx p_plus, p_minus, q_plus, q_minus;

  const CVec3& F(Helicity h) const { return h == Helicity::Plus ? F_plus : F_minus; }
};

struct RealFieldPair {
  Vec3 E, B;
  Helicity helicity = Helicity::Plus;
};

/// Everything local to one point: geometry plus the retarded signal.
struct PointContext {
  ComplexDistance cd;
  FrameTriad frame;
  ComplexAngle angle;
  SignalJet signal;
};

PointContext point_context(const Point3& x, double t, const WaveletParams& wp, Side side);

/// Closed forms for given signal values g = g(tau - zeta), g1 = g'. Passing
/// g = 1, g1 = 0 gives the static (zero-frequency) limit.
FieldSample fields_from_signal(const ComplexDistance& cd, const FrameTriad& fr,
                               const ComplexAngle& ang, const GaugeParams& gp, cplx g, cplx g1);

FieldSample field_sample(const Point3& x, double t, const WaveletParams& wp,
                         const GaugeParams& gp, Side side = Side::Unspecified);

CVec3 e_field(const Point3& x, double t, const WaveletParams& wp, const GaugeParams& gp,
              Side side = Side::Unspecified);
CVec3 b_field(const Point3& x, double t, const WaveletParams& wp, const GaugeParams& gp,
              Side side = Side::Unspecified);

/// p (g/zeta^2) zeta_hat + (q - p cos)(g'/rho) phi_tilde, for both helicities.
std::pair<CVec3, CVec3> f_pm(const Point3& x, double t, const WaveletParams& wp,
                             const GaugeParams& gp, Side side = Side::Unspecified);

/// The null field scale * (g'/rho) phi_tilde_h.
CVec3 coherent_wavelet(const Point3& x, double t, const WaveletParams& wp, Helicity h,
                       cplx scale = 1.0, Side side = Side::Unspecified);

/// E = Re F, B = +/- Im F.
RealFieldPair real_fields(const FieldSample& fs, Helicity h);
RealFieldPair real_fields(const CVec3& F, Helicity h);

struct PureGaugeResult {
  CVec3 F;        // E +/- iB computed from the general closed forms
  CVec3 E_tilde;  // (g/zeta^2) zeta_hat - (g'/rho)(cos + kappa) phi_tilde_opposite
  CVec3 B_tilde;
  CVec3 A_tilde;
  double local_scale = 0;  // |E| + |B|
  double f_residual = 0;   // |F| / local_scale
  double b_residual = 0;   // |B -/+ i E| / local_scale, since F = 0
  double e_residual = 0;   // general E vs the reduced form above
  double w_square_residual = 0;  // |w.w - 1|
};

/// Fields for lambda = -/+ i, kappa = +/- i mu, where F_h vanishes identically.
PureGaugeResult pure_gauge_field(const Point3& x, double t, const WaveletParams& wp, Helicity h,
                                 cplx mu, Side side = Side::Unspecified);

}  // namespace cwave
