#include "cwave/energetics.hpp"

#include <cmath>
#include <limits>

#include "cwave/errors.hpp"

namespace cwave {

namespace {
const cplx kI{0.0, 1.0};
constexpr double kPulseNodeRel = 1e-12;
}  // namespace

DensitySample densities(const Vec3& E, const Vec3& B) {
  DensitySample d;
  const double e2 = dot(E, E);
  const double b2 = dot(B, B);
  d.u = 0.5 * (e2 + b2);
  if (!(d.u > 0.0)) throw Error(ErrorCode::ZeroEnergy, "energy density vanishes; velocity undefined");
  d.S = cross(E, B);
  d.g_mom = d.S;
  const double eb = dot(E, B);
  d.inertia = 0.5 * std::sqrt((e2 - b2) * (e2 - b2) + 4.0 * eb * eb);
  d.u2_minus_S2 = d.u * d.u - dot(d.S, d.S);
  d.v = d.S / d.u;
  return d;
}

ComplexDensitySample complex_densities(const CVec3& E_tilde, const CVec3& B_tilde) {
  ComplexDensitySample c;
  c.u_tilde = 0.5 * (sq(E_tilde) + sq(B_tilde));
  c.S_tilde = cross(E_tilde, B_tilde);
  if (c.u_tilde != 0.0) {
    c.v_tilde = c.S_tilde / c.u_tilde;
  } else {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    c.v_tilde = {nan, nan, nan};
  }
  return c;
}

ComplexDensitySample complex_densities_closed_form(const PointContext& pc, const GaugeParams& gp) {
  const cplx c = pc.angle.cos_theta;
  const cplx L = c + gp.kappa;
  const cplx M = gp.lambda * c + gp.mu;
  const cplx g = pc.signal.g;
  const cplx g1 = pc.signal.g1;
  const cplx z2 = pc.cd.zeta * pc.cd.zeta;
  const double rho = pc.cd.rho;

  const cplx trans = g1 * g1 / (rho * rho) * (L * L + M * M);
  const cplx mix = g * g1 / (z2 * rho);

  ComplexDensitySample out;
  out.u_tilde = 0.5 * (1.0 + gp.lambda * gp.lambda) * g * g / (z2 * z2) + trans;
  out.S_tilde = trans * pc.frame.zeta_hat + mix * (L + gp.lambda * M) * pc.frame.theta_hat +
                mix * (M - gp.lambda * L) * pc.frame.phi_hat;
  out.v_tilde = out.S_tilde / out.u_tilde;
  return out;
}

ComplexVelocity complex_velocity(const Point3& x, double t, const WaveletParams& wp,
                                 const GaugeParams& gp, Helicity hel, Side side) {
  if (!gp.is_null(hel)) {
    throw Error(ErrorCode::DomainError, "complex velocity needs lambda = -/+ i for the helicity");
  }
  const cplx q_opp = gp.q(opposite(hel));
  if (std::abs(q_opp) <= 1e-14 * (1.0 + std::abs(gp.kappa) + std::abs(gp.mu))) {
    throw Error(ErrorCode::DegenerateGauge, "q of the opposite helicity vanishes");
  }
  const auto pc = point_context(x, t, wp, side);
  const cplx g = pc.signal.g;
  const cplx g1 = pc.signal.g1;
  if (std::abs(g1) < kPulseNodeRel * wp.pulse.peak_derivative()) {
    throw Error(ErrorCode::PulseNode, "g' vanishes at the retarded time");
  }
  const auto hb = helicity_basis(pc.frame);
  const cplx z2 = pc.cd.zeta * pc.cd.zeta;

  ComplexVelocity cv;
  cv.v = pc.frame.zeta_hat - (g * pc.cd.rho / (q_opp * g1 * z2)) * hb[hel];
  cv.h = g / (q_opp * g1);
  const cplx sin2 = 2.0 * pc.angle.sin_theta * pc.angle.cos_theta;
  cv.twist = sign(hel) * kI * cv.h * sin2;
  cv.v_ratio = complex_densities_closed_form(pc, gp).v_tilde;
  return cv;
}

}  // namespace cwave
