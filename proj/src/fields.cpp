#include "cwave/fields.hpp"

#include <cmath>

namespace cwave {

namespace {
const cplx kI{0.0, 1.0};
}

HelicityBasis helicity_basis(const FrameTriad& fr) {
  return {fr.theta_hat + kI * fr.phi_hat, fr.theta_hat - kI * fr.phi_hat};
}

PointContext point_context(const Point3& x, double t, const WaveletParams& wp, Side side) {
  PointContext pc;
  pc.cd = complex_distance(x, wp.cfg, side);
  pc.frame = frame_triad(pc.cd, wp.cfg);
  pc.angle = complex_angle(pc.cd, wp.cfg);
  pc.signal = retarded_signal(pc.cd, t, wp);
  return pc;
}

FieldSample fields_from_signal(const ComplexDistance& cd, const FrameTriad& fr,
                               const ComplexAngle& ang, const GaugeParams& gp, cplx g, cplx g1) {
  const cplx L = ang.cos_theta + gp.kappa;
  const cplx M = gp.lambda * ang.cos_theta + gp.mu;
  const cplx lon = g / (cd.zeta * cd.zeta);
  const cplx tr = g1 / cd.rho;

  FieldSample fs;
  fs.E_tilde = lon * fr.zeta_hat - tr * L * fr.theta_hat - tr * M * fr.phi_hat;
  fs.B_tilde = -gp.lambda * lon * fr.zeta_hat + tr * M * fr.theta_hat - tr * L * fr.phi_hat;
  fs.p_plus = gp.p(Helicity::Plus);
  fs.p_minus = gp.p(Helicity::Minus);
  fs.q_plus = gp.q(Helicity::Plus);
  fs.q_minus = gp.q(Helicity::Minus);

  const auto hb = helicity_basis(fr);
  const cplx c = ang.cos_theta;
  fs.F_plus = fs.p_plus * lon * fr.zeta_hat + (fs.q_plus - fs.p_plus * c) * tr * hb.phi_tilde_plus;
  fs.F_minus =
      fs.p_minus * lon * fr.zeta_hat + (fs.q_minus - fs.p_minus * c) * tr * hb.phi_tilde_minus;
  return fs;
}

FieldSample field_sample(const Point3& x, double t, const WaveletParams& wp,
                         const GaugeParams& gp, Side side) {
  const auto pc = point_context(x, t, wp, side);
  return fields_from_signal(pc.cd, pc.frame, pc.angle, gp, pc.signal.g, pc.signal.g1);
}

CVec3 e_field(const Point3& x, double t, const WaveletParams& wp, const GaugeParams& gp,
              Side side) {
  return field_sample(x, t, wp, gp, side).E_tilde;
}

CVec3 b_field(const Point3& x, double t, const WaveletParams& wp, const GaugeParams& gp,
              Side side) {
  return field_sample(x, t, wp, gp, side).B_tilde;
}

std::pair<CVec3, CVec3> f_pm(const Point3& x, double t, const WaveletParams& wp,
                             const GaugeParams& gp, Side side) {
  const auto fs = field_sample(x, t, wp, gp, side);
  return {fs.F_plus, fs.F_minus};
}

CVec3 coherent_wavelet(const Point3& x, double t, const WaveletParams& wp, Helicity h,
                       cplx scale, Side side) {
  const auto pc = point_context(x, t, wp, side);
  return scale * (pc.signal.g1 / pc.cd.rho) * helicity_basis(pc.frame)[h];
}

RealFieldPair real_fields(const CVec3& F, Helicity h) {
  return {real(F), sign(h) * imag(F), h};
}

RealFieldPair real_fields(const FieldSample& fs, Helicity h) { return real_fields(fs.F(h), h); }

PureGaugeResult pure_gauge_field(const Point3& x, double t, const WaveletParams& wp, Helicity h,
                                 cplx mu, Side side) {
  const auto gp = GaugeParams::pure_gauge(h, mu);
  const auto pc = point_context(x, t, wp, side);
  const auto fs = fields_from_signal(pc.cd, pc.frame, pc.angle, gp, pc.signal.g, pc.signal.g1);
  const double sh = sign(h);

  PureGaugeResult r;
  r.E_tilde = fs.E_tilde;
  r.B_tilde = fs.B_tilde;
  r.F = fs.E_tilde + sh * kI * fs.B_tilde;
  r.local_scale = norm(fs.E_tilde) + norm(fs.B_tilde);

  const CVec3 w = w_field(pc.cd, pc.frame, pc.angle, gp);
  r.A_tilde = (pc.signal.g / pc.cd.zeta) * w;

  const auto hb = helicity_basis(pc.frame);
  const CVec3 reduced = (pc.signal.g / (pc.cd.zeta * pc.cd.zeta)) * pc.frame.zeta_hat -
                        (pc.signal.g1 / pc.cd.rho) * (pc.angle.cos_theta + gp.kappa) *
                            hb[opposite(h)];
  if (r.local_scale > 0.0) {
    r.f_residual = norm(r.F) / r.local_scale;
    r.b_residual = norm(fs.B_tilde - sh * kI * fs.E_tilde) / r.local_scale;
    r.e_residual = norm(fs.E_tilde - reduced) / r.local_scale;
  }
  r.w_square_residual = std::abs(sq(w) - 1.0);
  return r;
}

}  // namespace cwave
