#include "cwave/potential.hpp"

#include <algorithm>
#include <cmath>

namespace cwave {

namespace {
const cplx kI{0.0, 1.0};
}

bool GaugeParams::is_null_plus(double tol) const { return std::abs(lambda + kI) <= tol; }
bool GaugeParams::is_null_minus(double tol) const { return std::abs(lambda - kI) <= tol; }

bool GaugeParams::is_null(Helicity h, double tol) const {
  return h == Helicity::Plus ? is_null_plus(tol) : is_null_minus(tol);
}

bool GaugeParams::is_pure_gauge(Helicity h, double tol) const {
  return is_null(h, tol) && std::abs(kappa - sign(h) * kI * mu) <= tol * std::max(1.0, std::abs(mu));
}

cplx GaugeParams::p(Helicity h) const { return 1.0 - sign(h) * kI * lambda; }
cplx GaugeParams::q(Helicity h) const { return -kappa + sign(h) * kI * mu; }

GaugeParams GaugeParams::null_gauge(Helicity h, cplx kappa, cplx mu) {
  return {kappa, -sign(h) * kI, mu};
}

GaugeParams GaugeParams::pure_gauge(Helicity h, cplx mu) {
  return {sign(h) * kI * mu, -sign(h) * kI, mu};
}

CVec3 w_field(const ComplexDistance& cd, const FrameTriad& fr, const ComplexAngle& ang,
              const GaugeParams& gp) {
  const cplx zr = cd.zeta / cd.rho;
  return fr.zeta_hat + zr * (ang.cos_theta + gp.kappa) * fr.theta_hat +
         zr * (gp.lambda * ang.cos_theta + gp.mu) * fr.phi_hat;
}

CVec3 w_field(const Point3& x, const DisplacementConfig& cfg, const GaugeParams& gp, Side side) {
  const auto cd = complex_distance(x, cfg, side);
  const auto fr = frame_triad(cd, cfg);
  return w_field(cd, fr, complex_angle(cd, cfg), gp);
}

CVec3 vector_potential(const Point3& x, double t, const WaveletParams& wp,
                       const GaugeParams& gp, Side side) {
  const auto cd = complex_distance(x, wp.cfg, side);
  const auto fr = frame_triad(cd, wp.cfg);
  const cplx tau(t, -wp.cfg.s);
  const cplx psi = analytic_signal(wp.pulse, tau - cd.zeta, 0) / cd.zeta;
  return psi * w_field(cd, fr, complex_angle(cd, wp.cfg), gp);
}

double ConstraintResiduals::max() const { return std::max({r_a, r_b, r_c, r_d}); }

ConstraintResiduals constraint_residuals(const Point3& x, const DisplacementConfig& cfg,
                                         const GaugeParams& gp, const FdConfig& fc) {
  const auto cd = complex_distance(x, cfg);
  const auto fr = frame_triad(cd, cfg);
  const CVec3 w = w_field(cd, fr, complex_angle(cd, cfg), gp);
  const SingularSets sing{cfg.a, true, true};
  const VectorField wf = [&](const Point3& p, double) { return w_field(p, cfg, gp); };

  ConstraintResiduals r;
  r.r_a = std::abs(dot(fr.zeta_hat, w) - 1.0);
  r.r_b = normalized_residual(fd_div(wf, x, 0.0, fc, sing), 1.0 / cd.zeta);
  r.r_c = normalized_residual(fd_directional(wf, fr.zeta_hat, x, 0.0, fc, sing), CVec3{});
  r.r_d = normalized_residual(fd_laplacian(wf, x, 0.0, fc, sing), CVec3{});
  return r;
}

}  // namespace cwave
