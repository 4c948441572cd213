#include "cwave/scalar_wavelet.hpp"

#include <cmath>

#include "cwave/errors.hpp"

namespace cwave {

SignalJet retarded_signal(const ComplexDistance& cd, double t, const WaveletParams& wp) {
  const cplx tau(t, -wp.cfg.s);
  return analytic_signal_jet(wp.pulse, tau - cd.zeta);
}

cplx psi(const Point3& x, double t, const WaveletParams& wp, Side side) {
  const auto cd = complex_distance(x, wp.cfg, side);
  const cplx tau(t, -wp.cfg.s);
  return analytic_signal(wp.pulse, tau - cd.zeta, 0) / cd.zeta;
}

CVec3 grad_psi(const Point3& x, double t, const WaveletParams& wp, Side side) {
  const auto cd = complex_distance(x, wp.cfg, side);
  const auto j = retarded_signal(cd, t, wp);
  return -(j.g1 / cd.zeta + j.g / (cd.zeta * cd.zeta)) * zeta_hat(cd);
}

cplx psi_dt(const Point3& x, double t, const WaveletParams& wp, Side side) {
  const auto cd = complex_distance(x, wp.cfg, side);
  const cplx tau(t, -wp.cfg.s);
  return analytic_signal(wp.pulse, tau - cd.zeta, 1) / cd.zeta;
}

cplx freq_beam(const Point3& x, double omega, const WaveletParams& wp, Side side) {
  if (!(omega > 0.0)) throw Error(ErrorCode::DomainError, "freq_beam needs omega > 0");
  const auto cd = complex_distance(x, wp.cfg, side);
  return wp.pulse.spectrum(omega) * std::exp(cplx(0.0, omega) * cd.zeta) / cd.zeta;
}

cplx radiation_pattern(double theta, double omega, const WaveletParams& wp) {
  return wp.pulse.spectrum(omega) * std::exp(omega * wp.cfg.a * std::cos(theta));
}

}  // namespace cwave
