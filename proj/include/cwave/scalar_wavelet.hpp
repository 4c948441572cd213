#pragma once

// Scalar pulsed-beam wavelet Psi = g(tau - zeta)/zeta, tau = t - i s, and the
// time-harmonic complex-source beam it is built from.

#include "cwave/geometry.hpp"
#include "cwave/pulse.hpp"

namespace cwave {

struct WaveletParams {
  DisplacementConfig cfg;
  PulseSpec pulse = PulseSpec::gaussian(1.0);
};

/// g and its first two derivatives at the retarded complex time tau - zeta.
SignalJet retarded_signal(const ComplexDistance& cd, double t, const WaveletParams& wp);

cplx psi(const Point3& x, double t, const WaveletParams& wp, Side side = Side::Unspecified);

/// -(g'/zeta + g/zeta^2) zeta_hat.
CVec3 grad_psi(const Point3& x, double t, const WaveletParams& wp,
               Side side = Side::Unspecified);

/// dPsi/dt = g'/zeta.
cplx psi_dt(const Point3& x, double t, const WaveletParams& wp, Side side = Side::Unspecified);

/// ghat0(omega) exp(i omega zeta)/zeta, omega > 0.
cplx freq_beam(const Point3& x, double omega, const WaveletParams& wp,
               Side side = Side::Unspecified);

/// Far-zone angular factor ghat0(omega) exp(omega a cos(theta)).
cplx radiation_pattern(double theta, double omega, const WaveletParams& wp);

}  // namespace cwave
