#pragma once

// Analytic signals g(tau) = (1/2pi) int_0^inf exp(-i w tau) ghat0(w) dw of
// driving pulses, evaluated at complex times tau = t - i s.

#include <string>
#include <variant>
#include <vector>

#include "cwave/vec3.hpp"

namespace cwave {

/// g0(t) = exp(-t^2/d^2) / (sqrt(pi) d), ghat0(w) = exp(-w^2 d^2 / 4).
struct GaussianPulse {
  double d = 1.0;
};

/// Positive-frequency spectrum sampled on a strictly ascending grid; zero
/// beyond the last sample.
struct TabulatedSpectrum {
  std::vector<double> omega;
  std::vector<cplx> ghat;
};

class PulseSpec {
 public:
  static PulseSpec gaussian(double d);

  /// Validates the grid and checks that the corrected trapezoid rule agrees
  /// with itself on the every-other-sample subgrid to 1e-8 (relative to the
  /// L1 mass of the spectrum); throws DomainError otherwise.
  static PulseSpec tabulated(std::vector<double> omega, std::vector<cplx> ghat);

  /// CSV with a header row and columns omega, re_ghat[, im_ghat].
  static PulseSpec load_csv(const std::string& path);

  bool is_gaussian() const { return std::holds_alternative<GaussianPulse>(spec_); }
  const GaussianPulse& as_gaussian() const { return std::get<GaussianPulse>(spec_); }
  const TabulatedSpectrum& as_tabulated() const { return std::get<TabulatedSpectrum>(spec_); }

  /// ghat0(omega) for omega >= 0 (linear interpolation for tabulated data).
  cplx spectrum(double omega) const;

  /// (1/2pi) int w |ghat0| dw, an upper bound for |g'| on the real axis,
  /// attained at t = 0 when ghat0 >= 0. Reference scale for pulse nodes.
  double peak_derivative() const { return peak_derivative_; }

  /// Grid-halving error estimate recorded at construction (0 for Gaussian).
  double quadrature_error_estimate() const { return quad_error_; }

 private:
  explicit PulseSpec(std::variant<GaussianPulse, TabulatedSpectrum> spec);

  std::variant<GaussianPulse, TabulatedSpectrum> spec_;
  double peak_derivative_ = 0.0;
  double quad_error_ = 0.0;
};

/// order-th derivative (0, 1 or 2) of the analytic signal at complex time.
/// Gaussian: closed form through the Faddeeva function, valid for all tau.
/// Tabulated: corrected trapezoid rule, requires Im tau <= 0 (Divergent).
cplx analytic_signal(const PulseSpec& p, cplx tau, int order = 0);

/// g, g' and g'' together; one Faddeeva evaluation for the Gaussian.
struct SignalJet {
  cplx g, g1, g2;
};
SignalJet analytic_signal_jet(const PulseSpec& p, cplx tau);

/// Independent oracle: composite Gauss-Legendre quadrature of the defining
/// integral, truncated where the integrand drops below 1e-16 of its peak and
/// refined by step halving until two levels agree. Throws NoConvergence.
cplx quadrature_oracle(const PulseSpec& p, cplx tau, int order = 0);

/// The real driving pulse g0(t); equals 2 Re g(t).
double real_pulse(const PulseSpec& p, double t);

}  // namespace cwave
