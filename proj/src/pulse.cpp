#include "cwave/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cwave/errors.hpp"
#include "cwave/faddeeva.hpp"
#include "cwave/quadrature.hpp"

namespace cwave {

namespace {

std::string format_sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

constexpr double kSqrtPi = 1.77245385090551602730;
const cplx kI{0.0, 1.0};

cplx weight_power(double omega, int order) {
  switch (order) {
    case 0: return 1.0;
    case 1: return -kI * omega;
    default: return -omega * omega;
  }
}

void check_order(int order) {
  if (order < 0 || order > 2) throw Error(ErrorCode::DomainError, "derivative order must be 0, 1 or 2");
}

// Derivative at x[0] of the quadratic through three samples.
cplx endpoint_slope(double x0, double x1, double x2, cplx f0, cplx f1, cplx f2) {
  const double h1 = x1 - x0;
  const double h2 = x2 - x0;
  const double c0 = -(h1 + h2) / (h1 * h2);
  const double c1 = h2 / (h1 * (h2 - h1));
  const double c2 = -h1 / (h2 * (h2 - h1));
  return c0 * f0 + c1 * f1 + c2 * f2;
}

// Trapezoid rule with the leading Euler-Maclaurin endpoint correction,
// applied to (1/2pi) f(w) on the samples selected by `idx`.
cplx corrected_trapezoid(const std::vector<double>& w, const std::vector<cplx>& f,
                         const std::vector<std::size_t>& idx) {
  cplx sum = 0.0;
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
    const double h = w[idx[k + 1]] - w[idx[k]];
    sum += 0.5 * h * (f[idx[k]] + f[idx[k + 1]]);
  }
  if (idx.size() >= 3) {
    const std::size_t n = idx.size();
    const double ha = w[idx[1]] - w[idx[0]];
    const double hb = w[idx[n - 1]] - w[idx[n - 2]];
    const cplx da = endpoint_slope(w[idx[0]], w[idx[1]], w[idx[2]], f[idx[0]], f[idx[1]], f[idx[2]]);
    const cplx db = endpoint_slope(w[idx[n - 1]], w[idx[n - 2]], w[idx[n - 3]], f[idx[n - 1]],
                                   f[idx[n - 2]], f[idx[n - 3]]);
    sum -= (hb * hb * db - ha * ha * da) / 12.0;
  }
  return sum / (2.0 * kPi);
}

std::vector<cplx> integrand_samples(const TabulatedSpectrum& ts, cplx tau, int order) {
  std::vector<cplx> f(ts.omega.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double w = ts.omega[k];
    f[k] = weight_power(w, order) * std::exp(-kI * w * tau) * ts.ghat[k];
  }
  return f;
}

cplx tabulated_signal(const TabulatedSpectrum& ts, cplx tau, int order) {
  std::vector<std::size_t> idx(ts.omega.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  return corrected_trapezoid(ts.omega, integrand_samples(ts, tau, order), idx);
}

cplx gaussian_signal(double d, cplx tau, int order) {
  const cplx z = -tau / d;
  const cplx w = faddeeva_w(z);
  const double norm = 1.0 / (2.0 * kSqrtPi * d);
  switch (order) {
    case 0: return norm * w;
    case 1: {
      // dz/dtau = -1/d, w'(z) = -2 z w + 2i/sqrt(pi)
      const cplx wp = -2.0 * z * w + 2.0 * kI / kSqrtPi;
      return -norm * wp / d;
    }
    default: {
      const cplx wpp = (4.0 * z * z - 2.0) * w - 4.0 * kI * z / kSqrtPi;
      return norm * wpp / (d * d);
    }
  }
}

const GaussRule& panel_rule() {
  static const GaussRule rule = gauss_legendre(16);
  return rule;
}

// Composite Gauss-Legendre over [lo, hi] with `panels` equal panels.
template <class F>
cplx composite_gl(const F& f, double lo, double hi, int panels, double* l1) {
  const auto& rule = panel_rule();
  const double h = (hi - lo) / panels;
  cplx sum = 0.0;
  double abs_sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * h;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const cplx v = f(mid + 0.5 * h * rule.nodes[k]) * (0.5 * h * rule.weights[k]);
      sum += v;
      abs_sum += std::abs(v);
    }
  }
  if (l1) *l1 = abs_sum;
  return sum;
}

template <class F>
cplx refine_until_stable(const F& f, double lo, double hi, int start_panels) {
  double l1 = 0.0;
  cplx prev = composite_gl(f, lo, hi, start_panels, &l1);
  for (int panels = 2 * start_panels; panels <= (1 << 18); panels *= 2) {
    const cplx next = composite_gl(f, lo, hi, panels, &l1);
    if (std::abs(next - prev) <= 1e-13 * std::max(l1, 1e-300)) return next;
    prev = next;
  }
  throw Error(ErrorCode::NoConvergence, "quadrature_oracle: refinement stalled");
}

}  // namespace

PulseSpec::PulseSpec(std::variant<GaussianPulse, TabulatedSpectrum> spec) : spec_(std::move(spec)) {}

PulseSpec PulseSpec::gaussian(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw Error(ErrorCode::DomainError, "Gaussian duration d must be > 0");
  PulseSpec p(GaussianPulse{d});
  p.peak_derivative_ = 1.0 / (kPi * d * d);
  return p;
}

PulseSpec PulseSpec::tabulated(std::vector<double> omega, std::vector<cplx> ghat) {
  if (omega.size() != ghat.size()) throw Error(ErrorCode::DomainError, "spectrum columns differ in length");
  if (omega.size() < 5) throw Error(ErrorCode::DomainError, "tabulated spectrum needs at least 5 samples");
  if (omega.front() < 0.0) throw Error(ErrorCode::DomainError, "tabulated frequencies must be >= 0");
  for (std::size_t k = 0; k + 1 < omega.size(); ++k) {
    if (!(omega[k + 1] > omega[k])) throw Error(ErrorCode::DomainError, "frequency grid must be strictly ascending");
  }
  TabulatedSpectrum ts{std::move(omega), std::move(ghat)};

  std::vector<std::size_t> full(ts.omega.size()), half;
  for (std::size_t k = 0; k < full.size(); ++k) {
    full[k] = k;
    if (k % 2 == 0) half.push_back(k);
  }
  if (half.back() != full.back()) half.push_back(full.back());

  double worst = 0.0;
  for (int order = 0; order <= 2; ++order) {
    const auto f = integrand_samples(ts, 0.0, order);
    double l1 = 0.0;
    for (std::size_t k = 0; k + 1 < f.size(); ++k) {
      l1 += 0.5 * (ts.omega[k + 1] - ts.omega[k]) * (std::abs(f[k]) + std::abs(f[k + 1]));
    }
    l1 /= 2.0 * kPi;
    const cplx fine = corrected_trapezoid(ts.omega, f, full);
    const cplx coarse = corrected_trapezoid(ts.omega, f, half);
    worst = std::max(worst, std::abs(fine - coarse) / std::max(l1, 1e-300));
  }
  if (worst > 1e-8) {
    throw Error(ErrorCode::DomainError,
                "tabulated spectrum too coarse: grid-halving discrepancy " + format_sci(worst));
  }

  double mass = 0.0;
  for (std::size_t k = 0; k + 1 < ts.omega.size(); ++k) {
    mass += 0.5 * (ts.omega[k + 1] - ts.omega[k]) *
            (ts.omega[k] * std::abs(ts.ghat[k]) + ts.omega[k + 1] * std::abs(ts.ghat[k + 1]));
  }
  PulseSpec p(std::move(ts));
  p.peak_derivative_ = mass / (2.0 * kPi);
  p.quad_error_ = worst;
  return p;
}

PulseSpec PulseSpec::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open spectrum file " + path);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::ConfigError, "spectrum CSV is empty: " + path);
  std::vector<double> omega;
  std::vector<cplx> ghat;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> cols;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        cols.push_back(std::stod(cell, &used));
      } catch (const std::exception&) {
        throw Error(ErrorCode::ConfigError, path + ":" + std::to_string(lineno) + ": not a number");
      }
    }
    if (cols.size() != 2 && cols.size() != 3) {
      throw Error(ErrorCode::ConfigError, path + ":" + std::to_string(lineno) + ": expected 2 or 3 columns");
    }
    omega.push_back(cols[0]);
    ghat.emplace_back(cols[1], cols.size() == 3 ? cols[2] : 0.0);
  }
  return tabulated(std::move(omega), std::move(ghat));
}

cplx PulseSpec::spectrum(double omega) const {
  if (const auto* g = std::get_if<GaussianPulse>(&spec_)) {
    return std::exp(-0.25 * omega * omega * g->d * g->d);
  }
  const auto& ts = std::get<TabulatedSpectrum>(spec_);
  if (omega < ts.omega.front() || omega > ts.omega.back()) return 0.0;
  const auto it = std::upper_bound(ts.omega.begin(), ts.omega.end(), omega);
  if (it == ts.omega.end()) return ts.ghat.back();
  const std::size_t k = static_cast<std::size_t>(it - ts.omega.begin()) - 1;
  const double u = (omega - ts.omega[k]) / (ts.omega[k + 1] - ts.omega[k]);
  return (1.0 - u) * ts.ghat[k] + u * ts.ghat[k + 1];
}

cplx analytic_signal(const PulseSpec& p, cplx tau, int order) {
  check_order(order);
  if (p.is_gaussian()) return gaussian_signal(p.as_gaussian().d, tau, order);
  if (tau.imag() > 0.0) {
    throw Error(ErrorCode::Divergent, "tabulated spectrum needs Im tau <= 0");
  }
  return tabulated_signal(p.as_tabulated(), tau, order);
}

SignalJet analytic_signal_jet(const PulseSpec& p, cplx tau) {
  if (p.is_gaussian()) {
    const double d = p.as_gaussian().d;
    const cplx z = -tau / d;
    const cplx w = faddeeva_w(z);
    const double norm = 1.0 / (2.0 * kSqrtPi * d);
    const cplx wp = -2.0 * z * w + 2.0 * kI / kSqrtPi;
    const cplx wpp = (4.0 * z * z - 2.0) * w - 4.0 * kI * z / kSqrtPi;
    return {norm * w, -norm * wp / d, norm * wpp / (d * d)};
  }
  if (tau.imag() > 0.0) {
    throw Error(ErrorCode::Divergent, "tabulated spectrum needs Im tau <= 0");
  }
  const auto& ts = p.as_tabulated();
  return {tabulated_signal(ts, tau, 0), tabulated_signal(ts, tau, 1), tabulated_signal(ts, tau, 2)};
}

cplx quadrature_oracle(const PulseSpec& p, cplx tau, int order) {
  check_order(order);
  auto integrand = [&](double w) {
    return weight_power(w, order) * std::exp(-kI * w * tau) * p.spectrum(w) / (2.0 * kPi);
  };

  if (p.is_gaussian()) {
    const double d = p.as_gaussian().d;
    const double b = tau.imag();
    // log-magnitude of the integrand: n log w + b w - w^2 d^2 / 4
    auto logmag = [&](double w) {
      return (order > 0 ? order * std::log(std::max(w, 1e-300)) : 0.0) + b * w - 0.25 * w * w * d * d;
    };
    const double w_peak = std::max(
        0.0, (b + std::sqrt(b * b + 2.0 * order * d * d)) / (d * d));  // stationary point
    const double log_peak = order > 0 && w_peak == 0.0 ? logmag(1e-300) : logmag(w_peak);
    const double step = 0.25 / d;
    double hi = w_peak + step;
    while (logmag(hi) > log_peak + std::log(1e-16)) hi += step;
    const int start = std::max(8, static_cast<int>(std::ceil(hi * (std::abs(tau.real()) + d) / kPi)));
    return refine_until_stable(integrand, 0.0, hi, start);
  }

  if (tau.imag() > 0.0) {
    throw Error(ErrorCode::Divergent, "tabulated spectrum needs Im tau <= 0");
  }
  const auto& ts = p.as_tabulated();
  cplx total = 0.0;
  for (std::size_t k = 0; k + 1 < ts.omega.size(); ++k) {
    total += refine_until_stable(integrand, ts.omega[k], ts.omega[k + 1], 1);
  }
  return total;
}

double real_pulse(const PulseSpec& p, double t) {
  if (p.is_gaussian()) {
    const double d = p.as_gaussian().d;
    return std::exp(-t * t / (d * d)) / (kSqrtPi * d);
  }
  return 2.0 * analytic_signal(p, t, 0).real();
}

}  // namespace cwave
