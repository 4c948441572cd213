#include "cwave/newman.hpp"

#include <algorithm>
#include <cmath>

#include "cwave/errors.hpp"
#include "cwave/quadrature.hpp"

namespace cwave {

CVec3 newman_field(const Point3& x, const DisplacementConfig& cfg, Side side) {
  const auto cd = complex_distance(x, cfg, side);
  const cplx z3 = cd.zeta * cd.zeta * cd.zeta;
  return CVec3{x.x, x.y, cd.ztilde} / z3;
}

namespace {

SurfaceDensity density_from(const Vec3& Eu, const Vec3& El, const Vec3& Bu, const Vec3& Bl) {
  const Vec3 zh{0.0, 0.0, 1.0};
  return {dot(zh, Eu - El), cross(zh, Bu - Bl)};
}

// Second-level Richardson extrapolation to eps -> 0 from eps, eps/2, eps/4.
Vec3 extrapolate(const Vec3& f1, const Vec3& f2, const Vec3& f4) {
  const Vec3 r1 = 2.0 * f2 - f1;
  const Vec3 r2 = 2.0 * f4 - f2;
  return (4.0 * r2 - r1) / 3.0;
}

double rel(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

BoundaryValues boundary_values(double rho, const DisplacementConfig& cfg) {
  cfg.validate();
  const double a = cfg.a;
  if (rho < 0.0 || !(rho < a * (1.0 - kTolGuard))) {
    throw Error(ErrorCode::DomainError, "boundary values need 0 <= rho < a(1 - tol_guard)");
  }
  const double Y = (a - rho) * (a + rho);
  const double Y32 = Y * std::sqrt(Y);

  BoundaryValues bv;
  bv.E_upper = {0.0, 0.0, -a / Y32};
  bv.E_lower = {0.0, 0.0, a / Y32};
  bv.B_upper = {-rho / Y32, 0.0, 0.0};
  bv.B_lower = {rho / Y32, 0.0, 0.0};
  bv.density = {-2.0 * a / Y32, {0.0, -2.0 * rho / Y32, 0.0}};

  // The z-Taylor coefficients grow like inverse powers of the rim distance,
  // so the offsets shrink with Y/a; at the centre they are 1e-3 a, 5e-4 a, 2.5e-4 a.
  const double unit = Y / a;
  const double eps[3] = {1e-3 * unit, 5e-4 * unit, 2.5e-4 * unit};
  Vec3 Eu[3], El[3], Bu[3], Bl[3];
  for (int k = 0; k < 3; ++k) {
    const CVec3 up = newman_field({rho, 0.0, eps[k]}, cfg);
    const CVec3 dn = newman_field({rho, 0.0, -eps[k]}, cfg);
    Eu[k] = real(up);
    Bu[k] = imag(up);
    El[k] = real(dn);
    Bl[k] = imag(dn);
  }
  const Vec3 eu = extrapolate(Eu[0], Eu[1], Eu[2]);
  const Vec3 el = extrapolate(El[0], El[1], El[2]);
  const Vec3 bu = extrapolate(Bu[0], Bu[1], Bu[2]);
  const Vec3 bl = extrapolate(Bl[0], Bl[1], Bl[2]);
  bv.density_extrapolated = density_from(eu, el, bu, bl);

  bv.max_relative_mismatch = rel(bv.density_extrapolated.sigma, bv.density.sigma);
  if (rho > 0.0) {
    bv.max_relative_mismatch = std::max(
        bv.max_relative_mismatch, rel(bv.density_extrapolated.K.y, bv.density.K.y));
  } else {
    bv.max_relative_mismatch =
        std::max(bv.max_relative_mismatch, norm(bv.density_extrapolated.K) / std::abs(bv.density.sigma));
  }
  const Vec3 zh{0.0, 0.0, 1.0};
  bv.normal_dB = std::abs(dot(zh, bv.B_upper - bv.B_lower));
  bv.tangential_dE = norm(cross(zh, bv.E_upper - bv.E_lower));
  return bv;
}

NewmanEnergetics newman_energetics(const Point3& x, const DisplacementConfig& cfg, Side side) {
  const auto cd = complex_distance(x, cfg, side);
  const double a = cfg.a;
  const double xi2 = cd.xi * cd.xi;
  const double eta2 = cd.eta * cd.eta;
  const double q = xi2 + eta2;
  const double q2 = q * q;
  const double q3 = q2 * q;
  const Vec3 ph = phi_hat(cd);

  // |x - i a|^2 = r^2 + a^2 over |zeta|^6; the ratio S/u is free of |zeta|.
  NewmanEnergetics ne;
  ne.inertia = 1.0 / (2.0 * q2);
  ne.u = (xi2 - eta2 + 2.0 * a * a) / (2.0 * q3);
  ne.S = (a * cd.rho / q3) * ph;
  const double denom = 2.0 * a * a + xi2 - eta2;
  ne.v = (2.0 * a * cd.rho / denom) * ph;
  ne.omega = 2.0 * a / denom;
  return ne;
}

MultipoleReport multipole_check(double r, const DisplacementConfig& cfg, int n_theta, int n_phi) {
  cfg.validate();
  const double a = cfg.a;
  const auto rule = gauss_legendre(n_theta);
  const double r3 = r * r * r;
  const cplx I{0.0, 1.0};

  MultipoleReport rep;
  rep.r = r;
  double flux = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double ct = rule.nodes[i];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (int j = 0; j < n_phi; ++j) {
      const double ph = 2.0 * kPi * j / n_phi;
      const Vec3 n{st * std::cos(ph), st * std::sin(ph), ct};
      const Vec3 x = r * n;
      const CVec3 E = newman_field(x, cfg);
      const Vec3 avec{0.0, 0.0, a};
      const Vec3 dip = 3.0 * dot(n, avec) * n - avec;
      const CVec3 approx = x / r3 + I * dip / r3;
      rep.max_residual = std::max(rep.max_residual, norm(E - approx));
      flux += rule.weights[i] * (2.0 * kPi / n_phi) * r * r * dot(real(E), n);
    }
  }
  rep.n_points = n_theta * n_phi;
  rep.flux_over_4pi = flux / (4.0 * kPi);
  rep.fitted_c = a > 0.0 ? rep.max_residual * r * r * r * r / (a * a) : 0.0;
  return rep;
}

}  // namespace cwave
