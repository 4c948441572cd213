#include "cwave/congruence.hpp"

#include <cmath>

#include "cwave/errors.hpp"

namespace cwave {

Vec3 ray_velocity(const ComplexDistance& cd, const DisplacementConfig& cfg, Helicity h) {
  const double a = cfg.a;
  const double X = cd.xi * cd.xi + a * a;
  const double Y = (a - cd.eta) * (a + cd.eta);
  const double r = std::sqrt(Y / X);
  return (cd.xi / a) * r * rho_hat(cd) + Vec3{0.0, 0.0, cd.eta / a} + sign(h) * r * phi_hat(cd);
}

Vec3 ray_velocity(const Point3& x, const DisplacementConfig& cfg, Helicity h, Side side) {
  return ray_velocity(complex_distance(x, cfg, side), cfg, h);
}

Vec3 vorticity(const Point3& x, const DisplacementConfig& cfg, Helicity h, Side side) {
  const auto cd = complex_distance(x, cfg, side);
  const double k = sign(h) * 2.0 * cd.eta / (cd.xi * cd.xi + cd.eta * cd.eta);
  return k * ray_velocity(cd, cfg, h);
}

double spin_rate(double xi, const DisplacementConfig& cfg, Helicity h) {
  if (xi < 0.0) throw Error(ErrorCode::DomainError, "spin_rate needs xi >= 0");
  return sign(h) * cfg.a / (xi * xi + cfg.a * cfg.a);
}

double ray_phase(double xi, const DisplacementConfig& cfg, Helicity h) {
  if (xi < 0.0) throw Error(ErrorCode::DomainError, "ray_phase needs xi >= 0");
  return sign(h) * std::atan(xi / cfg.a);
}

Ray make_ray(const Point3& origin, const DisplacementConfig& cfg, Helicity h, int z_sign) {
  cfg.validate();
  const double a = cfg.a;
  const double rho0 = std::hypot(origin.x, origin.y);
  if (origin.z != 0.0 || rho0 > a) {
    throw Error(ErrorCode::DomainError, "ray origin must lie on the disk (z = 0, rho <= a)");
  }
  if (z_sign != 1 && z_sign != -1) throw Error(ErrorCode::DomainError, "z_sign must be +1 or -1");
  Ray ray{origin, h, z_sign, {}};
  const double up = std::sqrt((a - rho0) * (a + rho0)) / a;
  Vec3 dir{0.0, 0.0, z_sign * up};
  if (rho0 > 0.0) {
    const Vec3 ph{-origin.y / rho0, origin.x / rho0, 0.0};
    dir += (sign(h) * rho0 / a) * ph;
  }
  ray.direction = dir;
  return ray;
}

Point3 trace_ray(const Ray& ray, double t) {
  if (t < 0.0) throw Error(ErrorCode::DomainError, "trace_ray needs t >= 0");
  return ray.origin + t * ray.direction;
}

Vec3 kerr_congruence(const Point3& x, const DisplacementConfig& cfg, Helicity h, Side side) {
  const auto cd = complex_distance(x, cfg, side);
  const double a = cfg.a;
  const double X = cd.xi * cd.xi + a * a;
  const double s = sign(h);
  const double kz = cd.xi > kTolSing * a ? x.z / cd.xi : cd.eta / a;
  return {(cd.xi * x.x - s * a * x.y) / X, (cd.xi * x.y + s * a * x.x) / X, kz};
}

}  // namespace cwave
