#pragma once

// The real twisted null congruence of the wavelets: unit ray velocities,
// their vorticity, straight-line rays launched from the branch disk, and the
// Kerr form of the same vector field.

#include "cwave/geometry.hpp"
#include "cwave/helicity.hpp"

namespace cwave {

/// (xi/a) sqrt(Y/X) rho_hat + (eta/a) z_hat +/- sqrt(Y/X) phi_hat,
/// X = xi^2 + a^2, Y = a^2 - eta^2. On the axis this is +/- z_hat.
Vec3 ray_velocity(const ComplexDistance& cd, const DisplacementConfig& cfg, Helicity h);
Vec3 ray_velocity(const Point3& x, const DisplacementConfig& cfg, Helicity h,
                  Side side = Side::Unspecified);

/// +/- 2 eta/(xi^2 + eta^2) u.
Vec3 vorticity(const Point3& x, const DisplacementConfig& cfg, Helicity h,
               Side side = Side::Unspecified);

/// +/- a/(xi^2 + a^2)
double spin_rate(double xi, const DisplacementConfig& cfg, Helicity h);
/// +/- atan(xi/a)
double ray_phase(double xi, const DisplacementConfig& cfg, Helicity h);

/// Light-like 4-velocity (u, 1).
struct FourVelocity {
  Vec3 spatial;
  double temporal = 1.0;

  double minkowski_square() const { return temporal * temporal - dot(spatial, spatial); }
};

struct Ray {
  Point3 origin;          // on the disk: z = 0, rho <= a
  Helicity helicity = Helicity::Plus;
  int z_sign = 1;         // +1 upper half-space, -1 lower
  Vec3 direction;         // unit
};

/// Throws DomainError if the origin is off the disk.
Ray make_ray(const Point3& origin, const DisplacementConfig& cfg, Helicity h, int z_sign);

/// origin + t direction, t >= 0.
Point3 trace_ray(const Ray& ray, double t);

/// ((xi x -/+ a y)/X, (xi y +/- a x)/X, z/xi), with eta/a for the last
/// component where xi vanishes.
Vec3 kerr_congruence(const Point3& x, const DisplacementConfig& cfg, Helicity h,
                     Side side = Side::Unspecified);

}  // namespace cwave
