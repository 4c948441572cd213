#pragma once

// Static analytically continued Coulomb field (x - i a)/zeta^3 of a unit
// charge at the imaginary point i a z_hat: its disk sources, energetics and
// far-zone multipole structure.

#include "cwave/geometry.hpp"

namespace cwave {

CVec3 newman_field(const Point3& x, const DisplacementConfig& cfg, Side side = Side::Unspecified);

/// Surface charge and azimuthal current on the disk interior.
struct SurfaceDensity {
  double sigma = 0;
  Vec3 K;
};

/// Limits of E = Re F and B = Im F on the two faces of the disk at (rho, 0, 0).
struct BoundaryValues {
  Vec3 E_upper, E_lower, B_upper, B_lower;
  SurfaceDensity density;           // closed form
  SurfaceDensity density_extrapolated;  // from z = +/- eps, Richardson in eps
  double max_relative_mismatch = 0; // between the two SurfaceDensity values
  double normal_dB = 0;             // |z_hat . (B_upper - B_lower)|
  double tangential_dE = 0;         // |z_hat x (E_upper - E_lower)|
};

/// 0 <= rho < a (1 - tol_guard); DomainError otherwise.
BoundaryValues boundary_values(double rho, const DisplacementConfig& cfg);

struct NewmanEnergetics {
  double u = 0;
  Vec3 S;
  Vec3 v;
  double inertia = 0;
  double omega = 0;  // |v|/rho = 2a/(2a^2 + xi^2 - eta^2)
};

NewmanEnergetics newman_energetics(const Point3& x, const DisplacementConfig& cfg,
                                   Side side = Side::Unspecified);

struct MultipoleReport {
  double r = 0;
  double max_residual = 0;  // |E - x/r^3 - i(3 n (n.a) - a)/r^3| over the sphere
  double fitted_c = 0;      // max_residual r^4 / a^2
  double flux_over_4pi = 0; // of Re E through the sphere
  int n_points = 0;
};

/// Gauss-Legendre in cos(theta) times a uniform azimuthal grid.
MultipoleReport multipole_check(double r, const DisplacementConfig& cfg, int n_theta = 42,
                                int n_phi = 61);

}  // namespace cwave
