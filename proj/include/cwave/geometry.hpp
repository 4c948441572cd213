#pragma once

// Complex distance, oblate spheroidal coordinates and the complex spheroidal
// frame attached to an imaginary source point i*a*z_hat.
//
// All routines work in the canonical frame where the displacement vector is
// a*z_hat. AxisAlignment maps an arbitrary displacement direction into it.

#include <array>

#include "cwave/vec3.hpp"

namespace cwave {

inline constexpr double kTolSing = 1e-9;   // relative to a
inline constexpr double kTolAxis = 1e-9;   // relative to a
inline constexpr double kTolGuard = 1e-3;  // FD exclusion band, relative to a

struct DisplacementConfig {
  double a = 1.0;  // imaginary displacement length, > 0
  double s = 1.0;  // imaginary time

  /// Throws DomainError unless a > 0 and both values are finite.
  void validate() const;
};

/// Which face of the branch disk a point on its interior is approached from.
enum class Side { Unspecified, Upper, Lower };

struct ComplexDistance {
  cplx zeta;      // xi - i*eta
  double xi = 0;  // >= 0
  double eta = 0; // in [-a, a]
  double rho = 0;
  double z = 0;
  cplx ztilde;    // z - i*a
  double cos_phi = 1;  // azimuth of the point; (1, 0) on the axis
  double sin_phi = 0;
};

struct ComplexAngle {
  cplx sin_theta;
  cplx cos_theta;
};

/// Complex-orthonormal frame (zeta_hat, theta_hat, phi_hat) in Cartesian
/// components: u_k . u_l = delta_kl under the bilinear product.
struct FrameTriad {
  CVec3 zeta_hat;
  CVec3 theta_hat;
  Vec3 phi_hat;
};

struct Spheroidal {
  double xi = 0;
  double eta = 0;
  double phi = 0;
};

enum class RegionTag { Exterior, OnDiskInterior, OnFocalCircle, OnAxis, NearSingular };

const char* to_string(RegionTag tag);

/// zeta = sqrt((x - i a)^2) on the branch Re zeta >= 0.
///
/// Points within tol_sing*a of the disk plane with rho < a are snapped to the
/// disk face selected by `side`; leaving `side` unspecified there throws
/// AmbiguousBranch. Points on the focal circle throw SingularPoint.
ComplexDistance complex_distance(const Point3& x, const DisplacementConfig& cfg,
                                 Side side = Side::Unspecified);

Spheroidal to_spheroidal(const Point3& x, const DisplacementConfig& cfg,
                         Side side = Side::Unspecified);
Point3 from_spheroidal(const Spheroidal& sph, const DisplacementConfig& cfg);

ComplexAngle complex_angle(const ComplexDistance& cd, const DisplacementConfig& cfg);

/// grad zeta = (x - i a)/zeta. Defined everywhere off the focal circle,
/// including the z-axis.
CVec3 zeta_hat(const ComplexDistance& cd);

Vec3 rho_hat(const ComplexDistance& cd);
Vec3 phi_hat(const ComplexDistance& cd);

/// Throws OnAxis for rho < tol_axis*a (phi_hat undefined).
FrameTriad frame_triad(const ComplexDistance& cd, const DisplacementConfig& cfg);
FrameTriad frame_triad(const Point3& x, const DisplacementConfig& cfg,
                       Side side = Side::Unspecified);

RegionTag classify(const Point3& x, const DisplacementConfig& cfg);

/// Euclidean distance from x to the union of disk, focal circle and z-axis,
/// in units of a. Used to keep FD stencils away from singular sets.
double singular_set_distance(const Point3& x, const DisplacementConfig& cfg);

/// Rigid rotation taking an arbitrary displacement direction onto +z.
class AxisAlignment {
 public:
  explicit AxisAlignment(const Vec3& axis);

  Vec3 to_canonical(const Vec3& v) const;
  Vec3 from_canonical(const Vec3& v) const;
  CVec3 from_canonical(const CVec3& v) const;

 private:
  std::array<Vec3, 3> basis_;  // rows: e1, e2, e3 = axis/|axis|
};

}  // namespace cwave
