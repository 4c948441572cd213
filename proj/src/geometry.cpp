#include "cwave/geometry.hpp"

#include <cmath>

#include "cwave/errors.hpp"

namespace cwave {

namespace {

struct XiEta {
  double xi;
  double eta;
};

// Real and imaginary parts of zeta from (rho, z) without branch handling.
// Each of xi^2, eta^2 is a root of q^2 -/+ A q - a^2 z^2 = 0; the root that
// does not cancel is taken directly and the other follows from a z = xi eta.
XiEta raw_xi_eta(double rho, double z, double a) {
  const double A = (rho - a) * (rho + a) + z * z;  // r^2 - a^2
  const double D = std::hypot(A, 2.0 * a * z);
  if (A >= 0.0) {
    const double xi = std::sqrt(0.5 * (A + D));
    const double eta = xi > 0.0 ? a * z / xi : 0.0;
    return {xi, eta};
  }
  const double eta_abs = std::sqrt(0.5 * (D - A));
  const double xi = a * std::abs(z) / eta_abs;
  return {xi, std::copysign(eta_abs, z)};
}

}  // namespace

void DisplacementConfig::validate() const {
  if (!(a > 0.0) || !std::isfinite(a) || !std::isfinite(s)) {
    throw Error(ErrorCode::DomainError, "displacement a must be finite and > 0");
  }
}

const char* to_string(RegionTag tag) {
  switch (tag) {
    case RegionTag::Exterior: return "Exterior";
    case RegionTag::OnDiskInterior: return "OnDiskInterior";
    case RegionTag::OnFocalCircle: return "OnFocalCircle";
    case RegionTag::OnAxis: return "OnAxis";
    case RegionTag::NearSingular: return "NearSingular";
  }
  return "?";
}

ComplexDistance complex_distance(const Point3& x, const DisplacementConfig& cfg, Side side) {
  cfg.validate();
  if (!is_finite(x)) throw Error(ErrorCode::DomainError, "non-finite point");

  const double a = cfg.a;
  ComplexDistance cd;
  cd.rho = std::hypot(x.x, x.y);
  cd.z = x.z;
  cd.ztilde = cplx(x.z, -a);
  if (cd.rho > 0.0) {
    cd.cos_phi = x.x / cd.rho;
    cd.sin_phi = x.y / cd.rho;
  }

  if (std::abs(x.z) < kTolSing * a && cd.rho < a) {
    const double Y = (a - cd.rho) * (a + cd.rho);
    if (std::sqrt(Y) < kTolSing * a) {
      throw Error(ErrorCode::SingularPoint, "point lies on the focal circle");
    }
    if (side == Side::Unspecified) {
      throw Error(ErrorCode::AmbiguousBranch, "point lies on the branch disk; side required");
    }
    // z -> 0+ gives zeta -> -i sqrt(a^2 - rho^2).
    cd.xi = 0.0;
    cd.eta = side == Side::Upper ? std::sqrt(Y) : -std::sqrt(Y);
  } else {
    const auto [xi, eta] = raw_xi_eta(cd.rho, x.z, a);
    cd.xi = xi;
    cd.eta = std::clamp(eta, -a, a);
    if (std::hypot(cd.xi, cd.eta) < kTolSing * a) {
      throw Error(ErrorCode::SingularPoint, "point lies on the focal circle");
    }
  }
  cd.zeta = cplx(cd.xi, -cd.eta);
  return cd;
}

Spheroidal to_spheroidal(const Point3& x, const DisplacementConfig& cfg, Side side) {
  const auto cd = complex_distance(x, cfg, side);
  return {cd.xi, cd.eta, std::atan2(x.y, x.x)};
}

Point3 from_spheroidal(const Spheroidal& sph, const DisplacementConfig& cfg) {
  cfg.validate();
  const double a = cfg.a;
  if (sph.xi < 0.0 || std::abs(sph.eta) > a) {
    throw Error(ErrorCode::DomainError, "spheroidal coordinates need xi >= 0, |eta| <= a");
  }
  const double rho = std::sqrt((a * a + sph.xi * sph.xi) * (a - sph.eta) * (a + sph.eta)) / a;
  return {rho * std::cos(sph.phi), rho * std::sin(sph.phi), sph.xi * sph.eta / a};
}

ComplexAngle complex_angle(const ComplexDistance& cd, const DisplacementConfig& cfg) {
  if (std::abs(cd.zeta) < kTolSing * cfg.a) {
    throw Error(ErrorCode::SingularPoint, "complex angle undefined at zeta = 0");
  }
  return {cd.rho / cd.zeta, cd.ztilde / cd.zeta};
}

Vec3 rho_hat(const ComplexDistance& cd) { return {cd.cos_phi, cd.sin_phi, 0.0}; }
Vec3 phi_hat(const ComplexDistance& cd) { return {-cd.sin_phi, cd.cos_phi, 0.0}; }

CVec3 zeta_hat(const ComplexDistance& cd) {
  const cplx inv = 1.0 / cd.zeta;
  return {cd.rho * cd.cos_phi * inv, cd.rho * cd.sin_phi * inv, cd.ztilde * inv};
}

FrameTriad frame_triad(const ComplexDistance& cd, const DisplacementConfig& cfg) {
  if (cd.rho < kTolAxis * cfg.a) {
    throw Error(ErrorCode::OnAxis, "phi_hat is undefined on the z-axis");
  }
  const auto [sin_t, cos_t] = complex_angle(cd, cfg);
  const Vec3 rh = rho_hat(cd);
  const Vec3 zh{0.0, 0.0, 1.0};
  FrameTriad f;
  f.zeta_hat = sin_t * rh + cos_t * zh;
  f.theta_hat = cos_t * rh - sin_t * zh;
  f.phi_hat = phi_hat(cd);
  return f;
}

FrameTriad frame_triad(const Point3& x, const DisplacementConfig& cfg, Side side) {
  return frame_triad(complex_distance(x, cfg, side), cfg);
}

double singular_set_distance(const Point3& x, const DisplacementConfig& cfg) {
  const double a = cfg.a;
  const double rho = std::hypot(x.x, x.y);
  const double to_disk = rho <= a ? std::abs(x.z) : std::hypot(rho - a, x.z);
  return std::min(rho, to_disk) / a;
}

RegionTag classify(const Point3& x, const DisplacementConfig& cfg) {
  const double a = cfg.a;
  const double rho = std::hypot(x.x, x.y);
  const auto [xi, eta] = raw_xi_eta(rho, x.z, a);
  if (std::hypot(xi, eta) < kTolSing * a) return RegionTag::OnFocalCircle;
  if (xi < kTolSing * a && rho < a) return RegionTag::OnDiskInterior;
  if (rho < kTolAxis * a) return RegionTag::OnAxis;
  if (singular_set_distance(x, cfg) < kTolGuard) return RegionTag::NearSingular;
  return RegionTag::Exterior;
}

AxisAlignment::AxisAlignment(const Vec3& axis) {
  const double n = norm(axis);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::DomainError, "displacement axis must be a nonzero finite vector");
  }
  const Vec3 e3 = axis / n;
  const Vec3 helper = std::abs(e3.y) < 0.9 ? Vec3{0, 1, 0} : Vec3{1, 0, 0};
  Vec3 e1 = cross(helper, e3);
  e1 = e1 / norm(e1);
  basis_ = {e1, cross(e3, e1), e3};
}

Vec3 AxisAlignment::to_canonical(const Vec3& v) const {
  return {dot(basis_[0], v), dot(basis_[1], v), dot(basis_[2], v)};
}

Vec3 AxisAlignment::from_canonical(const Vec3& v) const {
  return basis_[0] * v.x + basis_[1] * v.y + basis_[2] * v.z;
}

CVec3 AxisAlignment::from_canonical(const CVec3& v) const {
  return basis_[0] * v.x + basis_[1] * v.y + basis_[2] * v.z;
}

}  // namespace cwave
