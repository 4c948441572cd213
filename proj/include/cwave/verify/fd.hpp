#pragma once

// Central finite-difference operators used as independent oracles for the
// closed-form fields. Each operator returns the approximation together with
// a local scale: the summed magnitudes of the partial derivatives that were
// combined, so residuals can be normalised without reference to the
// closed form under test.

#include <functional>

#include "cwave/vec3.hpp"

namespace cwave {

struct FdConfig {
  double h = 1e-4;          // absolute step in space and time
  int stencil = 5;          // 3 or 5 points
  bool richardson = false;  // halve h once and extrapolate
  double tol_fd = 1e-5;

  static FdConfig for_length(double a) {
    FdConfig c;
    c.h = 1e-4 * a;
    return c;
  }
};

/// Which singular sets of the source geometry (radius a) the field has.
struct SingularSets {
  double a = 1.0;
  bool disk = true;  // branch disk and its rim
  bool axis = false;

  static SingularSets none() { return {1.0, false, false}; }
};

template <class T>
struct Fd {
  T value{};
  double scale = 0.0;
};

using ScalarField = std::function<cplx(const Point3&, double)>;
using VectorField = std::function<CVec3(const Point3&, double)>;

Fd<CVec3> fd_grad(const ScalarField& f, const Point3& x, double t, const FdConfig& fc,
                  const SingularSets& sing);
Fd<cplx> fd_div(const VectorField& f, const Point3& x, double t, const FdConfig& fc,
                const SingularSets& sing);
Fd<CVec3> fd_curl(const VectorField& f, const Point3& x, double t, const FdConfig& fc,
                  const SingularSets& sing);

Fd<cplx> fd_laplacian(const ScalarField& f, const Point3& x, double t, const FdConfig& fc,
                      const SingularSets& sing);
/// Component-wise in Cartesian components.
Fd<CVec3> fd_laplacian(const VectorField& f, const Point3& x, double t, const FdConfig& fc,
                       const SingularSets& sing);

Fd<cplx> fd_dt(const ScalarField& f, const Point3& x, double t, const FdConfig& fc);
Fd<CVec3> fd_dt(const VectorField& f, const Point3& x, double t, const FdConfig& fc);
Fd<cplx> fd_dt2(const ScalarField& f, const Point3& x, double t, const FdConfig& fc);
Fd<CVec3> fd_dt2(const VectorField& f, const Point3& x, double t, const FdConfig& fc);

/// d'Alembertian dt^2 - Laplacian.
Fd<cplx> fd_box(const ScalarField& f, const Point3& x, double t, const FdConfig& fc,
                const SingularSets& sing);
Fd<CVec3> fd_box(const VectorField& f, const Point3& x, double t, const FdConfig& fc,
                 const SingularSets& sing);

/// (dir . grad) f for a complex direction, e.g. D_zeta = zeta_hat . grad.
Fd<cplx> fd_directional(const ScalarField& f, const CVec3& dir, const Point3& x, double t,
                        const FdConfig& fc, const SingularSets& sing);
Fd<CVec3> fd_directional(const VectorField& f, const CVec3& dir, const Point3& x, double t,
                         const FdConfig& fc, const SingularSets& sing);

/// Throws StencilClipsSingularSet when x is closer than tol_guard*a to a
/// declared singular set, and DomainError for an unusable FdConfig.
void check_stencil(const Point3& x, const FdConfig& fc, const SingularSets& sing);

/// |fd - expected| / max(scale, |expected|).
double normalized_residual(const Fd<cplx>& fd, cplx expected);
double normalized_residual(const Fd<CVec3>& fd, const CVec3& expected);

template <class T>
Fd<T> operator+(const Fd<T>& a, const Fd<T>& b) {
  return {a.value + b.value, a.scale + b.scale};
}
template <class T>
Fd<T> operator-(const Fd<T>& a, const Fd<T>& b) {
  return {a.value - b.value, a.scale + b.scale};
}

}  // namespace cwave
