#include "cwave/verify/fd.hpp"

#include <cmath>

#include "cwave/errors.hpp"
#include "cwave/geometry.hpp"

namespace cwave {

namespace {

double magnitude(const cplx& v) { return std::abs(v); }
double magnitude(const CVec3& v) { return norm(v); }

// One-dimensional central difference of order 1 or 2 for a sampler
// s(offset) -> T, with optional single Richardson step.
template <class T, class S>
T central(const S& s, int deriv, const FdConfig& fc) {
  auto raw = [&](double h) -> T {
    if (fc.stencil == 3) {
      if (deriv == 1) return (s(h) - s(-h)) * (1.0 / (2.0 * h));
      return (s(h) - 2.0 * s(0.0) + s(-h)) * (1.0 / (h * h));
    }
    if (deriv == 1) {
      return (s(-2.0 * h) - 8.0 * s(-h) + 8.0 * s(h) - s(2.0 * h)) * (1.0 / (12.0 * h));
    }
    return (-1.0 * s(2.0 * h) + 16.0 * s(h) - 30.0 * s(0.0) + 16.0 * s(-h) - s(-2.0 * h)) *
           (1.0 / (12.0 * h * h));
  };
  if (!fc.richardson) return raw(fc.h);
  const double gain = fc.stencil == 3 ? 4.0 : 16.0;
  const T coarse = raw(fc.h);
  const T fine = raw(0.5 * fc.h);
  return (gain * fine - coarse) * (1.0 / (gain - 1.0));
}

Vec3 unit(int k) {
  Vec3 e;
  e[k] = 1.0;
  return e;
}

template <class T, class F>
T partial(const F& f, const Point3& x, double t, int k, int deriv, const FdConfig& fc) {
  const Vec3 e = unit(k);
  return central<T>([&](double o) { return f(x + e * o, t); }, deriv, fc);
}

template <class T, class F>
T time_partial(const F& f, const Point3& x, double t, int deriv, const FdConfig& fc) {
  return central<T>([&](double o) { return f(x, t + o); }, deriv, fc);
}

// Second-order cross difference d^2 f / dx_j dx_k, j != k. Only used for
// the scale of the Laplacian, so its accuracy need not match the stencil.
template <class T, class F>
T mixed_partial(const F& f, const Point3& x, double t, int j, int k, double h) {
  const Vec3 ej = unit(j) * h;
  const Vec3 ek = unit(k) * h;
  return (f(x + ej + ek, t) - f(x + ej - ek, t) - f(x - ej + ek, t) + f(x - ej - ek, t)) *
         (1.0 / (4.0 * h * h));
}

double sq_mag(const cplx& v) { return std::norm(v); }
double sq_mag(const CVec3& v) { return std::norm(v.x) + std::norm(v.y) + std::norm(v.z); }

// The Laplacian is the trace of the Hessian; its natural size is the
// (rotation invariant) Frobenius norm of the whole Hessian, which stays
// finite where the diagonal entries happen to vanish in the chosen axes.
template <class T, class F>
Fd<T> laplacian_impl(const F& f, const Point3& x, double t, const FdConfig& fc) {
  Fd<T> out;
  double diag_sum = 0.0;
  double frob2 = 0.0;
  for (int k = 0; k < 3; ++k) {
    const T d2 = partial<T>(f, x, t, k, 2, fc);
    out.value += d2;
    diag_sum += magnitude(d2);
    frob2 += sq_mag(d2);
  }
  for (int j = 0; j < 3; ++j) {
    for (int k = j + 1; k < 3; ++k) frob2 += 2.0 * sq_mag(mixed_partial<T>(f, x, t, j, k, fc.h));
  }
  out.scale = std::max(diag_sum, std::sqrt(frob2));
  return out;
}

template <class T, class F>
Fd<T> directional_impl(const F& f, const CVec3& dir, const Point3& x, double t,
                       const FdConfig& fc) {
  Fd<T> out;
  for (int k = 0; k < 3; ++k) {
    const T d = partial<T>(f, x, t, k, 1, fc);
    out.value += dir[k] * d;
    out.scale += std::abs(dir[k]) * magnitude(d);
  }
  return out;
}

}  // namespace

void check_stencil(const Point3& x, const FdConfig& fc, const SingularSets& sing) {
  if (!(fc.h > 0.0) || (fc.stencil != 3 && fc.stencil != 5)) {
    throw Error(ErrorCode::DomainError, "FdConfig needs h > 0 and a 3- or 5-point stencil");
  }
  const double a = sing.a;
  if ((sing.disk || sing.axis) && !(fc.h <= kTolGuard * a / 10.0 * (1.0 + 1e-12))) {
    throw Error(ErrorCode::DomainError, "FD step must not exceed tol_guard*a/10");
  }
  const double rho = std::hypot(x.x, x.y);
  const double guard = kTolGuard * a;
  if (sing.disk) {
    const double to_disk = rho <= a ? std::abs(x.z) : std::hypot(rho - a, x.z);
    if (to_disk < guard) {
      throw Error(ErrorCode::StencilClipsSingularSet, "stencil too close to the branch disk");
    }
  }
  if (sing.axis && rho < guard) {
    throw Error(ErrorCode::StencilClipsSingularSet, "stencil too close to the z-axis");
  }
}

Fd<CVec3> fd_grad(const ScalarField& f, const Point3& x, double t, const FdConfig& fc,
                  const SingularSets& sing) {
  check_stencil(x, fc, sing);
  Fd<CVec3> out;
  for (int k = 0; k < 3; ++k) {
    out.value[k] = partial<cplx>(f, x, t, k, 1, fc);
  }
  out.scale = norm(out.value);
  return out;
}

Fd<cplx> fd_div(const VectorField& f, const Point3& x, double t, const FdConfig& fc,
                const SingularSets& sing) {
  check_stencil(x, fc, sing);
  Fd<cplx> out;
  double diag_sum = 0.0;
  double frob2 = 0.0;
  for (int k = 0; k < 3; ++k) {
    const CVec3 d = partial<CVec3>(f, x, t, k, 1, fc);
    out.value += d[k];
    diag_sum += std::abs(d[k]);
    frob2 += sq_mag(d);
  }
  // Divergence is the Jacobian trace; scale by the full Jacobian as well.
  out.scale = std::max(diag_sum, std::sqrt(frob2));
  return out;
}

Fd<CVec3> fd_curl(const VectorField& f, const Point3& x, double t, const FdConfig& fc,
                  const SingularSets& sing) {
  check_stencil(x, fc, sing);
  CVec3 d[3];
  for (int k = 0; k < 3; ++k) d[k] = partial<CVec3>(f, x, t, k, 1, fc);
  // d[k][j] = dF_j/dx_k
  Fd<CVec3> out;
  out.value = {d[1].z - d[2].y, d[2].x - d[0].z, d[0].y - d[1].x};
  const Vec3 s{std::abs(d[1].z) + std::abs(d[2].y), std::abs(d[2].x) + std::abs(d[0].z),
               std::abs(d[0].y) + std::abs(d[1].x)};
  double frob2 = 0.0;
  for (const auto& dk : d) frob2 += sq_mag(dk);
  out.scale = std::max(norm(s), std::sqrt(frob2));
  return out;
}

Fd<cplx> fd_laplacian(const ScalarField& f, const Point3& x, double t, const FdConfig& fc,
                      const SingularSets& sing) {
  check_stencil(x, fc, sing);
  return laplacian_impl<cplx>(f, x, t, fc);
}

Fd<CVec3> fd_laplacian(const VectorField& f, const Point3& x, double t, const FdConfig& fc,
                       const SingularSets& sing) {
  check_stencil(x, fc, sing);
  return laplacian_impl<CVec3>(f, x, t, fc);
}

Fd<cplx> fd_dt(const ScalarField& f, const Point3& x, double t, const FdConfig& fc) {
  const cplx d = time_partial<cplx>(f, x, t, 1, fc);
  return {d, std::abs(d)};
}

Fd<CVec3> fd_dt(const VectorField& f, const Point3& x, double t, const FdConfig& fc) {
  const CVec3 d = time_partial<CVec3>(f, x, t, 1, fc);
  return {d, norm(d)};
}

Fd<cplx> fd_dt2(const ScalarField& f, const Point3& x, double t, const FdConfig& fc) {
  const cplx d = time_partial<cplx>(f, x, t, 2, fc);
  return {d, std::abs(d)};
}

Fd<CVec3> fd_dt2(const VectorField& f, const Point3& x, double t, const FdConfig& fc) {
  const CVec3 d = time_partial<CVec3>(f, x, t, 2, fc);
  return {d, norm(d)};
}

Fd<cplx> fd_box(const ScalarField& f, const Point3& x, double t, const FdConfig& fc,
                const SingularSets& sing) {
  return fd_dt2(f, x, t, fc) - fd_laplacian(f, x, t, fc, sing);
}

Fd<CVec3> fd_box(const VectorField& f, const Point3& x, double t, const FdConfig& fc,
                 const SingularSets& sing) {
  return fd_dt2(f, x, t, fc) - fd_laplacian(f, x, t, fc, sing);
}

Fd<cplx> fd_directional(const ScalarField& f, const CVec3& dir, const Point3& x, double t,
                        const FdConfig& fc, const SingularSets& sing) {
  check_stencil(x, fc, sing);
  return directional_impl<cplx>(f, dir, x, t, fc);
}

Fd<CVec3> fd_directional(const VectorField& f, const CVec3& dir, const Point3& x, double t,
                         const FdConfig& fc, const SingularSets& sing) {
  check_stencil(x, fc, sing);
  return directional_impl<CVec3>(f, dir, x, t, fc);
}

double normalized_residual(const Fd<cplx>& fd, cplx expected) {
  const double denom = std::max(fd.scale, std::abs(expected));
  const double diff = std::abs(fd.value - expected);
  return denom > 0.0 ? diff / denom : diff;
}

double normalized_residual(const Fd<CVec3>& fd, const CVec3& expected) {
  const double denom = std::max(fd.scale, norm(expected));
  const double diff = norm(fd.value - expected);
  return denom > 0.0 ? diff / denom : diff;
}

}  // namespace cwave
