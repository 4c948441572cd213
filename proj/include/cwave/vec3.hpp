#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace cwave {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Small fixed 3-vector over double or complex<double>.
template <class T>
struct Vector3 {
  T x{}, y{}, z{};

  constexpr Vector3() = default;
  constexpr Vector3(T x_, T y_, T z_) : x(x_), y(y_), z(z_) {}

  template <class U>
  explicit constexpr Vector3(const Vector3<U>& o) : x(o.x), y(o.y), z(o.z) {}

  constexpr T& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr const T& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  Vector3& operator+=(const Vector3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vector3& operator-=(const Vector3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  template <class S>
  Vector3& operator*=(const S& s) { x *= s; y *= s; z *= s; return *this; }
  template <class S>
  Vector3& operator/=(const S& s) { x /= s; y /= s; z /= s; return *this; }

  friend Vector3 operator+(Vector3 a, const Vector3& b) { return a += b; }
  friend Vector3 operator-(Vector3 a, const Vector3& b) { return a -= b; }
  friend Vector3 operator-(const Vector3& a) { return {-a.x, -a.y, -a.z}; }
  friend bool operator==(const Vector3&, const Vector3&) = default;
};

using Vec3 = Vector3<double>;
using CVec3 = Vector3<cplx>;
using Point3 = Vec3;

template <class T>
Vector3<T> operator*(const Vector3<T>& v, const T& s) { return {v.x * s, v.y * s, v.z * s}; }
template <class T>
Vector3<T> operator*(const T& s, const Vector3<T>& v) { return v * s; }
template <class T>
Vector3<T> operator/(const Vector3<T>& v, const T& s) { return {v.x / s, v.y / s, v.z / s}; }

// Mixed real/complex arithmetic promotes to CVec3.
inline CVec3 operator*(const Vec3& v, const cplx& s) { return {v.x * s, v.y * s, v.z * s}; }
inline CVec3 operator*(const cplx& s, const Vec3& v) { return v * s; }
inline CVec3 operator*(const CVec3& v, double s) { return {v.x * s, v.y * s, v.z * s}; }
inline CVec3 operator*(double s, const CVec3& v) { return v * s; }
inline CVec3 operator/(const CVec3& v, double s) { return {v.x / s, v.y / s, v.z / s}; }
inline CVec3 operator+(const CVec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline CVec3 operator+(const Vec3& a, const CVec3& b) { return b + a; }
inline CVec3 operator-(const CVec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline CVec3 operator-(const Vec3& a, const CVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

inline CVec3 to_complex(const Vec3& v) { return {v.x, v.y, v.z}; }

/// Bilinear (unconjugated) product; u.u = 1 for the complex frame vectors.
template <class T>
T dot(const Vector3<T>& a, const Vector3<T>& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline cplx dot(const CVec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline cplx dot(const Vec3& a, const CVec3& b) { return dot(b, a); }

/// Hermitian product conj(a).b
inline cplx hdot(const CVec3& a, const CVec3& b) {
  return std::conj(a.x) * b.x + std::conj(a.y) * b.y + std::conj(a.z) * b.z;
}

template <class T>
Vector3<T> cross(const Vector3<T>& a, const Vector3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline CVec3 cross(const CVec3& a, const Vec3& b) { return cross(a, to_complex(b)); }
inline CVec3 cross(const Vec3& a, const CVec3& b) { return cross(to_complex(a), b); }

/// Unconjugated square v.v
template <class T>
T sq(const Vector3<T>& v) { return dot(v, v); }

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double norm(const CVec3& v) {
  return std::sqrt(std::norm(v.x) + std::norm(v.y) + std::norm(v.z));
}
/// Largest component modulus; cheap scale for residual normalisation.
inline double max_abs(const CVec3& v) {
  return std::max({std::abs(v.x), std::abs(v.y), std::abs(v.z)});
}

inline Vec3 real(const CVec3& v) { return {v.x.real(), v.y.real(), v.z.real()}; }
inline Vec3 imag(const CVec3& v) { return {v.x.imag(), v.y.imag(), v.z.imag()}; }
inline CVec3 conj(const CVec3& v) { return {std::conj(v.x), std::conj(v.y), std::conj(v.z)}; }

inline bool is_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

}  // namespace cwave
