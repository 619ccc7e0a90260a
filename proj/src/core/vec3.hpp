#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "core/error.hpp"

namespace oblique {

// Immutable 3-vector over f64. Finiteness is enforced once, at construction,
// so the arithmetic below stays branch-free.
class Vec3 {
 public:
  Vec3() : v_{0.0, 0.0, 0.0} {}

  Vec3(double x, double y, double z) : v_{x, y, z} {
    if (!(std::isfinite(x) && std::isfinite(y) && std::isfinite(z)))
      fail(ErrorCode::NonFinite, "vector component is not finite");
  }

  double x() const { return v_[0]; }
  double y() const { return v_[1]; }
  double z() const { return v_[2]; }
  double operator[](std::size_t i) const { return v_[i]; }

  double norm() const {
    return std::sqrt(v_[0] * v_[0] + v_[1] * v_[1] + v_[2] * v_[2]);
  }
  double norm_inf() const {
    return std::max({std::fabs(v_[0]), std::fabs(v_[1]), std::fabs(v_[2])});
  }

 private:
  std::array<double, 3> v_;
};

inline Vec3 operator+(const Vec3& u, const Vec3& v) {
  return {u.x() + v.x(), u.y() + v.y(), u.z() + v.z()};
}

inline Vec3 operator-(const Vec3& u, const Vec3& v) {
  return {u.x() - v.x(), u.y() - v.y(), u.z() - v.z()};
}

inline Vec3 operator-(const Vec3& u) { return {-u.x(), -u.y(), -u.z()}; }

inline Vec3 operator*(double s, const Vec3& v) {
  return {s * v.x(), s * v.y(), s * v.z()};
}

inline Vec3 operator*(const Vec3& v, double s) { return s * v; }

inline Vec3 operator/(const Vec3& v, double s) {
  return {v.x() / s, v.y() / s, v.z() / s};
}

inline double dot(const Vec3& u, const Vec3& v) {
  return u.x() * v.x() + u.y() * v.y() + u.z() * v.z();
}

inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u.y() * v.z() - u.z() * v.y(),
          u.z() * v.x() - u.x() * v.z(),
          u.x() * v.y() - u.y() * v.x()};
}

// Signed volume a . (b x c) of the parallelepiped spanned by the arguments.
inline double triple_product(const Vec3& a, const Vec3& b, const Vec3& c) {
  return dot(a, cross(b, c));
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline double norm_inf(const Vec3& v) {
  return std::max({std::fabs(v.x()), std::fabs(v.y()), std::fabs(v.z())});
}

}  // namespace oblique
