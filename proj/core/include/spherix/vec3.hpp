#pragma once

#include <array>
#include <cmath>
#include <ostream>

namespace spherix {

/// Point or direction in Euclidean 3-space.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3& operator+=(const Vec3& o) noexcept {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) noexcept {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double k) noexcept {
    x *= k;
    y *= k;
    z *= k;
    return *this;
  }

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) noexcept { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) noexcept { return a -= b; }
constexpr Vec3 operator-(const Vec3& a) noexcept { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double k, Vec3 a) noexcept { return a *= k; }
constexpr Vec3 operator*(Vec3 a, double k) noexcept { return a *= k; }
constexpr Vec3 operator/(Vec3 a, double k) noexcept { return a *= (1.0 / k); }

constexpr double dot(const Vec3& a, const Vec3& b) noexcept {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) noexcept {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Scalar triple product det(a, b, c) = a . (b x c).
constexpr double det3(const Vec3& a, const Vec3& b, const Vec3& c) noexcept {
  return dot(a, cross(b, c));
}

inline double norm(const Vec3& a) noexcept { return std::hypot(a.x, a.y, a.z); }
constexpr double norm2(const Vec3& a) noexcept { return dot(a, a); }

inline double max_abs(const Vec3& a) noexcept {
  return std::fmax(std::fabs(a.x), std::fmax(std::fabs(a.y), std::fabs(a.z)));
}

inline bool is_finite(const Vec3& a) noexcept {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

}  // namespace spherix
