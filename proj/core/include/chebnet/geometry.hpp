#pragma once

#include <cmath>

namespace chebnet {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr bool operator==(const Vec3& o) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

inline bool finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Axis-aligned box. Treated as closed; containment tests carry a small
/// relative slack so points computed onto a face by root finding are kept.
struct Box3 {
  double x0 = 0, x1 = 0;
  double y0 = 0, y1 = 0;
  double z0 = 0, z1 = 0;

  double x_extent() const { return x1 - x0; }
  double y_extent() const { return y1 - y0; }
  double z_extent() const { return z1 - z0; }

  bool contains(const Vec3& p, double slack = 0.0) const {
    return p.x >= x0 - slack && p.x <= x1 + slack && p.y >= y0 - slack &&
           p.y <= y1 + slack && p.z >= z0 - slack && p.z <= z1 + slack;
  }
};

/// Rectangle in the (x,y) plane, e.g. the seed box for the net origin A.
struct Rect {
  double x0 = 0, x1 = 0;
  double y0 = 0, y1 = 0;
};

/// Wrap an angle to [0, 2*pi).
inline double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // fmod can land exactly on 2*pi after the add
  return r;
}

/// Wrap an angle to [-pi, pi).
inline double wrap_angle_signed(double a) {
  double r = wrap_angle(a);
  if (r >= kPi) r -= kTwoPi;
  return r;
}

}  // namespace chebnet
