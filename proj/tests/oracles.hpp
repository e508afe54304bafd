// Independent oracles for the test suite. Everything here recomputes results
// by a different route than the library code it checks.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "chebnet/geometry.hpp"
#include "chebnet/kernel.hpp"
#include "chebnet/rng.hpp"
#include "chebnet/surface.hpp"

namespace oracles {

using chebnet::Vec3;

/// Curvature as 1/circumradius, via the 2-unknown linear system for the
/// circumcenter in the plane spanned by the three points. Collinear inputs
/// (singular system) return 0.
inline double circumcircle_curvature(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 e1 = b - a;
  const Vec3 e2 = c - a;
  const double m11 = dot(e1, e1), m12 = dot(e1, e2), m22 = dot(e2, e2);
  const double det = m11 * m22 - m12 * m12;
  const double scale = m11 * m22;
  if (det <= 1e-14 * scale) return 0.0;
  // center = a + s*e1 + t*e2 with |center-a| = |center-b| = |center-c|
  const double r1 = 0.5 * m11, r2 = 0.5 * m22;
  const double s = (r1 * m22 - r2 * m12) / det;
  const double t = (r2 * m11 - r1 * m12) / det;
  const Vec3 center_offset = s * e1 + t * e2;
  return 1.0 / chebnet::norm(center_offset);
}

/// Roots of F(p(t)) by brute-force dense scanning (default 1e6 samples), the
/// slow double-check for the kernel's 64-sample bracketing.
inline std::vector<Vec3> scan_circle_roots(const chebnet::SurfaceSpec& spec,
                                           const chebnet::Circle3& c,
                                           int samples = 1000000) {
  std::vector<Vec3> roots;
  double prev_t = 0.0;
  double prev_g = spec.evaluate(c.point_at(0.0));
  for (int k = 1; k <= samples; ++k) {
    const double t = chebnet::kTwoPi * k / samples;
    const double g = spec.evaluate(c.point_at(t));
    if (prev_g == 0.0) {
      roots.push_back(c.point_at(prev_t));
    } else if (std::isfinite(prev_g) && std::isfinite(g) && g != 0.0 &&
               std::signbit(prev_g) != std::signbit(g)) {
      double lo = prev_t, hi = t, glo = prev_g;
      while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        const double gm = spec.evaluate(c.point_at(mid));
        if (gm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(gm) == std::signbit(glo)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(c.point_at(0.5 * (lo + hi)));
    }
    prev_t = t;
    prev_g = g;
  }
  return roots;
}

/// Exact roots of a circle against the sphere |p - center|^2 = r^2: the
/// restriction of F to the circle is A cos t + B sin t + C.
inline std::vector<Vec3> sphere_circle_roots_analytic(const Vec3& sphere_center, double r,
                                                      const chebnet::Circle3& c) {
  const Vec3 d = c.center - sphere_center;
  const double A = 2.0 * c.radius * dot(d, c.u_axis);
  const double B = 2.0 * c.radius * dot(d, c.v_axis);
  const double C = dot(d, d) + c.radius * c.radius - r * r;
  const double amp = std::hypot(A, B);
  std::vector<Vec3> roots;
  if (amp < std::fabs(C)) return roots;
  const double phase = std::atan2(B, A);
  const double half = std::acos(std::clamp(-C / amp, -1.0, 1.0));
  roots.push_back(c.point_at(phase + half));
  if (half > 0 && half < chebnet::kPi) roots.push_back(c.point_at(phase - half));
  return roots;
}

/// Kolmogorov-Smirnov distance of samples against the uniform law on [lo, hi].
inline double ks_uniform(std::vector<double> samples, double lo, double hi) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double u = (samples[k] - lo) / (hi - lo);
    d = std::max(d, std::fabs((k + 1) / n - u));
    d = std::max(d, std::fabs(u - k / n));
  }
  return d;
}

/// Random rotation matrix (uniform via quaternion) applied to v.
struct RigidMotion {
  double q[4];
  Vec3 translation;

  static RigidMotion draw(std::mt19937_64& rng) {
    RigidMotion m;
    double n2 = 0.0;
    do {
      n2 = 0.0;
      for (double& qi : m.q) {
        qi = 2.0 * chebnet::uniform_unit(rng) - 1.0;
        n2 += qi * qi;
      }
    } while (n2 < 1e-6 || n2 > 1.0);
    const double n = std::sqrt(n2);
    for (double& qi : m.q) qi /= n;
    m.translation = {chebnet::uniform_real(rng, -10, 10), chebnet::uniform_real(rng, -10, 10),
                     chebnet::uniform_real(rng, -10, 10)};
    return m;
  }

  Vec3 apply(const Vec3& v) const {
    const double w = q[0], x = q[1], y = q[2], z = q[3];
    const Vec3 r{(1 - 2 * (y * y + z * z)) * v.x + 2 * (x * y - w * z) * v.y + 2 * (x * z + w * y) * v.z,
                 2 * (x * y + w * z) * v.x + (1 - 2 * (x * x + z * z)) * v.y + 2 * (y * z - w * x) * v.z,
                 2 * (x * z - w * y) * v.x + 2 * (y * z + w * x) * v.y + (1 - 2 * (x * x + y * y)) * v.z};
    return r + translation;
  }
};

}  // namespace oracles
