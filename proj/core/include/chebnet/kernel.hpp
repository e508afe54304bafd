#pragma once

#include <optional>
#include <vector>

#include "chebnet/geometry.hpp"
#include "chebnet/surface.hpp"

namespace chebnet {

/// Horizontal direction of a guideline step: angle from the +x axis in the
/// (x,y) plane, stored normalized to [0, 2*pi).
struct Heading {
  double azimuth = 0.0;

  static Heading of(double radians) { return {wrap_angle(radians)}; }
  Heading turned(double delta) const { return of(azimuth + delta); }
  Vec3 horizontal() const { return {std::cos(azimuth), std::sin(azimuth), 0.0}; }
};

/// Circle in 3D: p(t) = center + radius * (cos t * u_axis + sin t * v_axis).
/// u_axis and v_axis are unit length and mutually orthogonal.
struct Circle3 {
  Vec3 center;
  double radius = 0.0;
  Vec3 u_axis;
  Vec3 v_axis;

  Vec3 point_at(double t) const {
    return center + radius * (std::cos(t) * u_axis + std::sin(t) * v_axis);
  }
};

enum class StepStatus { found, no_intersection, out_of_domain, ambiguous };

struct StepOutcome {
  StepStatus status = StepStatus::no_intersection;
  Vec3 point;                   // valid for found; best candidate for out_of_domain
  std::vector<Vec3> candidates; // every surface root considered (diagnostic)

  bool found() const { return status == StepStatus::found; }
};

/// Circle cut by the vertical plane through m with horizontal direction h and
/// the sphere(m, w). The plane passes through the sphere center, so the
/// circle is a great circle: center m, radius w.
Circle3 vertical_step_circle(const Vec3& m, double w, Heading h);

/// Radical circle of two spheres, or nullopt when they do not intersect in a
/// circle. Throws on coincident centers.
std::optional<Circle3> sphere_sphere_circle(const Vec3& c1, double r1,
                                            const Vec3& c2, double r2);

/// All roots of F(p(t)) over t in [0, 2*pi): the circle is sampled at
/// n_samples points, every sign change is bracketed and bisected to
/// |dt| <= 1e-12, and near-duplicate points (within 1e-9 * radius) merge.
std::vector<Vec3> circle_surface_roots(const SurfaceSpec& spec, const Circle3& c,
                                       int n_samples = 64);

/// One guideline step of width w from prev along heading h: of the roots of
/// the vertical step circle, keep those advancing in the heading direction
/// and take the farthest-advancing one.
StepOutcome guideline_step(const SurfaceSpec& spec, const Vec3& prev, Heading h, double w);

/// One interior compass step: intersect the surface with the spheres of
/// radius w around the left and up neighbors and take the root farthest from
/// the diagonal predecessor (which is itself always a root).
StepOutcome compass_step(const SurfaceSpec& spec, const Vec3& left, const Vec3& up,
                         const Vec3& diag_prev, double w);

/// Discrete curvature of the polyline at p_mid: the reciprocal circumradius
/// of the three points, 2*sin(alpha) / ||p_next - p_prev|| with alpha the
/// angle at p_mid. Exactly 0 for collinear points; throws if two of the
/// points coincide.
double polyline_curvature(const Vec3& p_prev, const Vec3& p_mid, const Vec3& p_next);

}  // namespace chebnet
