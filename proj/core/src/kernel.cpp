#include "chebnet/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chebnet {

namespace {

// Unit vector orthogonal to n, chosen deterministically: cross n with the
// coordinate axis least aligned with it.
Vec3 any_orthogonal(const Vec3& n) {
  const double ax = std::fabs(n.x), ay = std::fabs(n.y), az = std::fabs(n.z);
  Vec3 k{0, 0, 1};
  if (ax <= ay && ax <= az)
    k = {1, 0, 0};
  else if (ay <= az)
    k = {0, 1, 0};
  return normalized(cross(n, k));
}

}  // namespace

Circle3 vertical_step_circle(const Vec3& m, double w, Heading h) {
  if (w <= 0) throw std::invalid_argument("mesh width must be positive");
  return Circle3{m, w, h.horizontal(), Vec3{0, 0, 1}};
}

std::optional<Circle3> sphere_sphere_circle(const Vec3& c1, double r1,
                                            const Vec3& c2, double r2) {
  if (r1 <= 0 || r2 <= 0) throw std::invalid_argument("sphere radii must be positive");
  const Vec3 delta = c2 - c1;
  const double d = norm(delta);
  if (d == 0.0) throw std::invalid_argument("sphere_sphere_circle: coincident centers");
  if (d >= r1 + r2 || d <= std::fabs(r1 - r2)) return std::nullopt;

  const Vec3 n = delta / d;
  const double a = (d * d + r1 * r1 - r2 * r2) / (2 * d);
  const double rho2 = r1 * r1 - a * a;
  if (rho2 <= 0) return std::nullopt;

  Circle3 c;
  c.center = c1 + a * n;
  c.radius = std::sqrt(rho2);
  c.u_axis = any_orthogonal(n);
  c.v_axis = cross(n, c.u_axis);
  return c;
}

std::vector<Vec3> circle_surface_roots(const SurfaceSpec& spec, const Circle3& c,
                                       int n_samples) {
  if (n_samples < 4) throw std::invalid_argument("need at least 4 circle samples");
  const int n = n_samples;

  std::vector<double> g(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) g[static_cast<std::size_t>(k)] = spec.evaluate(c.point_at(kTwoPi * k / n));

  std::vector<double> root_ts;
  constexpr double kTTol = 1e-13;  // comfortably under the 1e-12 contract

  for (int k = 0; k < n; ++k) {
    const double gk = g[static_cast<std::size_t>(k)];
    const double gn = g[static_cast<std::size_t>((k + 1) % n)];
    const double tk = kTwoPi * k / n;
    const double tn = kTwoPi * (k + 1) / n;
    if (gk == 0.0) {
      root_ts.push_back(tk);
      continue;
    }
    if (!std::isfinite(gk) || !std::isfinite(gn) || gn == 0.0) continue;
    if (std::signbit(gk) == std::signbit(gn)) continue;

    double lo = tk, hi = tn, glo = gk;
    while (hi - lo > kTTol) {
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
    root_ts.push_back(0.5 * (lo + hi));
  }

  std::vector<Vec3> roots;
  const double merge_dist = 1e-9 * c.radius;
  for (const double t : root_ts) {
    const Vec3 p = c.point_at(t);
    if (std::fabs(spec.evaluate(p)) > spec.eval_tol()) continue;
    bool dup = false;
    for (const Vec3& q : roots)
      if (distance(p, q) <= merge_dist) {
        dup = true;
        break;
      }
    if (!dup) roots.push_back(p);
  }
  return roots;
}

StepOutcome guideline_step(const SurfaceSpec& spec, const Vec3& prev, Heading h, double w) {
  StepOutcome out;
  out.candidates = circle_surface_roots(spec, vertical_step_circle(prev, w, h));

  const Vec3 dir = h.horizontal();
  bool have = false;
  double best_advance = 0.0;
  Vec3 best;
  for (const Vec3& p : out.candidates) {
    const double advance = dot(p - prev, dir);
    if (advance > 0.0 && (!have || advance > best_advance)) {
      have = true;
      best_advance = advance;
      best = p;
    }
  }
  if (!have) {
    out.status = StepStatus::no_intersection;
    return out;
  }
  out.point = best;
  out.status = in_domain(spec, best) ? StepStatus::found : StepStatus::out_of_domain;
  return out;
}

StepOutcome compass_step(const SurfaceSpec& spec, const Vec3& left, const Vec3& up,
                         const Vec3& diag_prev, double w) {
  StepOutcome out;
  const auto circ = sphere_sphere_circle(left, w, up, w);
  if (!circ) {
    out.status = StepStatus::no_intersection;
    return out;
  }
  out.candidates = circle_surface_roots(spec, *circ);

  // diag_prev is itself an intersection of the two spheres with the surface;
  // drop it and take the farthest survivor.
  double best = -1.0, second = -1.0;
  Vec3 best_p;
  for (const Vec3& p : out.candidates) {
    const double dist = distance(p, diag_prev);
    if (dist <= 1e-6 * w) continue;
    if (dist > best) {
      second = best;
      best = dist;
      best_p = p;
    } else if (dist > second) {
      second = dist;
    }
  }
  if (best < 0.0) {
    out.status = StepStatus::no_intersection;
    return out;
  }
  if (second >= 0.0 && best - second <= 1e-9 * w) {
    out.status = StepStatus::ambiguous;
    return out;
  }
  out.point = best_p;
  out.status = in_domain(spec, best_p) ? StepStatus::found : StepStatus::out_of_domain;
  return out;
}

double polyline_curvature(const Vec3& p_prev, const Vec3& p_mid, const Vec3& p_next) {
  const Vec3 v1 = p_prev - p_mid;
  const Vec3 v2 = p_next - p_mid;
  const double n1 = norm(v1);
  const double n2 = norm(v2);
  const double chord = distance(p_next, p_prev);
  if (n1 == 0.0 || n2 == 0.0 || chord == 0.0)
    throw std::invalid_argument("polyline_curvature: coincident points");
  // 1/R via the inscribed-angle identity: chord / sin(angle at mid) = 2R.
  return 2.0 * norm(cross(v1, v2)) / (n1 * n2 * chord);
}

}  // namespace chebnet
