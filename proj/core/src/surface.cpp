#include "chebnet/surface.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

namespace chebnet {

namespace {

std::string fmt_num(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double domain_slack(const Box3& b) {
  const double extent = std::max({std::fabs(b.x0), std::fabs(b.x1), std::fabs(b.y0),
                                  std::fabs(b.y1), std::fabs(b.z0), std::fabs(b.z1), 1.0});
  return 1e-9 * extent;
}

}  // namespace

struct SurfaceSpec::ExtentCache {
  static constexpr int kGrid = 160;
  std::once_flag once;
  std::vector<std::uint8_t> bitmap;  // kGrid x kGrid, 1 = z-root exists
  std::mutex mu;
  std::map<std::pair<int, int>, double> eroded;  // (kx, ky) cells -> area
};

SurfaceSpec SurfaceSpec::catalog(std::string_view name, std::span<const double> params,
                                 std::optional<Box3> domain, double eval_tol) {
  SurfaceSpec s;
  s.eval_tol_ = eval_tol;

  auto take = [&](std::size_t i, double fallback) {
    return i < params.size() ? params[i] : fallback;
  };

  if (name == "plane") {
    s.builtin_ = Builtin::kPlane;
    s.domain_ = domain.value_or(Box3{-5, 5, -5, 5, -1, 1});
    s.name_ = "plane";
    s.text_ = "z";
  } else if (name == "hemisphere") {
    s.builtin_ = Builtin::kHemisphere;
    const double cx = take(0, 0), cy = take(1, 0), cz = take(2, 0), r = take(3, 10);
    if (r <= 0) throw std::invalid_argument("hemisphere radius must be positive");
    s.params_ = {cx, cy, cz, r};
    s.domain_ = domain.value_or(Box3{cx - r, cx + r, cy - r, cy + r, cz, cz + r});
    s.name_ = "hemisphere(" + fmt_num(cx) + "," + fmt_num(cy) + "," + fmt_num(cz) + "," + fmt_num(r) + ")";
    s.text_ = "(x - " + fmt_num(cx) + ")^2 + (y - " + fmt_num(cy) + ")^2 + (z - " +
              fmt_num(cz) + ")^2 - " + fmt_num(r) + "^2";
  } else if (name == "sinusoid") {
    s.builtin_ = Builtin::kSinusoid;
    s.domain_ = domain.value_or(Box3{0, 10, 0, 4, -3, 3});
    s.name_ = "sinusoid";
    s.text_ = "z - 0.05*x*sin(x) - sin(y)";
  } else if (name == "hypar" || name == "hyperbolic-paraboloid") {
    s.builtin_ = Builtin::kHypar;
    s.domain_ = domain.value_or(Box3{-1, 1, -1, 1, -2, 2});
    s.name_ = "hypar";
    s.text_ = "z - (x^2 - y^2)";
  } else if (name == "ellipsoid") {
    s.builtin_ = Builtin::kEllipsoid;
    const double a = take(0, 4), b = take(1, 3), c = take(2, 2);
    if (a <= 0 || b <= 0 || c <= 0) throw std::invalid_argument("ellipsoid semi-axes must be positive");
    s.params_ = {a, b, c, 0};
    s.domain_ = domain.value_or(Box3{-a, a, -b, b, -c, c});
    s.name_ = "ellipsoid(" + fmt_num(a) + "," + fmt_num(b) + "," + fmt_num(c) + ")";
    s.text_ = "(x/" + fmt_num(a) + ")^2 + (y/" + fmt_num(b) + ")^2 + (z/" + fmt_num(c) + ")^2 - 1";
  } else if (name == "torus") {
    s.builtin_ = Builtin::kTorus;
    const double R = take(0, 2), r = take(1, 0.75);
    if (R <= 0 || r <= 0 || r >= R) throw std::invalid_argument("torus needs 0 < r < R");
    s.params_ = {R, r, 0, 0};
    s.domain_ = domain.value_or(Box3{-(R + r), R + r, -(R + r), R + r, -r, r});
    s.name_ = "torus(" + fmt_num(R) + "," + fmt_num(r) + ")";
    s.text_ = "(sqrt(x^2 + y^2) - " + fmt_num(R) + ")^2 + z^2 - " + fmt_num(r) + "^2";
  } else if (name == "scherk") {
    s.builtin_ = Builtin::kScherk;
    s.domain_ = domain.value_or(Box3{-1.3, 1.3, -1.3, 1.3, -3, 3});
    s.name_ = "scherk";
    s.text_ = "exp(z)*cos(y) - cos(x)";
  } else {
    throw std::invalid_argument("unknown catalog surface '" + std::string(name) + "'");
  }

  if (s.domain_.x_extent() <= 0 || s.domain_.y_extent() <= 0)
    throw std::invalid_argument("domain box must have positive x and y extent");
  if (eval_tol <= 0) throw std::invalid_argument("eval_tol must be positive");

  s.extent_ = std::make_shared<ExtentCache>();
  return s;
}

SurfaceSpec SurfaceSpec::from_expression(Expr f, const Box3& domain, double eval_tol) {
  if (domain.x_extent() <= 0 || domain.y_extent() <= 0)
    throw std::invalid_argument("domain box must have positive x and y extent");
  if (eval_tol <= 0) throw std::invalid_argument("eval_tol must be positive");
  SurfaceSpec s;
  s.builtin_ = Builtin::kNone;
  s.text_ = f.text();
  s.expr_ = std::move(f);
  s.domain_ = domain;
  s.eval_tol_ = eval_tol;
  s.name_ = "expr";
  s.extent_ = std::make_shared<ExtentCache>();
  return s;
}

double SurfaceSpec::evaluate(const Vec3& p) const noexcept {
  switch (builtin_) {
    case Builtin::kPlane:
      return p.z;
    case Builtin::kHemisphere: {
      const double dx = p.x - params_[0], dy = p.y - params_[1], dz = p.z - params_[2];
      return dx * dx + dy * dy + dz * dz - params_[3] * params_[3];
    }
    case Builtin::kSinusoid:
      return p.z - 0.05 * p.x * std::sin(p.x) - std::sin(p.y);
    case Builtin::kHypar:
      return p.z - (p.x * p.x - p.y * p.y);
    case Builtin::kEllipsoid: {
      const double u = p.x / params_[0], v = p.y / params_[1], w = p.z / params_[2];
      return u * u + v * v + w * w - 1.0;
    }
    case Builtin::kTorus: {
      const double q = std::sqrt(p.x * p.x + p.y * p.y) - params_[0];
      return q * q + p.z * p.z - params_[1] * params_[1];
    }
    case Builtin::kScherk:
      return std::exp(p.z) * std::cos(p.y) - std::cos(p.x);
    case Builtin::kNone:
      return expr_->eval(p.x, p.y, p.z);
  }
  return std::nan("");
}

double SurfaceSpec::projected_extent_area(double erosion_margin) const {
  constexpr int kGrid = ExtentCache::kGrid;
  const Box3& b = domain_;
  const double dx = b.x_extent() / kGrid;
  const double dy = b.y_extent() / kGrid;

  std::call_once(extent_->once, [&]() {
    constexpr int kZSamples = 64;
    extent_->bitmap.assign(kGrid * kGrid, 0);
    for (int i = 0; i < kGrid; ++i) {
      const double x = b.x0 + (i + 0.5) * dx;
      for (int j = 0; j < kGrid; ++j) {
        const double y = b.y0 + (j + 0.5) * dy;
        double prev = std::nan("");
        bool found = false;
        for (int k = 0; k <= kZSamples && !found; ++k) {
          const double z = b.z0 + b.z_extent() * k / kZSamples;
          const double g = evaluate({x, y, z});
          if (!std::isfinite(g)) {
            prev = std::nan("");
            continue;
          }
          if (g == 0.0 || (std::isfinite(prev) && std::signbit(prev) != std::signbit(g)))
            found = true;
          prev = g;
        }
        if (found) extent_->bitmap[static_cast<std::size_t>(i) * kGrid + j] = 1;
      }
    }
  });

  const int kx = std::clamp(static_cast<int>(std::lround(erosion_margin / dx)), 0, kGrid);
  const int ky = std::clamp(static_cast<int>(std::lround(erosion_margin / dy)), 0, kGrid);

  std::lock_guard<std::mutex> lock(extent_->mu);
  auto [it, inserted] = extent_->eroded.try_emplace({kx, ky}, 0.0);
  if (inserted) {
    // Separable rectangular erosion; cells outside the grid count as empty.
    std::vector<std::uint8_t> pass(extent_->bitmap);
    if (kx > 0) {
      std::vector<std::uint8_t> next(pass.size(), 0);
      for (int i = kx; i < kGrid - kx; ++i)
        for (int j = 0; j < kGrid; ++j) {
          std::uint8_t all = 1;
          for (int d = -kx; d <= kx && all; ++d)
            all = pass[static_cast<std::size_t>(i + d) * kGrid + j];
          next[static_cast<std::size_t>(i) * kGrid + j] = all;
        }
      pass.swap(next);
    }
    if (ky > 0) {
      std::vector<std::uint8_t> next(pass.size(), 0);
      for (int i = 0; i < kGrid; ++i)
        for (int j = ky; j < kGrid - ky; ++j) {
          std::uint8_t all = 1;
          for (int d = -ky; d <= ky && all; ++d)
            all = pass[static_cast<std::size_t>(i) * kGrid + j + d];
          next[static_cast<std::size_t>(i) * kGrid + j] = all;
        }
      pass.swap(next);
    }
    long hits = 0;
    for (const std::uint8_t v : pass) hits += v;
    it->second = static_cast<double>(hits) / (kGrid * kGrid) * b.x_extent() * b.y_extent();
  }
  return it->second;
}

double eval_surface(const SurfaceSpec& spec, const Vec3& p) {
  const double v = spec.evaluate(p);
  if (!std::isfinite(v))
    throw EvaluationError("surface evaluation is non-finite at (" + fmt_num(p.x) + ", " +
                          fmt_num(p.y) + ", " + fmt_num(p.z) + ")");
  return v;
}

Vec3 gradient(const SurfaceSpec& spec, const Vec3& p) {
  if (!finite(p)) throw EvaluationError("gradient requested at a non-finite point");
  const double h = 1e-6 * std::max(1.0, norm(p));
  const Vec3 g = {
      (spec.evaluate({p.x + h, p.y, p.z}) - spec.evaluate({p.x - h, p.y, p.z})) / (2 * h),
      (spec.evaluate({p.x, p.y + h, p.z}) - spec.evaluate({p.x, p.y - h, p.z})) / (2 * h),
      (spec.evaluate({p.x, p.y, p.z + h}) - spec.evaluate({p.x, p.y, p.z - h})) / (2 * h),
  };
  if (!finite(g)) throw EvaluationError("gradient is non-finite");
  return g;
}

Vec3 lift_to_surface(const SurfaceSpec& spec, double x, double y) {
  constexpr int kSamples = 64;
  const Box3& b = spec.domain();
  const double z0 = b.z0, z1 = b.z1;
  const double ztol = 1e-14 * std::max({1.0, std::fabs(z0), std::fabs(z1)});

  // Scan top-down; the first root found is the largest-z one.
  double prev_z = z1;
  double prev_g = spec.evaluate({x, y, z1});
  if (prev_g == 0.0) return {x, y, z1};
  for (int k = 1; k <= kSamples; ++k) {
    const double z = z1 - (z1 - z0) * k / kSamples;
    const double g = spec.evaluate({x, y, z});
    if (g == 0.0) return {x, y, z};
    if (std::isfinite(prev_g) && std::isfinite(g) && std::signbit(prev_g) != std::signbit(g)) {
      double lo = z, hi = prev_z;
      double glo = g;
      while (hi - lo > ztol) {
        const double mid = 0.5 * (lo + hi);
        const double gm = spec.evaluate({x, y, mid});
        if (gm == 0.0) return {x, y, mid};
        if (std::signbit(gm) == std::signbit(glo)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      const Vec3 p = {x, y, 0.5 * (lo + hi)};
      if (std::fabs(spec.evaluate(p)) <= spec.eval_tol()) return p;
    }
    prev_z = z;
    prev_g = g;
  }
  throw NoRootError("no surface point above (" + fmt_num(x) + ", " + fmt_num(y) +
                    "): F has constant sign over the z range");
}

bool in_domain(const SurfaceSpec& spec, const Vec3& p) {
  return spec.domain().contains(p, domain_slack(spec.domain()));
}

}  // namespace chebnet
