#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chebnet/expr.hpp"
#include "chebnet/geometry.hpp"

namespace chebnet {

struct SurfaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// F has constant sign over the z range at the requested (x, y).
struct NoRootError : SurfaceError {
  using SurfaceError::SurfaceError;
};
/// F or a derived quantity evaluated to a non-finite value.
struct EvaluationError : SurfaceError {
  using SurfaceError::SurfaceError;
};

/// An implicit surface F(x,y,z) = 0 with an axis-aligned domain box and an
/// absolute tolerance on |F| for "point is on the surface".
///
/// Everything is canonicalized to F form; height fields z = f(x,y) become
/// F = z - f(x,y). Instances are immutable after construction and safe to
/// share across threads.
class SurfaceSpec {
 public:
  static constexpr double kDefaultEvalTol = 1e-7;

  /// Built-in catalog. Names: plane, hemisphere(cx,cy,cz,r), sinusoid,
  /// hypar, ellipsoid(a,b,c), torus(R,r), scherk. Omitted params take the
  /// entry's defaults; omitted domain takes the entry's natural box (for the
  /// hemisphere that clips at the equator plane z = cz).
  static SurfaceSpec catalog(std::string_view name,
                             std::span<const double> params = {},
                             std::optional<Box3> domain = std::nullopt,
                             double eval_tol = kDefaultEvalTol);

  static SurfaceSpec from_expression(Expr f, const Box3& domain,
                                     double eval_tol = kDefaultEvalTol);

  /// Raw F(p). May return NaN/inf where F is undefined; use eval_surface for
  /// a checked evaluation.
  double evaluate(const Vec3& p) const noexcept;

  const Box3& domain() const { return domain_; }
  double eval_tol() const { return eval_tol_; }
  const std::string& name() const { return name_; }
  bool is_expression() const { return builtin_ == Builtin::kNone; }

  /// Textual form of F, parseable by parse_surface_expr. Catalog entries
  /// render their parameters into the string.
  const std::string& expression_text() const { return text_; }

  /// Area of the domain's (x,y) box covered by points that lift onto the
  /// surface (z-root exists in the domain z range), optionally eroded by a
  /// margin so a band along the extent boundary is excluded. Estimated on a
  /// 160x160 grid; the grid and per-margin areas are cached (thread-safe).
  double projected_extent_area(double erosion_margin = 0.0) const;

 private:
  enum class Builtin { kNone, kPlane, kHemisphere, kSinusoid, kHypar, kEllipsoid, kTorus, kScherk };
  struct ExtentCache;

  SurfaceSpec() = default;

  Builtin builtin_ = Builtin::kNone;
  std::array<double, 4> params_{};
  std::optional<Expr> expr_;
  Box3 domain_{};
  double eval_tol_ = kDefaultEvalTol;
  std::string name_;
  std::string text_;
  std::shared_ptr<ExtentCache> extent_;
};

/// F(p), erroring out on non-finite results.
double eval_surface(const SurfaceSpec& spec, const Vec3& p);

/// Central finite-difference gradient of F with step 1e-6 * max(1, ||p||).
/// Diagnostic accuracy only; nothing downstream depends on it.
Vec3 gradient(const SurfaceSpec& spec, const Vec3& p);

/// Lift (x, y) onto the surface: returns (x, y, z*) with |F| <= eval_tol,
/// found by sign-bracketing F over the domain z range and bisecting. With
/// several roots the largest z (upper sheet) wins.
Vec3 lift_to_surface(const SurfaceSpec& spec, double x, double y);

/// Closed-box domain test (with a tiny relative slack so face points
/// produced by root finding are kept).
bool in_domain(const SurfaceSpec& spec, const Vec3& p);

}  // namespace chebnet
