#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chebnet {

/// Syntax or name error found while parsing an expression. `offset` is the
/// byte position in the input where the problem starts (end of input for
/// truncated expressions).
struct ParseError : std::runtime_error {
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " (offset " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

/// Expression tree over the variables x, y, z.
///
/// Grammar: standard infix with + - * / and right-associative ^, unary
/// negation, one-argument functions sin cos tan asin acos atan exp ln sqrt
/// abs, constants pi and e, numeric literals. Parsing is total: any input
/// yields a tree or a ParseError with a byte offset.
class Expr {
 public:
  static Expr parse(std::string_view text);  // throws ParseError

  /// Evaluate at (x, y, z). Domain errors (sqrt of a negative, log of a
  /// non-positive, ...) surface as NaN or infinity; callers that need a
  /// hard error check std::isfinite on the result.
  double eval(double x, double y, double z) const noexcept;

  const std::string& text() const { return text_; }

 private:
  enum class Op : unsigned char {
    kConst, kVarX, kVarY, kVarZ,
    kAdd, kSub, kMul, kDiv, kPow, kNeg,
    kSin, kCos, kTan, kAsin, kAcos, kAtan, kExp, kLn, kSqrt, kAbs,
  };
  struct Node {
    Op op;
    double value = 0.0;  // kConst only
    int a = -1;
    int b = -1;
  };

  double eval_node(int idx, double x, double y, double z) const noexcept;

  std::vector<Node> nodes_;
  int root_ = -1;
  std::string text_;

  friend class ExprParser;
};

/// Parse a Cartesian surface expression F(x,y,z). Thin alias for Expr::parse
/// kept as the module-level entry point.
Expr parse_surface_expr(std::string_view text);

}  // namespace chebnet
