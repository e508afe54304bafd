#include "chebnet/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace chebnet {

namespace {

constexpr double kE = 2.71828182845904523536;
constexpr double kPiLocal = 3.14159265358979323846;

}  // namespace

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr run() {
    Expr e;
    e.text_.assign(text_);
    nodes_ = &e.nodes_;
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "empty expression");
    e.root_ = parse_sum();
    skip_ws();
    if (pos_ < text_.size())
      throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  using Op = Expr::Op;

  int add_node(Op op, int a = -1, int b = -1, double value = 0.0) {
    nodes_->push_back({op, value, a, b});
    return static_cast<int>(nodes_->size()) - 1;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) throw ParseError(pos_, std::string("expected ") + what);
  }

  int parse_sum() {
    int lhs = parse_product();
    for (;;) {
      if (accept('+'))
        lhs = add_node(Op::kAdd, lhs, parse_product());
      else if (accept('-'))
        lhs = add_node(Op::kSub, lhs, parse_product());
      else
        return lhs;
    }
  }

  int parse_product() {
    int lhs = parse_unary();
    for (;;) {
      if (accept('*'))
        lhs = add_node(Op::kMul, lhs, parse_unary());
      else if (accept('/'))
        lhs = add_node(Op::kDiv, lhs, parse_unary());
      else
        return lhs;
    }
  }

  int parse_unary() {
    if (accept('-')) return add_node(Op::kNeg, parse_unary());
    return parse_power();
  }

  // ^ binds tighter than unary minus and is right-associative: -x^2 == -(x^2),
  // a^b^c == a^(b^c), and 2^-3 is accepted.
  int parse_power() {
    int base = parse_primary();
    if (accept('^')) return add_node(Op::kPow, base, parse_unary());
    return base;
  }

  int parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      int inner = parse_sum();
      expect(')', "')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  int parse_number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc()) throw ParseError(pos_, "malformed number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return add_node(Op::kConst, -1, -1, value);
  }

  int parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);

    if (name == "x") return add_node(Op::kVarX);
    if (name == "y") return add_node(Op::kVarY);
    if (name == "z") return add_node(Op::kVarZ);
    if (name == "pi") return add_node(Op::kConst, -1, -1, kPiLocal);
    if (name == "e") return add_node(Op::kConst, -1, -1, kE);

    Op fn;
    if (name == "sin") fn = Op::kSin;
    else if (name == "cos") fn = Op::kCos;
    else if (name == "tan") fn = Op::kTan;
    else if (name == "asin") fn = Op::kAsin;
    else if (name == "acos") fn = Op::kAcos;
    else if (name == "atan") fn = Op::kAtan;
    else if (name == "exp") fn = Op::kExp;
    else if (name == "ln") fn = Op::kLn;
    else if (name == "sqrt") fn = Op::kSqrt;
    else if (name == "abs") fn = Op::kAbs;
    else throw ParseError(start, "unknown identifier '" + std::string(name) + "'");

    expect('(', "'(' after function name");
    int arg = parse_sum();
    expect(')', "')'");
    return add_node(fn, arg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Expr::Node>* nodes_ = nullptr;
};

Expr Expr::parse(std::string_view text) { return ExprParser(text).run(); }

Expr parse_surface_expr(std::string_view text) { return Expr::parse(text); }

double Expr::eval_node(int idx, double x, double y, double z) const noexcept {
  const Node& n = nodes_[static_cast<std::size_t>(idx)];
  switch (n.op) {
    case Op::kConst: return n.value;
    case Op::kVarX: return x;
    case Op::kVarY: return y;
    case Op::kVarZ: return z;
    case Op::kAdd: return eval_node(n.a, x, y, z) + eval_node(n.b, x, y, z);
    case Op::kSub: return eval_node(n.a, x, y, z) - eval_node(n.b, x, y, z);
    case Op::kMul: return eval_node(n.a, x, y, z) * eval_node(n.b, x, y, z);
    case Op::kDiv: return eval_node(n.a, x, y, z) / eval_node(n.b, x, y, z);
    case Op::kPow: return std::pow(eval_node(n.a, x, y, z), eval_node(n.b, x, y, z));
    case Op::kNeg: return -eval_node(n.a, x, y, z);
    case Op::kSin: return std::sin(eval_node(n.a, x, y, z));
    case Op::kCos: return std::cos(eval_node(n.a, x, y, z));
    case Op::kTan: return std::tan(eval_node(n.a, x, y, z));
    case Op::kAsin: return std::asin(eval_node(n.a, x, y, z));
    case Op::kAcos: return std::acos(eval_node(n.a, x, y, z));
    case Op::kAtan: return std::atan(eval_node(n.a, x, y, z));
    case Op::kExp: return std::exp(eval_node(n.a, x, y, z));
    case Op::kLn: return std::log(eval_node(n.a, x, y, z));
    case Op::kSqrt: return std::sqrt(eval_node(n.a, x, y, z));
    case Op::kAbs: return std::fabs(eval_node(n.a, x, y, z));
  }
  return std::nan("");
}

double Expr::eval(double x, double y, double z) const noexcept {
  return eval_node(root_, x, y, z);
}

}  // namespace chebnet
