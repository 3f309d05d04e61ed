#include "amspace/expr.hpp"

#include "amspace/errors.hpp"
#include "amspace/format.hpp"

#include <charconv>
#include <cmath>
#include <utility>
#include <vector>

namespace amspace {

struct Expr::Node {
  Kind kind;
  double value = 0.0;
  std::string name;
  std::vector<Expr> children;
};

namespace {

bool is_unary_function(Expr::Kind k)
{
  switch (k) {
    case Expr::Kind::Sin:
    case Expr::Kind::Cos:
    case Expr::Kind::Exp:
    case Expr::Kind::Ln:
    case Expr::Kind::Sqrt:
      return true;
    default:
      return false;
  }
}

const char* function_name(Expr::Kind k)
{
  switch (k) {
    case Expr::Kind::Sin: return "sin";
    case Expr::Kind::Cos: return "cos";
    case Expr::Kind::Exp: return "exp";
    case Expr::Kind::Ln: return "ln";
    case Expr::Kind::Sqrt: return "sqrt";
    default: return "?";
  }
}

[[noreturn]] void domain_error(const char* what, double r)
{
  throw EvaluationDomainError(std::string(what) + " at r = " + format_g17(r));
}

}  // namespace

Expr Expr::constant(double value)
{
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = value;
  return Expr(std::move(n));
}

Expr Expr::variable()
{
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  return Expr(std::move(n));
}

Expr Expr::parameter(std::string name, double value)
{
  auto n = std::make_shared<Node>();
  n->kind = Kind::Parameter;
  n->value = value;
  n->name = std::move(name);
  return Expr(std::move(n));
}

namespace {

bool is_const(const Expr& e, double v) { return e.is_constant() && e.value() == v; }

// Folding only happens when the result is finite, so undefined constant
// subexpressions still surface as evaluation-domain errors.
bool fold(double v, double& out)
{
  if (!std::isfinite(v)) return false;
  out = v;
  return true;
}

}  // namespace

Expr Expr::add(Expr a, Expr b)
{
  double v;
  if (a.is_constant() && b.is_constant() && fold(a.value() + b.value(), v)) return constant(v);
  if (is_const(a, 0.0)) return b;
  if (is_const(b, 0.0)) return a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Add;
  n->children = {std::move(a), std::move(b)};
  return Expr(std::move(n));
}

Expr Expr::sub(Expr a, Expr b)
{
  double v;
  if (a.is_constant() && b.is_constant() && fold(a.value() - b.value(), v)) return constant(v);
  if (is_const(b, 0.0)) return a;
  if (is_const(a, 0.0)) return neg(std::move(b));
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sub;
  n->children = {std::move(a), std::move(b)};
  return Expr(std::move(n));
}

Expr Expr::mul(Expr a, Expr b)
{
  double v;
  if (a.is_constant() && b.is_constant() && fold(a.value() * b.value(), v)) return constant(v);
  if (is_const(a, 0.0) || is_const(b, 0.0)) return constant(0.0);
  if (is_const(a, 1.0)) return b;
  if (is_const(b, 1.0)) return a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Mul;
  n->children = {std::move(a), std::move(b)};
  return Expr(std::move(n));
}

Expr Expr::div(Expr a, Expr b)
{
  double v;
  if (a.is_constant() && b.is_constant() && b.value() != 0.0 && fold(a.value() / b.value(), v)) {
    return constant(v);
  }
  if (is_const(b, 1.0)) return a;
  if (is_const(a, 0.0) && !is_const(b, 0.0)) return constant(0.0);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Div;
  n->children = {std::move(a), std::move(b)};
  return Expr(std::move(n));
}

Expr Expr::pow(Expr base, double exponent)
{
  double v;
  if (base.is_constant() && fold(std::pow(base.value(), exponent), v)) return constant(v);
  if (exponent == 1.0) return base;
  if (exponent == 0.0) return constant(1.0);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->value = exponent;
  n->children = {std::move(base)};
  return Expr(std::move(n));
}

Expr Expr::neg(Expr a)
{
  if (a.is_constant()) return constant(-a.value());
  if (a.kind() == Kind::Neg) return a.lhs();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->children = {std::move(a)};
  return Expr(std::move(n));
}

Expr Expr::apply(Kind function, Expr a)
{
  if (a.is_constant()) {
    const double x = a.value();
    double v = NAN;
    switch (function) {
      case Kind::Sin: v = std::sin(x); break;
      case Kind::Cos: v = std::cos(x); break;
      case Kind::Exp: v = std::exp(x); break;
      case Kind::Ln: v = x > 0.0 ? std::log(x) : NAN; break;
      case Kind::Sqrt: v = x >= 0.0 ? std::sqrt(x) : NAN; break;
      default: break;
    }
    double folded;
    if (fold(v, folded)) return constant(folded);
  }
  auto n = std::make_shared<Node>();
  n->kind = function;
  n->children = {std::move(a)};
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }
double Expr::value() const noexcept { return node_->value; }
const std::string& Expr::name() const noexcept { return node_->name; }

const Expr& Expr::lhs() const { return node_->children.at(0); }
const Expr& Expr::rhs() const { return node_->children.at(1); }

bool Expr::depends_on_r() const noexcept
{
  switch (kind()) {
    case Kind::Constant:
    case Kind::Parameter:
      return false;
    case Kind::Variable:
      return true;
    default:
      for (const Expr& c : node_->children) {
        if (c.depends_on_r()) return true;
      }
      return false;
  }
}

double Expr::eval(double r) const
{
  const Node& n = *node_;
  double out = 0.0;
  switch (n.kind) {
    case Kind::Constant:
    case Kind::Parameter:
      return n.value;
    case Kind::Variable:
      return r;
    case Kind::Add: out = lhs().eval(r) + rhs().eval(r); break;
    case Kind::Sub: out = lhs().eval(r) - rhs().eval(r); break;
    case Kind::Mul: out = lhs().eval(r) * rhs().eval(r); break;
    case Kind::Div: {
      const double den = rhs().eval(r);
      if (den == 0.0) domain_error("division by zero", r);
      out = lhs().eval(r) / den;
      break;
    }
    case Kind::Pow: {
      const double base = lhs().eval(r);
      if (base < 0.0 && std::trunc(n.value) != n.value) domain_error("negative base with fractional exponent", r);
      if (base == 0.0 && n.value < 0.0) domain_error("zero base with negative exponent", r);
      out = std::pow(base, n.value);
      break;
    }
    case Kind::Neg: return -lhs().eval(r);
    case Kind::Sin: out = std::sin(lhs().eval(r)); break;
    case Kind::Cos: out = std::cos(lhs().eval(r)); break;
    case Kind::Exp: out = std::exp(lhs().eval(r)); break;
    case Kind::Ln: {
      const double x = lhs().eval(r);
      if (!(x > 0.0)) domain_error("ln of non-positive value", r);
      out = std::log(x);
      break;
    }
    case Kind::Sqrt: {
      const double x = lhs().eval(r);
      if (x < 0.0) domain_error("sqrt of negative value", r);
      out = std::sqrt(x);
      break;
    }
  }
  if (!std::isfinite(out)) domain_error("non-finite value", r);
  return out;
}

Expr Expr::derivative() const
{
  switch (kind()) {
    case Kind::Constant:
    case Kind::Parameter:
      return constant(0.0);
    case Kind::Variable:
      return constant(1.0);
    case Kind::Add:
      return add(lhs().derivative(), rhs().derivative());
    case Kind::Sub:
      return sub(lhs().derivative(), rhs().derivative());
    case Kind::Mul:
      return add(mul(lhs().derivative(), rhs()), mul(lhs(), rhs().derivative()));
    case Kind::Div:
      // (u/v)' = (u'v - uv') / v^2
      return div(sub(mul(lhs().derivative(), rhs()), mul(lhs(), rhs().derivative())), pow(rhs(), 2.0));
    case Kind::Pow: {
      const double c = value();
      return mul(mul(constant(c), pow(lhs(), c - 1.0)), lhs().derivative());
    }
    case Kind::Neg:
      return neg(lhs().derivative());
    case Kind::Sin:
      return mul(apply(Kind::Cos, lhs()), lhs().derivative());
    case Kind::Cos:
      return neg(mul(apply(Kind::Sin, lhs()), lhs().derivative()));
    case Kind::Exp:
      return mul(*this, lhs().derivative());
    case Kind::Ln:
      return div(lhs().derivative(), lhs());
    case Kind::Sqrt:
      return div(lhs().derivative(), mul(constant(2.0), *this));
  }
  return constant(0.0);
}

std::string Expr::to_string() const
{
  switch (kind()) {
    case Kind::Constant: {
      const std::string s = format_g17(value());
      return value() < 0.0 ? "(" + s + ")" : s;
    }
    case Kind::Variable: return "r";
    case Kind::Parameter: return name();
    case Kind::Add: return "(" + lhs().to_string() + " + " + rhs().to_string() + ")";
    case Kind::Sub: return "(" + lhs().to_string() + " - " + rhs().to_string() + ")";
    case Kind::Mul: return "(" + lhs().to_string() + " * " + rhs().to_string() + ")";
    case Kind::Div: return "(" + lhs().to_string() + " / " + rhs().to_string() + ")";
    case Kind::Pow: return "(" + lhs().to_string() + ")^" + format_g17(value());
    case Kind::Neg: return "(-" + lhs().to_string() + ")";
    default:
      if (is_unary_function(kind())) return std::string(function_name(kind())) + "(" + lhs().to_string() + ")";
      return "?";
  }
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
  Parser(std::string_view src, const std::map<std::string, double>& params) : src_(src), params_(params) {}

  Expr parse()
  {
    Expr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws()
  {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(char c)
  {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  char peek()
  {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  static bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
  static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
  static bool digit(char c) { return c >= '0' && c <= '9'; }

  std::string identifier()
  {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  double number()
  {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && digit(src_[pos_])) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && digit(src_[pos_])) ++pos_;
    }
    if (pos_ == start || (pos_ == start + 1 && src_[start] == '.')) {
      pos_ = start;
      fail("expected number");
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && digit(src_[p])) {
        pos_ = p;
        while (pos_ < src_.size() && digit(src_[pos_])) ++pos_;
      }
    }
    double v = 0.0;
    const auto res = std::from_chars(src_.data() + start, src_.data() + pos_, v);
    if (res.ec != std::errc() || res.ptr != src_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return v;
  }

  Expr expr()
  {
    Expr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::add(lhs, term());
      } else if (accept('-')) {
        lhs = Expr::sub(lhs, term());
      } else {
        return lhs;
      }
    }
  }

  Expr term()
  {
    Expr lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::mul(lhs, factor());
      } else if (accept('/')) {
        lhs = Expr::div(lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  Expr factor()
  {
    const bool negate = accept('-');
    Expr b = base();
    if (accept('^')) b = Expr::pow(b, exponent());
    return negate ? Expr::neg(b) : b;
  }

  double exponent()
  {
    const char c = peek();
    if (c == '-' || c == '+') {
      ++pos_;
      const double v = number();
      return c == '-' ? -v : v;
    }
    if (digit(c) || c == '.') return number();
    if (c == '(') {
      const std::size_t start = pos_;
      ++pos_;
      Expr e = expr();
      expect(')');
      if (e.depends_on_r()) {
        pos_ = start;
        fail("non-constant exponent in power");
      }
      return e.eval(1.0);
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      const std::string id = identifier();
      if (id == "r") {
        pos_ = start;
        fail("non-constant exponent in power");
      }
      const auto it = params_.find(id);
      if (it == params_.end()) throw UnboundParameterError(id);
      return it->second;
    }
    fail("expected exponent");
  }

  Expr base()
  {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (digit(c) || c == '.') return Expr::constant(number());
    if (ident_start(c)) {
      const std::size_t start = pos_;
      const std::string id = identifier();
      if (id == "r") return Expr::variable();
      static const std::pair<const char*, Expr::Kind> functions[] = {
          {"sin", Expr::Kind::Sin}, {"cos", Expr::Kind::Cos}, {"exp", Expr::Kind::Exp},
          {"ln", Expr::Kind::Ln},   {"sqrt", Expr::Kind::Sqrt},
      };
      for (const auto& [fname, kind] : functions) {
        if (id == fname) {
          if (peek() != '(') fail(std::string("expected '(' after ") + fname);
          ++pos_;
          Expr arg = expr();
          expect(')');
          return Expr::apply(kind, arg);
        }
      }
      const auto it = params_.find(id);
      if (it == params_.end()) {
        pos_ = start;
        throw UnboundParameterError(id);
      }
      return Expr::parameter(id, it->second);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  const std::map<std::string, double>& params_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view source, const std::map<std::string, double>& params)
{
  return Parser(source, params).parse();
}

}  // namespace amspace
