#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace amspace {

/// Immutable expression tree in the single variable r.
///
/// Nodes are shared, so copying an Expr is cheap. Parameters are bound to
/// their values when the tree is built; the name is kept for printing.
class Expr {
public:
  enum class Kind {
    Constant,
    Variable,
    Parameter,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Neg,
    Sin,
    Cos,
    Exp,
    Ln,
    Sqrt,
  };

  static Expr constant(double value);
  static Expr variable();
  static Expr parameter(std::string name, double value);

  // Builders fold constant operands and drop additive zeros and
  // multiplicative ones. No other rewriting happens.
  static Expr add(Expr a, Expr b);
  static Expr sub(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr div(Expr a, Expr b);
  static Expr pow(Expr base, double exponent);
  static Expr neg(Expr a);
  static Expr apply(Kind function, Expr a);

  Kind kind() const noexcept;
  /// Value of a Constant or Parameter node; the exponent of a Pow node.
  double value() const noexcept;
  /// Name of a Parameter node, empty otherwise.
  const std::string& name() const noexcept;
  const Expr& lhs() const;
  const Expr& rhs() const;

  bool is_constant() const noexcept { return kind() == Kind::Constant; }
  bool depends_on_r() const noexcept;

  /// Throws EvaluationDomainError when r is outside the domain of some
  /// subexpression or the result is not finite.
  double eval(double r) const;

  /// d/dr by the usual rules.
  Expr derivative() const;

  std::string to_string() const;

private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Parses `source` per the force-law grammar
///
///     expr   := term (('+'|'-') term)*
///     term   := factor (('*'|'/') factor)*
///     factor := ('-')? base ('^' exponent)?
///     base   := number | 'r' | ident | '(' expr ')' | func '(' expr ')'
///     func   := 'sin' | 'cos' | 'exp' | 'ln' | 'sqrt'
///
/// An exponent is a signed number, a bound parameter name, or a
/// parenthesized expression free of r. Throws ParseError or
/// UnboundParameterError.
Expr parse_expr(std::string_view source, const std::map<std::string, double>& params);

}  // namespace amspace
