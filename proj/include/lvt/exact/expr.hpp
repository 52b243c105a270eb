#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "lvt/exact/interval.hpp"
#include "lvt/exact/rational.hpp"

namespace lvt {

/// Immutable arithmetic expression over +, -, *, /, unary minus and integer
/// powers. Nodes are shared, so copies are cheap.
class Expr {
 public:
  enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Neg, Pow };

  static Expr constant(const Rational& value);
  static Expr variable(std::string name);
  static Expr power(const Expr& base, long exponent);

  Kind kind() const;
  const Rational& value() const;      // Constant
  const std::string& name() const;    // Variable
  Expr lhs() const;                   // binary ops, Neg, Pow
  Expr rhs() const;                   // binary ops
  long exponent() const;              // Pow

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Recursive-descent parser; accepts `^` or `**` for integer powers.
Expr parse_expr(std::string_view text);
std::string to_string(const Expr& e);

using IntervalAssignment = std::map<std::string, RationalInterval, std::less<>>;
using RationalAssignment = std::map<std::string, Rational, std::less<>>;

/// Interval image of the expression. Unknown variables raise InvalidArgument;
/// division by an interval containing zero raises DivisionByIntervalContainingZero.
RationalInterval interval_eval(const Expr& e, const IntervalAssignment& assignment);

/// Exact rational value; division by zero raises ZeroDenominator.
Rational exact_eval(const Expr& e, const RationalAssignment& assignment);

}  // namespace lvt
