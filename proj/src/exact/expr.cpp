#include "lvt/exact/expr.hpp"

#include <cctype>
#include <variant>

#include "lvt/exact/error.hpp"

namespace lvt {

struct Expr::Node {
  Kind kind;
  Rational value;
  std::string name;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  long exponent = 0;
};

namespace {

std::shared_ptr<const Expr::Node> make_node(Expr::Node node) {
  return std::make_shared<const Expr::Node>(std::move(node));
}

}  // namespace

Expr Expr::constant(const Rational& value) { return Expr(make_node({Kind::Constant, value, {}, {}, {}, 0})); }

Expr Expr::variable(std::string name) { return Expr(make_node({Kind::Variable, {}, std::move(name), {}, {}, 0})); }

Expr Expr::power(const Expr& base, long exponent) {
  return Expr(make_node({Kind::Pow, {}, {}, base.node_, {}, exponent}));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const Rational& Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
long Expr::exponent() const { return node_->exponent; }

Expr Expr::lhs() const { return Expr(node_->lhs); }
Expr Expr::rhs() const { return Expr(node_->rhs); }

Expr operator+(const Expr& a, const Expr& b) { return Expr(make_node({Expr::Kind::Add, {}, {}, a.node_, b.node_, 0})); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(make_node({Expr::Kind::Sub, {}, {}, a.node_, b.node_, 0})); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(make_node({Expr::Kind::Mul, {}, {}, a.node_, b.node_, 0})); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(make_node({Expr::Kind::Div, {}, {}, a.node_, b.node_, 0})); }
Expr operator-(const Expr& a) { return Expr(make_node({Expr::Kind::Neg, {}, {}, a.node_, {}, 0})); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Expr expression() {
    Expr e = term();
    for (;;) {
      if (accept("+"))
        e = e + term();
      else if (accept("-"))
        e = e - term();
      else
        return e;
    }
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      skip_space();
      if (text_.substr(pos_, 2) == "**") return e;
      if (accept("*"))
        e = e * unary();
      else if (accept("/"))
        e = e / unary();
      else
        return e;
    }
  }

  Expr unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (accept("^") || accept("**")) {
      bool parens = accept("(");
      bool negative = accept("-");
      if (!negative) accept("+");
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      long n = std::stol(std::string(text_.substr(start, pos_ - start)));
      if (parens && !accept(")")) fail("expected ')'");
      return Expr::power(base, negative ? -n : n);
    }
    return base;
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      if (!accept(")")) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
      return Expr::constant(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      return Expr::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class T, class Leaf>
T fold(const Expr& e, const Leaf& leaf) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
    case Expr::Kind::Variable:
      return leaf(e);
    case Expr::Kind::Add: {
      Expr l = e.lhs(), r = e.rhs();
      return fold<T>(l, leaf) + fold<T>(r, leaf);
    }
    case Expr::Kind::Sub: {
      Expr l = e.lhs(), r = e.rhs();
      return fold<T>(l, leaf) - fold<T>(r, leaf);
    }
    case Expr::Kind::Mul: {
      Expr l = e.lhs(), r = e.rhs();
      return fold<T>(l, leaf) * fold<T>(r, leaf);
    }
    case Expr::Kind::Div: {
      Expr l = e.lhs(), r = e.rhs();
      T num = fold<T>(l, leaf);
      T den = fold<T>(r, leaf);
      if constexpr (std::is_same_v<T, Rational>) {
        if (den == 0) throw Error(ErrorCode::ZeroDenominator, "division by zero");
      }
      return num / den;
    }
    case Expr::Kind::Neg: {
      Expr l = e.lhs();
      return -fold<T>(l, leaf);
    }
    case Expr::Kind::Pow: {
      Expr l = e.lhs();
      T base = fold<T>(l, leaf);
      if constexpr (std::is_same_v<T, Rational>) {
        if (base == 0 && e.exponent() < 0) throw Error(ErrorCode::ZeroDenominator, "negative power of zero");
      }
      return pow(base, e.exponent());
    }
  }
  throw Error(ErrorCode::InvalidArgument, "corrupt expression");
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Constant: return to_string(e.value());
    case Expr::Kind::Variable: return e.name();
    case Expr::Kind::Add: { Expr l = e.lhs(), r = e.rhs(); return "(" + to_string(l) + " + " + to_string(r) + ")"; }
    case Expr::Kind::Sub: { Expr l = e.lhs(), r = e.rhs(); return "(" + to_string(l) + " - " + to_string(r) + ")"; }
    case Expr::Kind::Mul: { Expr l = e.lhs(), r = e.rhs(); return "(" + to_string(l) + " * " + to_string(r) + ")"; }
    case Expr::Kind::Div: { Expr l = e.lhs(), r = e.rhs(); return "(" + to_string(l) + " / " + to_string(r) + ")"; }
    case Expr::Kind::Neg: { Expr l = e.lhs(); return "-" + to_string(l); }
    case Expr::Kind::Pow: { Expr l = e.lhs(); return to_string(l) + "^" + std::to_string(e.exponent()); }
  }
  return "?";
}

RationalInterval interval_eval(const Expr& e, const IntervalAssignment& assignment) {
  return fold<RationalInterval>(e, [&](const Expr& leaf) {
    if (leaf.kind() == Expr::Kind::Constant) return RationalInterval(leaf.value());
    auto it = assignment.find(leaf.name());
    if (it == assignment.end()) throw Error(ErrorCode::InvalidArgument, "unbound variable '" + leaf.name() + "'");
    return it->second;
  });
}

Rational exact_eval(const Expr& e, const RationalAssignment& assignment) {
  return fold<Rational>(e, [&](const Expr& leaf) {
    if (leaf.kind() == Expr::Kind::Constant) return leaf.value();
    auto it = assignment.find(leaf.name());
    if (it == assignment.end()) throw Error(ErrorCode::InvalidArgument, "unbound variable '" + leaf.name() + "'");
    return it->second;
  });
}

}  // namespace lvt
