#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lvt/exact/error.hpp"
#include "lvt/exact/interval.hpp"
#include "lvt/exact/rational.hpp"

namespace lvt {

/// Dense univariate polynomial, coefficients in ascending degree. Trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients and
/// degree -1.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(const Coeff& value) { return Polynomial(std::vector<Coeff>{value}); }
  static Polynomial monomial(const Coeff& value, std::size_t degree) {
    std::vector<Coeff> c(degree + 1, Coeff(0));
    c[degree] = value;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Coeff>& coefficients() const { return c_; }
  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const Coeff& leading() const { return c_.back(); }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
  }

  /// Coefficient reversal x^deg * p(1/x).
  Polynomial reversed() const {
    std::vector<Coeff> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> r(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Coeff> r(a.c_);
    for (auto& x : r) x = -x;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Coeff& s, const Polynomial& a) {
    std::vector<Coeff> r(a.c_);
    for (auto& x : r) x *= s;
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// Positive gcd of the coefficients (0 for the zero polynomial).
Integer content(const IntPolynomial& p);
/// Content 1, positive leading coefficient. Throws ZeroPolynomial.
IntPolynomial primitive_part(const IntPolynomial& p);
bool is_primitive(const IntPolynomial& p);
/// Naive height: max |coefficient|.
Integer height(const IntPolynomial& p);

RatPolynomial to_rational(const IntPolynomial& p);
/// Clears denominators and returns the primitive part. Throws ZeroPolynomial.
IntPolynomial primitive_integer(const RatPolynomial& p);

/// Euclidean division over Q. Throws ZeroPolynomial for b == 0.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
/// Monic gcd over Q (zero if both are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);
/// Primitive gcd of integer polynomials.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
/// True when b divides a in Q[x].
bool divides(const IntPolynomial& b, const IntPolynomial& a);
/// p / gcd(p, p'), made primitive.
IntPolynomial squarefree_part(const IntPolynomial& p);
bool is_squarefree(const IntPolynomial& p);

Rational evaluate(const IntPolynomial& p, const Rational& x);
Rational evaluate(const RatPolynomial& p, const Rational& x);
/// Sign of p(x) using homogenised integer arithmetic (no rational normalisation).
int sign_at(const IntPolynomial& p, const Rational& x);
/// Horner enclosure of p over an interval.
RationalInterval evaluate(const IntPolynomial& p, const RationalInterval& x);
RationalInterval evaluate(const RatPolynomial& p, const RationalInterval& x);

/// "[-2,0,1]" <-> x^2 - 2 (ascending decimal coefficients).
IntPolynomial parse_polynomial(std::string_view text);
std::string to_string(const IntPolynomial& p);

}  // namespace lvt
