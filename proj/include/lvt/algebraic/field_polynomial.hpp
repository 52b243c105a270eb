#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lvt/algebraic/number_field.hpp"

namespace lvt {

/// Polynomial in K[x], coefficients ascending, trailing zeros trimmed.
class FieldPolynomial {
 public:
  explicit FieldPolynomial(FieldPtr field);
  FieldPolynomial(FieldPtr field, std::vector<FieldElement> coefficients);
  /// Lifts an integer/rational polynomial into K[x].
  static FieldPolynomial from_rational(FieldPtr field, const RatPolynomial& p);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElement>& coefficients() const { return c_; }
  FieldElement coeff(std::size_t i) const;
  const FieldElement& leading() const { return c_.back(); }

  FieldPolynomial derivative() const;
  /// Divides through by the leading coefficient. Throws ZeroPolynomial.
  FieldPolynomial monic() const;
  /// True when every coefficient lies in Q.
  bool has_rational_coefficients() const;

  friend FieldPolynomial operator+(const FieldPolynomial& a, const FieldPolynomial& b);
  friend FieldPolynomial operator-(const FieldPolynomial& a, const FieldPolynomial& b);
  friend FieldPolynomial operator*(const FieldPolynomial& a, const FieldPolynomial& b);
  friend FieldPolynomial operator*(const FieldElement& s, const FieldPolynomial& a);
  friend bool operator==(const FieldPolynomial& a, const FieldPolynomial& b);

 private:
  void trim();
  FieldPtr field_;
  std::vector<FieldElement> c_;
};

/// Euclidean division in K[x]. Throws ZeroPolynomial for b == 0.
std::pair<FieldPolynomial, FieldPolynomial> divmod(const FieldPolynomial& a, const FieldPolynomial& b);
/// Monic gcd (zero when both inputs are zero).
FieldPolynomial gcd(const FieldPolynomial& a, const FieldPolynomial& b);

FieldElement evaluate(const FieldPolynomial& p, const FieldElement& x);
FieldElement evaluate(const FieldPolynomial& p, const Rational& x);
/// Enclosure of p over a real interval, each coefficient enclosed to
/// `coeff_width` first.
RationalInterval evaluate(const FieldPolynomial& p, const RationalInterval& x, const Rational& coeff_width);

std::string to_string(const FieldPolynomial& p);

}  // namespace lvt
