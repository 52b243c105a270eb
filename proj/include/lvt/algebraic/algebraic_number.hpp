#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lvt/algebraic/number_field.hpp"

namespace lvt {

/// Real algebraic number: primitive irreducible minimal polynomial with
/// positive leading coefficient, plus an interval isolating the designated
/// root. Rational numbers carry a point interval.
struct AlgebraicNumber {
  IntPolynomial min_poly;
  RationalInterval iso;
  int degree = 0;
  Integer height;

  static AlgebraicNumber from_rational(const Rational& value);
  /// `poly` must be irreducible; it is made primitive here. Throws
  /// InvalidArgument unless iso holds exactly one root.
  static AlgebraicNumber from_root(const IntPolynomial& poly, const RationalInterval& iso);

  bool is_rational() const { return degree == 1; }
  /// Only for degree 1.
  Rational rational_value() const;
};

/// Interval of width <= width containing the number.
RationalInterval real_enclosure(const AlgebraicNumber& a, const Rational& width);

/// Exact equality: same minimal polynomial and the isolating intervals share
/// the root.
bool same_number(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// 1/a via reversal of the minimal polynomial. Throws ZeroElement for a = 0.
AlgebraicNumber reciprocal(const AlgebraicNumber& a);

/// Coefficients c_0..c_{n-1}, 1 of a dependency sum c_i v_i = 0 where v_n is
/// the last vector, if v_n lies in the span of the others. The earlier vectors
/// must be linearly independent.
std::optional<std::vector<Rational>> linear_dependency(const std::vector<std::vector<Rational>>& vectors);

/// Minimal polynomial of e(theta): the least d with 1, e, ..., e^d linearly
/// dependent over Q, denominators cleared, root chosen by the embedding.
AlgebraicNumber minimal_polynomial(const FieldElement& e);

/// deg of e over Q without computing the isolating interval.
int element_degree(const FieldElement& e);

std::string to_string(const AlgebraicNumber& a);

}  // namespace lvt
