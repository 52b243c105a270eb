#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lvt/algebraic/algebraic_number.hpp"
#include "lvt/algebraic/field_polynomial.hpp"
#include "lvt/exact/execution.hpp"

namespace lvt {

/// F = P/Q over K with gcd(P, Q) = 1 in K[x] (Q monic after reduction is
/// not enforced; the common factor is divided out) and F non-constant.
class RationalMap {
 public:
  /// Removes the K[x] gcd. Throws ZeroDenominator for Q = 0 and ConstantMap
  /// when the reduced map does not depend on x.
  static RationalMap normalize(FieldPolynomial P, FieldPolynomial Q);

  const FieldPolynomial& numerator() const { return P_; }
  const FieldPolynomial& denominator() const { return Q_; }
  const FieldPtr& field() const { return P_.field(); }
  int field_degree() const { return field()->degree(); }

  /// F(alpha) in K. Throws PoleAtAlpha when Q(alpha) = 0.
  FieldElement eval_element(const Rational& alpha) const;

 private:
  RationalMap(FieldPolynomial P, FieldPolynomial Q) : P_(std::move(P)), Q_(std::move(Q)) {}
  FieldPolynomial P_, Q_;
};

/// Compiles an expression in x and theta ("theta*x", "(theta*x+1)/(x+2)")
/// into a normalized map over K.
RationalMap compile_map(std::string_view expression, const FieldPtr& K);

/// Map from coefficient lists: each coefficient is a length-m rational
/// vector in the power basis of K.
RationalMap map_from_coordinates(const std::vector<std::vector<Rational>>& num, const std::vector<std::vector<Rational>>& den,
                                 const FieldPtr& K);

/// gamma = F(alpha) as a real algebraic number (exact degree and height).
AlgebraicNumber eval_at_rational(const RationalMap& F, const Rational& alpha);

struct PrimitivityScan {
  std::vector<Rational> exceptions;  // deg F(alpha) < m, ascending
  std::vector<Rational> poles;       // Q(alpha) = 0, ascending
  std::size_t scanned = 0;
};

/// Every rational alpha with max(|p|, q) <= height_cap.
PrimitivityScan primitivity_scan(const RationalMap& F, const Integer& height_cap, Execution exec = Execution::Parallel);

/// Rational upper bound on |F'| over I. Throws PoleInInterval if Q cannot
/// be certified nonzero on I.
Rational derivative_bound(const RationalMap& F, const RationalInterval& I);

/// Interval containing F(I). Coefficients of K are enclosed tightly enough
/// for the width of I; wide intervals are subdivided. Throws PoleInInterval.
RationalInterval map_enclosure(const RationalMap& F, const RationalInterval& I);

}  // namespace lvt
