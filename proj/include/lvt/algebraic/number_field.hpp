#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "lvt/exact/interval.hpp"
#include "lvt/exact/polynomial.hpp"

namespace lvt {

class FieldElement;

/// K = Q(theta) with a designated real embedding: theta is the unique root of
/// the defining polynomial inside `embedding()`. Construct through create();
/// elements keep the field alive through a shared pointer.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Verifies irreducibility (NotIrreducible otherwise) and that the hint
  /// isolates exactly one real root (InvalidArgument otherwise).
  static std::shared_ptr<const NumberField> create(const IntPolynomial& defining, const RationalInterval& embedding_hint);
  /// Q itself, presented as Q[x]/(x) with theta = 0.
  static std::shared_ptr<const NumberField> rationals();
  /// x^m - p with the positive real root, the fields used by the demos.
  static std::shared_ptr<const NumberField> radical(unsigned m, const Integer& radicand);

  int degree() const { return degree_; }
  const IntPolynomial& defining_polynomial() const { return defining_; }
  const RationalInterval& embedding() const { return embedding_; }

  /// Enclosure of theta of width <= width. Enclosures come from a fixed
  /// ladder of precisions (64, 128, 256, ... bits) refined in order, so the
  /// result depends only on `width`, never on earlier calls.
  RationalInterval theta_enclosure(const Rational& width) const;

  /// Reduces an arbitrary coefficient vector modulo the defining polynomial.
  std::vector<Rational> reduce(std::vector<Rational> coeffs) const;

  /// "[-2,0,1]@[1/1,2/1]" style spec string.
  std::string to_spec() const;

  bool same_field(const NumberField& other) const;

 private:
  NumberField(IntPolynomial defining, RationalInterval embedding);

  IntPolynomial defining_;
  int degree_;
  RationalInterval embedding_;
  // theta^m in the power basis.
  std::vector<Rational> x_power_m_;
  mutable std::mutex cache_mutex_;
  mutable std::vector<RationalInterval> theta_levels_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// "[-2,0,1]@[1,2]" -> Q(sqrt 2) with the root in [1,2]. "root:m:p" is
/// shorthand for x^m - p with the positive root; "Q" is the rationals.
FieldPtr parse_field_spec(std::string_view text);

/// Element of K as coordinates in the power basis 1, theta, ..., theta^(m-1).
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::vector<Rational> coords);
  static FieldElement from_rational(FieldPtr field, const Rational& value);
  static FieldElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const NumberField& field_ref() const { return *field_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Coordinate 0; only meaningful when is_rational().
  const Rational& rational_part() const { return coords_[0]; }

  RatPolynomial as_polynomial() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const Rational& s, const FieldElement& a);
  /// Throws ZeroElement for b == 0.
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement pow(long exponent) const;

  /// Enclosure of the real number e(theta) of width <= width.
  RationalInterval enclosure(const Rational& width) const;
  /// Exact sign of e(theta) under the embedding.
  int sign() const;

  /// Column j holds the coordinates of e * theta^j.
  std::vector<std::vector<Rational>> multiplication_matrix() const;

 private:
  FieldPtr field_;
  std::vector<Rational> coords_;
};

/// Multiplicative inverse via the extended Euclidean algorithm against the
/// defining polynomial. Throws ZeroElement.
FieldElement field_inverse(const FieldElement& e);

/// Throws FieldMismatch unless both belong to the same field.
void require_same_field(const FieldElement& a, const FieldElement& b);

std::string to_string(const FieldElement& e);

}  // namespace lvt
