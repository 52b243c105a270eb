#pragma once

#include <string>

#include "lvt/exact/rational.hpp"

namespace lvt {

/// Closed interval [lo, hi] with exact rational endpoints. Arithmetic returns
/// the exact image hull, so enclosures never lose soundness to rounding.
class RationalInterval {
 public:
  RationalInterval() = default;
  explicit RationalInterval(const Rational& point) : lo_(point), hi_(point) {}
  /// Throws InvalidArgument if lo > hi.
  RationalInterval(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }
  bool subset_of(const RationalInterval& other) const { return other.lo_ <= lo_ && hi_ <= other.hi_; }
  bool intersects(const RationalInterval& other) const { return !(hi_ < other.lo_ || other.hi_ < lo_); }

  /// Maximum of |x| over the interval.
  Rational magnitude() const;
  /// Minimum of |x| over the interval (0 if it straddles zero).
  Rational mignitude() const;

  RationalInterval operator-() const { return {-hi_, -lo_}; }

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
  /// Throws DivisionByIntervalContainingZero when 0 is in b.
  friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);

  friend bool operator==(const RationalInterval& a, const RationalInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_{0};
  Rational hi_{0};
};

/// Tight enclosure of x^n, including the even-power case over sign-straddling intervals.
RationalInterval pow(const RationalInterval& x, long n);
RationalInterval abs(const RationalInterval& x);
RationalInterval hull(const RationalInterval& a, const RationalInterval& b);
RationalInterval intersect(const RationalInterval& a, const RationalInterval& b);

/// Outward dyadic rounding of both endpoints; keeps enclosures compact.
RationalInterval round_outward(const RationalInterval& x, unsigned bits);

std::string to_string(const RationalInterval& x);

}  // namespace lvt
