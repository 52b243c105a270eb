#include "lvt/exact/interval.hpp"

#include <algorithm>
#include <array>

#include "lvt/exact/error.hpp"

namespace lvt {

RationalInterval::RationalInterval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw Error(ErrorCode::InvalidArgument, "interval with lo > hi");
}

Rational RationalInterval::magnitude() const { return std::max(abs(lo_), abs(hi_)); }

Rational RationalInterval::mignitude() const {
  if (contains_zero()) return Rational(0);
  return std::min(abs(lo_), abs(hi_));
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  if (a.is_point() && b.is_point()) return RationalInterval(Rational(a.lo_ * b.lo_));
  if (sgn(a.lo_) >= 0 && sgn(b.lo_) >= 0) return {a.lo_ * b.lo_, a.hi_ * b.hi_};
  std::array<Rational, 4> p{a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  return {*mn, *mx};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
  if (b.contains_zero())
    throw Error(ErrorCode::DivisionByIntervalContainingZero, "divisor interval " + to_string(b) + " contains 0");
  return a * RationalInterval(Rational(1 / b.hi_), Rational(1 / b.lo_));
}

RationalInterval pow(const RationalInterval& x, long n) {
  if (n < 0) return RationalInterval(Rational(1)) / pow(x, -n);
  if (n == 0) return RationalInterval(Rational(1));
  Rational lo_n = pow(x.lo(), n);
  Rational hi_n = pow(x.hi(), n);
  if (n % 2 == 1) return {lo_n, hi_n};
  if (sgn(x.lo()) >= 0) return {lo_n, hi_n};
  if (sgn(x.hi()) <= 0) return {hi_n, lo_n};
  return {Rational(0), std::max(lo_n, hi_n)};
}

RationalInterval abs(const RationalInterval& x) {
  if (sgn(x.lo()) >= 0) return x;
  if (sgn(x.hi()) <= 0) return -x;
  return {Rational(0), x.magnitude()};
}

RationalInterval hull(const RationalInterval& a, const RationalInterval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

RationalInterval intersect(const RationalInterval& a, const RationalInterval& b) {
  if (!a.intersects(b)) throw Error(ErrorCode::InvalidArgument, "intersection of disjoint intervals");
  return {std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

RationalInterval round_outward(const RationalInterval& x, unsigned bits) {
  return {round_down_dyadic(x.lo(), bits), round_up_dyadic(x.hi(), bits)};
}

std::string to_string(const RationalInterval& x) {
  return "[" + to_string(x.lo()) + ", " + to_string(x.hi()) + "]";
}

}  // namespace lvt
