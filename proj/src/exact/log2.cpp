#include "lvt/exact/log2.hpp"

#include "lvt/exact/error.hpp"

namespace lvt {

namespace {

// log2(z) for z = mantissa / 2^(bits-1) in [1, 2), fraction bits accumulated
// into an integer with `frac` bits. round_up selects the upper chain.
Integer log2_mantissa_bits(Integer z, unsigned bits, unsigned frac, bool round_up) {
  const Integer two_pow_bits = Integer(1) << bits;  // represents 2.0
  Integer acc = 0;
  for (unsigned j = 1; j <= frac; ++j) {
    Integer sq = z * z;
    if (round_up)
      mpz_cdiv_q_2exp(z.get_mpz_t(), sq.get_mpz_t(), bits - 1);
    else
      mpz_fdiv_q_2exp(z.get_mpz_t(), sq.get_mpz_t(), bits - 1);
    while (z >= two_pow_bits) {
      if (round_up)
        mpz_cdiv_q_2exp(z.get_mpz_t(), z.get_mpz_t(), 1);
      else
        mpz_fdiv_q_2exp(z.get_mpz_t(), z.get_mpz_t(), 1);
      acc += Integer(1) << (frac - j);
    }
  }
  return acc;
}

}  // namespace

RationalInterval log2_enclosure(const Integer& n, unsigned precision) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "log2 of a non-positive integer");
  const unsigned bits = precision + 8;
  const unsigned frac = precision;
  const long b = static_cast<long>(bit_length(n));
  Integer lo_m, hi_m;
  if (b <= static_cast<long>(bits)) {
    lo_m = n << static_cast<unsigned>(static_cast<long>(bits) - b);
    hi_m = lo_m;
  } else {
    mpz_fdiv_q_2exp(lo_m.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(b - static_cast<long>(bits)));
    Integer back = lo_m << static_cast<unsigned>(b - static_cast<long>(bits));
    hi_m = back == n ? lo_m : Integer(lo_m + 1);
  }
  // hi_m may reach 2^bits (= 2.0); its log2 is then exactly 1 fraction-wise.
  Rational lo = Rational(b - 1) + Rational(log2_mantissa_bits(lo_m, bits, frac, false)) * pow2(-static_cast<long>(frac));
  Rational hi;
  if (hi_m == (Integer(1) << bits)) {
    hi = Rational(b);
  } else {
    hi = Rational(b - 1) + Rational(log2_mantissa_bits(hi_m, bits, frac, true) + 1) * pow2(-static_cast<long>(frac));
  }
  if (lo_m == hi_m && lo_m == (Integer(1) << (bits - 1))) return RationalInterval(Rational(b - 1));
  return {lo, hi};
}

RationalInterval log2_enclosure(const Rational& x, unsigned precision) {
  if (sgn(x) <= 0) throw Error(ErrorCode::InvalidArgument, "log2 of a non-positive rational");
  return log2_enclosure(Integer(x.get_num()), precision) - log2_enclosure(Integer(x.get_den()), precision);
}

RationalInterval log2_enclosure(const RationalInterval& x, unsigned precision) {
  if (sgn(x.lo()) <= 0) throw Error(ErrorCode::InvalidArgument, "log2 of an interval reaching zero");
  if (x.is_point()) return log2_enclosure(x.lo(), precision);
  return {log2_enclosure(x.lo(), precision).lo(), log2_enclosure(x.hi(), precision).hi()};
}

RationalInterval neg_log_ratio(const RationalInterval& gap, const Integer& base, unsigned grid_bits) {
  if (base < 2) throw Error(ErrorCode::InvalidArgument, "logarithm base must be at least 2");
  const unsigned precision = grid_bits + 40;
  RationalInterval lg = log2_enclosure(round_outward(gap, precision + 16), precision);
  RationalInterval lb = log2_enclosure(base, precision);
  RationalInterval q = (-lg) / lb;
  return {floor_to_grid(q.lo(), grid_bits), ceil_to_grid(q.hi(), grid_bits)};
}

bool power_le(const Integer& a, const Integer& b, const Rational& e, std::size_t max_bits) {
  if (a < 1 || b < 1 || sgn(e) < 0) throw Error(ErrorCode::InvalidArgument, "power_le expects a, b >= 1 and e >= 0");
  if (a == 1) return true;
  if (b == 1 || e == 0) return false;
  for (unsigned precision = 64; precision <= 1024; precision *= 2) {
    RationalInterval ratio = log2_enclosure(a, precision) / log2_enclosure(b, precision);
    if (ratio.hi() <= e) return true;
    if (ratio.lo() > e) return false;
  }
  const Integer& num = e.get_num();
  const Integer& den = e.get_den();
  double lhs_bits = static_cast<double>(bit_length(a)) * den.get_d();
  double rhs_bits = static_cast<double>(bit_length(b)) * num.get_d();
  if (lhs_bits > static_cast<double>(max_bits) || rhs_bits > static_cast<double>(max_bits))
    throw Error(ErrorCode::ComparisonUndecided, "power comparison too large to settle exactly");
  return pow(a, den.get_ui()) <= pow(b, num.get_ui());
}

bool le_neg_power(const Rational& x, const Integer& base, const Rational& t) {
  if (sgn(x) <= 0 || base < 1 || sgn(t) < 0) throw Error(ErrorCode::InvalidArgument, "le_neg_power domain");
  unsigned long den = t.get_den().get_ui();
  unsigned long num = t.get_num().get_ui();
  Integer lhs = pow(Integer(x.get_num()), den) * pow(base, num);
  Integer rhs = pow(Integer(x.get_den()), den);
  return lhs <= rhs;
}

}  // namespace lvt
