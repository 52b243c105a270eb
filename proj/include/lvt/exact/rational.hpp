#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace lvt {

/// Arbitrary-precision integer (GMP).
using Integer = mpz_class;

/// Arbitrary-precision rational. Every value produced through the helpers
/// below is canonical: gcd(num, den) = 1 and den >= 1.
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws ErrorCode::ZeroDenominator if den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "p/q", "p", decimals "1.25", "-0.5" and scientific "1e-3".
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Always "p/q", with q >= 1 (integers print as "p/1").
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
Rational abs(const Rational& x);
Integer abs(const Integer& x);
Rational pow(const Rational& base, long exponent);
Integer pow(const Integer& base, unsigned long exponent);

/// 2^e as an exact rational (e may be negative).
Rational pow2(long e);

/// Number of bits of |n| (0 for n == 0).
std::size_t bit_length(const Integer& n);

/// Dyadic outward rounding: the result is m / 2^k with |m| < 2^(bits+1) and
/// round_down(x) <= x <= round_up(x). Used to keep interval endpoints small.
Rational round_down_dyadic(const Rational& x, unsigned bits);
Rational round_up_dyadic(const Rational& x, unsigned bits);

/// Smallest power of two that is >= |x| (as exponent); x must be nonzero.
long ceil_log2(const Rational& x);

/// Floor/ceiling of x on the grid 1/2^grid_bits.
Rational floor_to_grid(const Rational& x, unsigned grid_bits);
Rational ceil_to_grid(const Rational& x, unsigned grid_bits);

inline int sign(const Rational& x) { return sgn(x); }
inline int sign(const Integer& x) { return sgn(x); }

}  // namespace lvt
