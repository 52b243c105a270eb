#pragma once

#include "lvt/exact/interval.hpp"
#include "lvt/exact/rational.hpp"

namespace lvt {

/// Certified enclosure of log2(n) for n >= 1, with width about 2^-precision.
/// Computed by repeated squaring of the leading mantissa bits with directed
/// rounding (lower chain rounds down, upper chain rounds up), so only integer
/// arithmetic is involved.
RationalInterval log2_enclosure(const Integer& n, unsigned precision = 64);
/// log2(x) for x > 0.
RationalInterval log2_enclosure(const Rational& x, unsigned precision = 64);
/// Hull of log2 over a positive interval.
RationalInterval log2_enclosure(const RationalInterval& x, unsigned precision = 64);

/// Encloses -log(g) / log(base) for every g in the positive interval `gap`,
/// rounded outward to the grid 1/2^grid_bits. base must be >= 2.
RationalInterval neg_log_ratio(const RationalInterval& gap, const Integer& base, unsigned grid_bits = 24);

/// Exact decision of a <= b^e for integers a >= 1, b >= 1 and rational e >= 0.
/// Log enclosures settle almost every instance; ties fall back to the exact
/// power comparison a^den(e) <= b^num(e). Raises ComparisonUndecided only when
/// that fallback would exceed max_bits.
bool power_le(const Integer& a, const Integer& b, const Rational& e, std::size_t max_bits = std::size_t{1} << 31);

/// Exact test x <= base^(-t), i.e. x^den(t) * base^num(t) <= 1, for x > 0 and
/// rational t >= 0. Only meant for operands of moderate size.
bool le_neg_power(const Rational& x, const Integer& base, const Rational& t);

}  // namespace lvt
