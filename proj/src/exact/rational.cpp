#include "lvt/exact/rational.hpp"

#include <cctype>
#include <string>

#include "lvt/exact/error.hpp"

namespace lvt {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    return make_rational(num, den);
  }
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    exponent = parse_integer(text.substr(e + 1)).get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part)))
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  std::string digits = std::string(int_part) + std::string(frac_part);
  Integer num(digits.empty() ? std::string("0") : digits, 10);
  if (negative) num = -num;
  long scale = exponent - static_cast<long>(frac_part.size());
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  return scale < 0 ? make_rational(num, ten_pow) : Rational(num * ten_pow);
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational abs(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }

Integer abs(const Integer& x) { return sgn(x) < 0 ? Integer(-x) : x; }

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorCode::ZeroDenominator, "negative power of zero");
    return pow(Rational(1 / base), -exponent);
  }
  auto e = static_cast<unsigned long>(exponent);
  Rational r(pow(Integer(base.get_num()), e), pow(Integer(base.get_den()), e));
  r.canonicalize();
  return r;
}

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

std::size_t bit_length(const Integer& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

namespace {

// x = num/den; returns floor or ceil of x * 2^shift divided back by 2^shift.
Rational scaled_round(const Rational& x, long shift, bool up) {
  Integer num = x.get_num();
  Integer den = x.get_den();
  if (shift >= 0)
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(shift));
  else
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-shift));
  Integer q;
  if (up)
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  else
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Rational r = Rational(q) * pow2(-shift);
  return r;
}

}  // namespace

long ceil_log2(const Rational& x) {
  if (x == 0) throw Error(ErrorCode::InvalidArgument, "ceil_log2 of zero");
  Rational a = abs(x);
  long e = static_cast<long>(bit_length(a.get_num())) - static_cast<long>(bit_length(a.get_den()));
  while (pow2(e) < a) ++e;
  while (pow2(e - 1) >= a) --e;
  return e;
}

Rational round_down_dyadic(const Rational& x, unsigned bits) {
  if (x == 0) return x;
  if (bit_length(x.get_den()) <= 1 + 0u && bit_length(x.get_num()) <= bits) return x;
  long shift = static_cast<long>(bits) - ceil_log2(x);
  return scaled_round(x, shift, false);
}

Rational round_up_dyadic(const Rational& x, unsigned bits) {
  if (x == 0) return x;
  if (bit_length(x.get_den()) <= 1 + 0u && bit_length(x.get_num()) <= bits) return x;
  long shift = static_cast<long>(bits) - ceil_log2(x);
  return scaled_round(x, shift, true);
}

Rational floor_to_grid(const Rational& x, unsigned grid_bits) {
  return scaled_round(x, static_cast<long>(grid_bits), false);
}

Rational ceil_to_grid(const Rational& x, unsigned grid_bits) {
  return scaled_round(x, static_cast<long>(grid_bits), true);
}

}  // namespace lvt
