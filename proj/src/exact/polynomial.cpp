#include "lvt/exact/polynomial.hpp"

#include <cctype>

namespace lvt {

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "primitive part of the zero polynomial");
  Integer g = content(p);
  if (sgn(p.leading()) < 0) g = -g;
  std::vector<Integer> c(p.coefficients());
  if (g != 1)
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

bool is_primitive(const IntPolynomial& p) { return !p.is_zero() && sgn(p.leading()) > 0 && content(p) == 1; }

Integer height(const IntPolynomial& p) {
  Integer h = 0;
  for (const auto& c : p.coefficients())
    if (abs(c) > h) h = abs(c);
  return h;
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

IntPolynomial primitive_integer(const RatPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "primitive integer form of the zero polynomial");
  Integer l = 1;
  for (const auto& x : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) {
    Integer v = x.get_num() * (l / x.get_den());
    c.push_back(v);
  }
  return primitive_part(IntPolynomial(std::move(c)));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};
  std::vector<Rational> r(a.coefficients());
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const auto& bc = b.coefficients();
  const Rational lead_inv = 1 / b.leading();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rational f = r[static_cast<std::size_t>(i)] * lead_inv;
    if (f == 0) continue;
    std::size_t shift = static_cast<std::size_t>(i - b.degree());
    q[shift] = f;
    for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] -= f * bc[j];
  }
  r.resize(static_cast<std::size_t>(b.degree()));
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return Rational(1 / x.leading()) * x;
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  RatPolynomial g = gcd(to_rational(a), to_rational(b));
  if (g.is_zero()) return {};
  return primitive_integer(g);
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  return divmod(to_rational(a), to_rational(b)).second.is_zero();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of the zero polynomial");
  if (p.degree() == 0) return primitive_part(p);
  RatPolynomial rp = to_rational(p);
  RatPolynomial g = gcd(rp, rp.derivative());
  return primitive_integer(divmod(rp, g).first);
}

bool is_squarefree(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree test of the zero polynomial");
  if (p.degree() <= 0) return true;
  RatPolynomial rp = to_rational(p);
  return gcd(rp, rp.derivative()).degree() == 0;
}

Rational evaluate(const IntPolynomial& p, const Rational& x) {
  // Homogenised: sum a_i n^i d^(deg-i) / d^deg.
  if (p.is_zero()) return Rational(0);
  const auto& c = p.coefficients();
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = c.back();
  Integer dpow = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dpow *= d;
    acc = acc * n + c[i] * dpow;
  }
  return make_rational(acc, dpow);
}

Rational evaluate(const RatPolynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

int sign_at(const IntPolynomial& p, const Rational& x) {
  if (p.is_zero()) return 0;
  const auto& c = p.coefficients();
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = c.back();
  Integer dpow = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dpow *= d;
    acc = acc * n + c[i] * dpow;
  }
  return sgn(acc);
}

RationalInterval evaluate(const IntPolynomial& p, const RationalInterval& x) {
  if (x.is_point()) return RationalInterval(evaluate(p, x.lo()));
  RationalInterval acc(Rational(0));
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + RationalInterval(Rational(c[i]));
  return acc;
}

RationalInterval evaluate(const RatPolynomial& p, const RationalInterval& x) {
  if (x.is_point()) return RationalInterval(evaluate(p, x.lo()));
  RationalInterval acc(Rational(0));
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + RationalInterval(c[i]);
  return acc;
}

IntPolynomial parse_polynomial(std::string_view text) {
  std::size_t a = text.find('[');
  std::size_t b = text.rfind(']');
  if (a == std::string_view::npos || b == std::string_view::npos || b < a)
    throw Error(ErrorCode::ParseError, "polynomial must look like [c0,c1,...]: '" + std::string(text) + "'");
  for (std::size_t i = 0; i < a; ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i])))
      throw Error(ErrorCode::ParseError, "junk before '[' in '" + std::string(text) + "'");
  std::string_view body = text.substr(a + 1, b - a - 1);
  std::vector<Integer> c;
  while (true) {
    std::size_t comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    bool blank = item.find_first_not_of(" \t") == std::string_view::npos;
    if (blank && comma == std::string_view::npos && c.empty()) break;
    c.push_back(parse_integer(item));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return IntPolynomial(std::move(c));
}

std::string to_string(const IntPolynomial& p) {
  std::string s = "[";
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += c[i].get_str();
  }
  return s + "]";
}

}  // namespace lvt
