#include "lvt/algebraic/field_polynomial.hpp"

namespace lvt {

FieldPolynomial::FieldPolynomial(FieldPtr field) : field_(std::move(field)) {}

FieldPolynomial::FieldPolynomial(FieldPtr field, std::vector<FieldElement> coefficients)
    : field_(std::move(field)), c_(std::move(coefficients)) {
  for (const auto& c : c_)
    if (c.field().get() != field_.get() && !c.field_ref().same_field(*field_))
      throw Error(ErrorCode::FieldMismatch, "coefficient from a different field");
  trim();
}

FieldPolynomial FieldPolynomial::from_rational(FieldPtr field, const RatPolynomial& p) {
  std::vector<FieldElement> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.push_back(FieldElement::from_rational(field, x));
  return FieldPolynomial(std::move(field), std::move(c));
}

void FieldPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement FieldPolynomial::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : FieldElement::from_rational(field_, Rational(0));
}

FieldPolynomial FieldPolynomial::derivative() const {
  std::vector<FieldElement> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * c_[i]);
  return FieldPolynomial(field_, std::move(d));
}

FieldPolynomial FieldPolynomial::monic() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "monic of zero polynomial");
  FieldElement inv = field_inverse(leading());
  return inv * *this;
}

bool FieldPolynomial::has_rational_coefficients() const {
  for (const auto& c : c_)
    if (!c.is_rational()) return false;
  return true;
}

FieldPolynomial operator+(const FieldPolynomial& a, const FieldPolynomial& b) {
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  std::vector<FieldElement> r;
  r.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.push_back(a.coeff(i) + b.coeff(i));
  return FieldPolynomial(a.field_, std::move(r));
}

FieldPolynomial operator-(const FieldPolynomial& a, const FieldPolynomial& b) {
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  std::vector<FieldElement> r;
  r.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.push_back(a.coeff(i) - b.coeff(i));
  return FieldPolynomial(a.field_, std::move(r));
}

FieldPolynomial operator*(const FieldPolynomial& a, const FieldPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return FieldPolynomial(a.field_);
  std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, FieldElement::from_rational(a.field_, Rational(0)));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
  return FieldPolynomial(a.field_, std::move(r));
}

FieldPolynomial operator*(const FieldElement& s, const FieldPolynomial& a) {
  std::vector<FieldElement> r;
  r.reserve(a.c_.size());
  for (const auto& c : a.c_) r.push_back(s * c);
  return FieldPolynomial(a.field_, std::move(r));
}

bool operator==(const FieldPolynomial& a, const FieldPolynomial& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

std::pair<FieldPolynomial, FieldPolynomial> divmod(const FieldPolynomial& a, const FieldPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  const FieldPtr& K = a.field();
  if (a.degree() < b.degree()) return {FieldPolynomial(K), a};
  std::vector<FieldElement> rem = a.coefficients();
  std::vector<FieldElement> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), FieldElement::from_rational(K, Rational(0)));
  const FieldElement inv_lead = field_inverse(b.leading());
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t top = rem.size(); top-- > db;) {
    if (rem[top].is_zero()) continue;
    FieldElement f = rem[top] * inv_lead;
    quo[top - db] = f;
    for (std::size_t i = 0; i <= db; ++i) rem[top - db + i] = rem[top - db + i] - f * b.coefficients()[i];
  }
  rem.erase(rem.begin() + static_cast<long>(db), rem.end());
  return {FieldPolynomial(K, std::move(quo)), FieldPolynomial(K, std::move(rem))};
}

FieldPolynomial gcd(const FieldPolynomial& a, const FieldPolynomial& b) {
  FieldPolynomial x = a, y = b;
  while (!y.is_zero()) {
    FieldPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

FieldElement evaluate(const FieldPolynomial& p, const FieldElement& x) {
  FieldElement acc = FieldElement::from_rational(p.field(), Rational(0));
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) acc = acc * x + *it;
  return acc;
}

FieldElement evaluate(const FieldPolynomial& p, const Rational& x) {
  FieldElement acc = FieldElement::from_rational(p.field(), Rational(0));
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) acc = x * acc + *it;
  return acc;
}

RationalInterval evaluate(const FieldPolynomial& p, const RationalInterval& x, const Rational& coeff_width) {
  RationalInterval acc(Rational(0));
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) acc = acc * x + it->enclosure(coeff_width);
  return acc;
}

std::string to_string(const FieldPolynomial& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) s += ",";
    s += to_string(p.coefficients()[i]);
  }
  return s + "]";
}

}  // namespace lvt
