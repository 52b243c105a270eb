#include "lvt/algebraic/number_field.hpp"

#include <algorithm>

#include "lvt/algebraic/irreducible.hpp"
#include "lvt/exact/roots.hpp"

namespace lvt {

NumberField::NumberField(IntPolynomial defining, RationalInterval embedding)
    : defining_(std::move(defining)), degree_(defining_.degree()), embedding_(std::move(embedding)), theta_levels_{embedding_} {
  const auto m = static_cast<std::size_t>(degree_);
  const Rational lead = Rational(defining_.leading());
  // x^m = -(a_0 + ... + a_{m-1} x^{m-1}) / a_m
  std::vector<Rational> top(m);
  for (std::size_t i = 0; i < m; ++i) top[i] = -Rational(defining_.coeff(i)) / lead;
  x_power_m_ = std::move(top);
}

FieldPtr NumberField::create(const IntPolynomial& defining, const RationalInterval& embedding_hint) {
  if (defining.degree() < 1) throw Error(ErrorCode::InvalidArgument, "defining polynomial must have degree >= 1");
  IntPolynomial f = primitive_part(defining);
  if (!is_irreducible(f)) throw Error(ErrorCode::NotIrreducible, "defining polynomial " + to_string(f) + " is reducible over Q");
  SturmSequence sturm(f);
  if (sturm.count_roots(embedding_hint) != 1)
    throw Error(ErrorCode::InvalidArgument, "embedding hint " + to_string(embedding_hint) + " must isolate exactly one real root of " + to_string(f));
  RationalInterval iso = embedding_hint;
  if (f.degree() == 1) iso = RationalInterval(make_rational(-f.coeff(0), f.coeff(1)));
  return FieldPtr(new NumberField(std::move(f), std::move(iso)));
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = create(IntPolynomial{0, 1}, RationalInterval(Rational(0)));
  return q;
}

FieldPtr NumberField::radical(unsigned m, const Integer& radicand) {
  if (m < 1 || radicand < 1) throw Error(ErrorCode::InvalidArgument, "radical field needs m >= 1 and p >= 1");
  std::vector<Integer> c(m + 1, Integer(0));
  c[0] = -radicand;
  c[m] = 1;
  // The positive root lies in (0, max(1, p)].
  Rational top = radicand > 1 ? Rational(radicand) : Rational(2);
  return create(IntPolynomial(std::move(c)), RationalInterval(Rational(0), top));
}

RationalInterval NumberField::theta_enclosure(const Rational& width) const {
  if (embedding_.is_point() || embedding_.width() <= width) return embedding_;
  std::lock_guard lock(cache_mutex_);
  // level i > 0 has width <= 2^-(32 * 2^i)
  std::size_t i = 1;
  while (pow2(-(32L << i)) > width) ++i;
  while (theta_levels_.size() <= i) {
    long bits = 32L << theta_levels_.size();
    theta_levels_.push_back(refine_root(defining_, theta_levels_.back(), pow2(-bits)));
  }
  return theta_levels_[i];
}

std::vector<Rational> NumberField::reduce(std::vector<Rational> coeffs) const {
  const auto m = static_cast<std::size_t>(degree_);
  if (coeffs.size() <= m) {
    coeffs.resize(m, Rational(0));
    return coeffs;
  }
  // Fold high powers down using x^k = x^(k-m) * x^m repeatedly.
  while (coeffs.size() > m) {
    std::size_t top = coeffs.size() - 1;
    Rational c = coeffs[top];
    coeffs.pop_back();
    if (c == 0) continue;
    // x^top = x^(top-m) * x^m, and x^m = x_power_m_ in the power basis.
    std::size_t j = top - m;
    for (std::size_t i = 0; i < m; ++i) coeffs[j + i] += c * x_power_m_[i];
  }
  return coeffs;
}

std::string NumberField::to_spec() const {
  return to_string(defining_) + "@" + "[" + to_string(embedding_.lo()) + "," + to_string(embedding_.hi()) + "]";
}

bool NumberField::same_field(const NumberField& other) const {
  if (this == &other) return true;
  return defining_ == other.defining_ && embedding_.intersects(other.embedding_) &&
         SturmSequence(defining_).count_roots(intersect(embedding_, other.embedding_)) == 1;
}

FieldPtr parse_field_spec(std::string_view text) {
  if (text == "Q" || text == "q") return NumberField::rationals();
  if (text.rfind("root:", 0) == 0) {
    std::string_view rest = text.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::ParseError, "root field spec is root:m:p");
    long m = parse_integer(rest.substr(0, colon)).get_si();
    if (m < 1) throw Error(ErrorCode::ParseError, "root field degree must be positive");
    return NumberField::radical(static_cast<unsigned>(m), parse_integer(rest.substr(colon + 1)));
  }
  auto at = text.find('@');
  if (at == std::string_view::npos) throw Error(ErrorCode::ParseError, "field spec needs '@' embedding hint: '" + std::string(text) + "'");
  IntPolynomial f = parse_polynomial(text.substr(0, at));
  std::string_view hint = text.substr(at + 1);
  auto a = hint.find('['), b = hint.rfind(']'), comma = hint.find(',');
  if (a == std::string_view::npos || b == std::string_view::npos || comma == std::string_view::npos || !(a < comma && comma < b))
    throw Error(ErrorCode::ParseError, "embedding hint must be [lo,hi]: '" + std::string(hint) + "'");
  RationalInterval iso(parse_rational(hint.substr(a + 1, comma - a - 1)), parse_rational(hint.substr(comma + 1, b - comma - 1)));
  return NumberField::create(f, iso);
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "field element without a field");
  coords_ = field_->reduce(std::move(coords));
}

FieldElement FieldElement::from_rational(FieldPtr field, const Rational& value) {
  return FieldElement(std::move(field), std::vector<Rational>{value});
}

FieldElement FieldElement::generator(FieldPtr field) {
  return FieldElement(std::move(field), std::vector<Rational>{Rational(0), Rational(1)});
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

RatPolynomial FieldElement::as_polynomial() const { return RatPolynomial(coords_); }

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field().get() != b.field().get() && !a.field_ref().same_field(b.field_ref()))
    throw Error(ErrorCode::FieldMismatch, "elements belong to different number fields");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a) {
  std::vector<Rational> c(a.coords_);
  for (auto& x : c) x = -x;
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const std::size_t m = a.coords_.size();
  std::vector<Rational> c(2 * m - 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j)
      if (b.coords_[j] != 0) c[i + j] += a.coords_[i] * b.coords_[j];
  }
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(const Rational& s, const FieldElement& a) {
  std::vector<Rational> c(a.coords_);
  for (auto& x : c) x *= s;
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * field_inverse(b); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a.coords_ == b.coords_;
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return field_inverse(*this).pow(-exponent);
  FieldElement result = from_rational(field_, Rational(1));
  FieldElement base = *this;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

RationalInterval FieldElement::enclosure(const Rational& width) const {
  if (sgn(width) <= 0) throw Error(ErrorCode::InvalidArgument, "enclosure width must be positive");
  RatPolynomial p = as_polynomial();
  if (p.degree() <= 0) return RationalInterval(coords_[0]);
  Rational theta_width = width;
  for (;;) {
    RationalInterval theta = field_->theta_enclosure(theta_width);
    RationalInterval value = evaluate(p, theta);
    if (value.width() <= width) return value;
    // Width scales linearly with theta's width; aim below the target.
    Rational ratio = value.width() / width;
    theta_width = theta.width() / (ratio * 2);
    if (theta.is_point()) return value;
  }
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coords_[0]);
  Rational width = pow2(-32);
  for (;;) {
    RationalInterval e = enclosure(width);
    if (sgn(e.lo()) > 0) return 1;
    if (sgn(e.hi()) < 0) return -1;
    width = width * width;
  }
}

std::vector<std::vector<Rational>> FieldElement::multiplication_matrix() const {
  const std::size_t m = coords_.size();
  std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m, Rational(0)));
  FieldElement col = *this;
  FieldElement theta = generator(field_);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) mat[i][j] = col.coords_[i];
    if (j + 1 < m) col = col * theta;
  }
  return mat;
}

FieldElement field_inverse(const FieldElement& e) {
  if (e.is_zero()) throw Error(ErrorCode::ZeroElement, "inverse of zero");
  if (e.is_rational()) return FieldElement::from_rational(e.field(), Rational(1 / e.rational_part()));
  // Extended Euclid on (f, a): track s with s*a = r (mod f).
  RatPolynomial r0 = to_rational(e.field_ref().defining_polynomial());
  RatPolynomial r1 = e.as_polynomial();
  RatPolynomial s0, s1{Rational(1)};
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.is_zero()) throw Error(ErrorCode::ZeroElement, "element shares a factor with the defining polynomial");
  Rational inv = 1 / r1.leading();
  return FieldElement(e.field(), (inv * s1).coefficients());
}

std::string to_string(const FieldElement& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.coords().size(); ++i) {
    if (i) s += ",";
    s += to_string(e.coords()[i]);
  }
  return s + ")";
}

}  // namespace lvt
