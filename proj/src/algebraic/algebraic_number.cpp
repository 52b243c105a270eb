#include "lvt/algebraic/algebraic_number.hpp"

#include "lvt/exact/roots.hpp"

namespace lvt {

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& value) {
  AlgebraicNumber a;
  a.min_poly = primitive_part(IntPolynomial{-value.get_num(), value.get_den()});
  a.iso = RationalInterval(value);
  a.degree = 1;
  a.height = lvt::height(a.min_poly);
  return a;
}

AlgebraicNumber AlgebraicNumber::from_root(const IntPolynomial& poly, const RationalInterval& iso) {
  IntPolynomial f = primitive_part(poly);
  if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "constant polynomial has no roots");
  if (f.degree() == 1) {
    Rational r = make_rational(-f.coeff(0), f.coeff(1));
    if (!iso.contains(r)) throw Error(ErrorCode::InvalidArgument, "interval does not contain the root of " + to_string(f));
    return from_rational(r);
  }
  if (SturmSequence(f).count_roots(iso) != 1)
    throw Error(ErrorCode::InvalidArgument, "interval " + to_string(iso) + " does not isolate one root of " + to_string(f));
  AlgebraicNumber a;
  a.min_poly = std::move(f);
  a.iso = iso;
  a.degree = a.min_poly.degree();
  a.height = lvt::height(a.min_poly);
  return a;
}

Rational AlgebraicNumber::rational_value() const {
  if (degree != 1) throw Error(ErrorCode::InvalidArgument, "not a rational number");
  return make_rational(-min_poly.coeff(0), min_poly.coeff(1));
}

RationalInterval real_enclosure(const AlgebraicNumber& a, const Rational& width) {
  if (a.degree == 1) return RationalInterval(a.rational_value());
  if (a.iso.width() <= width) return a.iso;
  // A little tighter than asked, so the result sits well inside any
  // neighbourhood of the root of radius `width`.
  return refine_root(a.min_poly, a.iso, width / 16);
}

bool same_number(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!(a.min_poly == b.min_poly)) return false;
  if (a.degree == 1) return true;
  if (!a.iso.intersects(b.iso)) return false;
  return SturmSequence(a.min_poly).count_roots(intersect(a.iso, b.iso)) == 1;
}

AlgebraicNumber reciprocal(const AlgebraicNumber& a) {
  if (a.degree == 1) {
    Rational v = a.rational_value();
    if (v == 0) throw Error(ErrorCode::ZeroElement, "reciprocal of zero");
    return AlgebraicNumber::from_rational(1 / v);
  }
  // An irrational root never has 0 in a tight enough isolating interval.
  RationalInterval iso = a.iso;
  Rational w = iso.width();
  while (iso.contains_zero()) {
    w /= 4;
    iso = refine_root(a.min_poly, iso, w);
  }
  RationalInterval inv = RationalInterval(Rational(1)) / iso;
  return AlgebraicNumber::from_root(a.min_poly.reversed(), inv);
}

std::optional<std::vector<Rational>> linear_dependency(const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty()) throw Error(ErrorCode::InvalidArgument, "no vectors");
  const std::size_t n = vectors.size() - 1;  // unknowns c_0..c_{n-1}
  const std::size_t rows = vectors.front().size();
  // Solve sum_{i<n} c_i v_i = -v_n by Gaussian elimination on the augmented
  // rows x (n + 1) matrix.
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < n; ++i) m[r][i] = vectors[i][r];
    m[r][n] = -vectors[n][r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[row][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (m[r][n] != 0) return std::nullopt;
  std::vector<Rational> c(n + 1, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) c[pivot_col[r]] = m[r][n] / m[r][pivot_col[r]];
  c[n] = 1;
  return c;
}

namespace {

// Dependency among 1, e, e^2, ... found at the least possible degree.
std::vector<Rational> dependency_coefficients(const FieldElement& e) {
  std::vector<std::vector<Rational>> powers;
  FieldElement p = FieldElement::from_rational(e.field(), Rational(1));
  powers.push_back(p.coords());
  for (;;) {
    p = p * e;
    powers.push_back(p.coords());
    if (auto c = linear_dependency(powers)) return *c;
  }
}

}  // namespace

int element_degree(const FieldElement& e) { return static_cast<int>(dependency_coefficients(e).size()) - 1; }

AlgebraicNumber minimal_polynomial(const FieldElement& e) {
  if (e.is_rational()) return AlgebraicNumber::from_rational(e.rational_part());
  IntPolynomial f = primitive_integer(RatPolynomial(dependency_coefficients(e)));
  if (f.degree() == 1) return AlgebraicNumber::from_rational(make_rational(-f.coeff(0), f.coeff(1)));
  std::vector<RationalInterval> roots = isolate_real_roots(f);
  Rational width = pow2(-8);
  for (;;) {
    RationalInterval enc = e.enclosure(width);
    const RationalInterval* hit = nullptr;
    int hits = 0;
    for (const auto& r : roots)
      if (r.intersects(enc)) {
        hit = &r;
        ++hits;
      }
    if (hits == 1) {
      AlgebraicNumber a;
      a.min_poly = f;
      a.iso = intersect(*hit, enc);
      a.degree = f.degree();
      a.height = lvt::height(f);
      return a;
    }
    if (hits == 0) throw Error(ErrorCode::InvalidArgument, "element enclosure misses every root of its minimal polynomial");
    width = width * width;
  }
}

std::string to_string(const AlgebraicNumber& a) {
  if (a.degree == 1) return to_string(a.rational_value());
  return "root of " + to_string(a.min_poly) + " in " + to_string(a.iso);
}

}  // namespace lvt
