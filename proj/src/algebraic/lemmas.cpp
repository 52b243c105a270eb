#include "lvt/algebraic/lemmas.hpp"

#include <exception>
#include <numeric>

#include "lvt/algebraic/field_polynomial.hpp"
#include "lvt/algebraic/irreducible.hpp"
#include "lvt/exact/roots.hpp"

namespace lvt {

Rational bombieri_bound(int n1, const Integer& h1, int n2, const Integer& h2) {
  const unsigned long nn = static_cast<unsigned long>(n1) * static_cast<unsigned long>(n2);
  Integer den = pow(Integer(4 * nn), 3 * nn) * pow(h1, static_cast<unsigned long>(n2)) * pow(h2, static_cast<unsigned long>(n1));
  return make_rational(Integer(1), den);
}

namespace {

// 1 = certainly above bound, 0 = certainly at or below, -1 = undecided.
int compare_gap(const RationalInterval& e1, const RationalInterval& e2, const Rational& bound) {
  RationalInterval dist = abs(e1 - e2);
  if (dist.lo() > bound) return 1;
  if (dist.hi() <= bound) return 0;
  return -1;
}

}  // namespace

BombieriResult bombieri_gap_check(const AlgebraicNumber& a1, const AlgebraicNumber& a2) {
  if (same_number(a1, a2)) throw Error(ErrorCode::EqualNumbers, "Lemma 2 needs distinct numbers: " + to_string(a1));
  BombieriResult r;
  r.bound = bombieri_bound(a1.degree, a1.height, a2.degree, a2.height);
  Rational w = r.bound / 4;
  for (;;) {
    int c = compare_gap(real_enclosure(a1, w), real_enclosure(a2, w), r.bound);
    if (c >= 0) {
      r.verified = c == 1;
      return r;
    }
    w /= 65536;
  }
}

Lemma2Sweep lemma2_sweep(const std::vector<AlgebraicNumber>& numbers, Execution exec) {
  Lemma2Sweep out;
  out.numbers = numbers.size();
  if (numbers.size() < 2) return out;
  int max_deg = 1;
  Integer max_h = 1;
  for (const auto& a : numbers) {
    max_deg = std::max(max_deg, a.degree);
    if (a.height > max_h) max_h = a.height;
  }
  // One shared enclosure width that settles almost every pair outright.
  const Rational width = bombieri_bound(max_deg, max_h, max_deg, max_h) / 4;
  const auto n = static_cast<long>(numbers.size());
  std::vector<RationalInterval> enc(numbers.size());
  std::vector<std::exception_ptr> errors(numbers.size());
#pragma omp parallel for schedule(dynamic, 8) if (exec == Execution::Parallel)
  for (long i = 0; i < n; ++i) {
    try {
      enc[i] = real_enclosure(numbers[i], width);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<std::size_t> bad(numbers.size(), 0);
  std::vector<std::size_t> first_bad(numbers.size(), numbers.size());
#pragma omp parallel for schedule(dynamic, 4) if (exec == Execution::Parallel)
  for (long i = 0; i < n; ++i) {
    try {
      for (long j = i + 1; j < n; ++j) {
        const auto& a = numbers[i];
        const auto& b = numbers[j];
        Rational bound = bombieri_bound(a.degree, a.height, b.degree, b.height);
        int c = compare_gap(enc[i], enc[j], bound);
        bool ok = c == 1 || (c == -1 && bombieri_gap_check(a, b).verified);
        if (!ok) {
          if (bad[i] == 0) first_bad[i] = static_cast<std::size_t>(j);
          ++bad[i];
        }
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  out.pairs = numbers.size() * (numbers.size() - 1) / 2;
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    out.violations += bad[i];
    if (bad[i] && !out.first_violation) out.first_violation = std::make_pair(i, first_bad[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

IntMultiPolynomial::IntMultiPolynomial(std::size_t variables) : vars_(variables) {
  if (variables == 0) throw Error(ErrorCode::InvalidArgument, "relation needs the variable y");
}

void IntMultiPolynomial::add_term(const std::vector<unsigned>& exponents, const Integer& c) {
  if (exponents.size() != vars_) throw Error(ErrorCode::InvalidArgument, "exponent vector has the wrong length");
  Integer& slot = terms_[exponents];
  slot += c;
  if (slot == 0) terms_.erase(exponents);
}

unsigned IntMultiPolynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Integer IntMultiPolynomial::height() const {
  Integer h = 0;
  for (const auto& [e, c] : terms_) h = std::max(h, Integer(abs(c)));
  return h;
}

Integer icen_bound(int d, int g, const std::vector<unsigned>& l, const Integer& relation_height,
                   const std::vector<Integer>& alpha_heights) {
  const auto G = static_cast<unsigned long>(g);
  unsigned long lsum = 0;
  for (unsigned x : l) lsum += x;
  Integer b = pow(Integer(3), 2 * static_cast<unsigned long>(d) * G + lsum * G) * pow(relation_height, G);
  for (std::size_t i = 0; i < l.size(); ++i) b *= pow(alpha_heights[i], l[i] * G);
  return b;
}

IcenResult icen_check(const IntMultiPolynomial& relation, const std::vector<FieldElement>& alphas, const AlgebraicNumber& eta) {
  if (relation.variables() != alphas.size() + 1)
    throw Error(ErrorCode::InvalidArgument, "relation has " + std::to_string(relation.variables()) + " variables for " +
                                                std::to_string(alphas.size()) + " alphas");
  IcenResult r;
  r.d = static_cast<int>(relation.degree_in(0));
  if (r.d <= 1) throw Error(ErrorCode::DegreeInYTooSmall, "relation must have degree > 1 in y");
  FieldPtr K = alphas.empty() ? NumberField::rationals() : alphas.front().field();
  for (const auto& a : alphas) require_same_field(alphas.front(), a);
  r.g = K->degree();

  // R(y) = relation(y, alphas) in K[y].
  std::vector<FieldElement> coeffs(static_cast<std::size_t>(r.d) + 1, FieldElement::from_rational(K, Rational(0)));
  for (const auto& [e, c] : relation.terms()) {
    FieldElement t = FieldElement::from_rational(K, Rational(c));
    for (std::size_t i = 0; i < alphas.size(); ++i)
      if (e[i + 1]) t = t * alphas[i].pow(e[i + 1]);
    coeffs[e[0]] = coeffs[e[0]] + t;
  }
  FieldPolynomial R(K, std::move(coeffs));
  if (R.is_zero()) throw Error(ErrorCode::InvalidArgument, "relation vanishes identically once the alphas are substituted");

  bool satisfied;
  if (eta.is_rational()) {
    satisfied = evaluate(R, eta.rational_value()).is_zero();
  } else {
    FieldPolynomial M = FieldPolynomial::from_rational(K, to_rational(eta.min_poly));
    FieldPolynomial D = gcd(R, M);
    // D divides the minimal polynomial of eta, so inside eta's isolating
    // interval its only possible root is eta itself (a simple one).
    satisfied = D.degree() >= 1 && evaluate(D, eta.iso.lo()).sign() * evaluate(D, eta.iso.hi()).sign() < 0;
  }
  if (!satisfied) throw Error(ErrorCode::RelationNotSatisfied, "relation does not vanish at " + to_string(eta));

  std::vector<unsigned> l;
  std::vector<Integer> hs;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    l.push_back(relation.degree_in(i + 1));
    hs.push_back(minimal_polynomial(alphas[i]).height);
  }
  r.bound = icen_bound(r.d, r.g, l, relation.height(), hs);
  r.eta_degree = eta.degree;
  r.eta_height = eta.height;
  r.degree_ok = eta.degree <= r.d * r.g;
  r.height_ok = eta.height <= r.bound;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

Integer ceil_sqrt(const Integer& x) {
  Integer s;
  mpz_sqrt(s.get_mpz_t(), x.get_mpz_t());
  if (s * s < x) ++s;
  return s;
}

// ceil(lead^d * (d+1)^(n d / 2)).
Integer lemma3_bracket(const Integer& lead, std::size_t n, int d) {
  const auto D = static_cast<unsigned long>(d);
  const unsigned long nd = n * D;
  Integer base = pow(lead, D);
  if (nd % 2 == 0) return base * pow(Integer(d + 1), nd / 2);
  // base * (d+1)^((nd-1)/2) * sqrt(d+1) = sqrt(base^2 (d+1)^nd)
  return ceil_sqrt(base * base * pow(Integer(d + 1), nd));
}

HeightBoundResult lemma3(const std::vector<FieldElement>& elems, bool sum) {
  if (elems.empty()) throw Error(ErrorCode::InvalidArgument, "Lemma 3 needs at least one element");
  for (const auto& e : elems) require_same_field(elems.front(), e);
  const int d = elems.front().field()->degree();
  HeightBoundResult r;
  r.bound = sum ? lemma3_sum_bracket(elems.size(), d) : lemma3_product_bracket(elems.size(), d);
  FieldElement acc = elems.front();
  r.bound *= pow(minimal_polynomial(acc).height, static_cast<unsigned long>(d));
  for (std::size_t i = 1; i < elems.size(); ++i) {
    acc = sum ? acc + elems[i] : acc * elems[i];
    r.bound *= pow(minimal_polynomial(elems[i]).height, static_cast<unsigned long>(d));
  }
  r.actual = minimal_polynomial(acc).height;
  r.ok = r.actual <= r.bound;
  return r;
}

}  // namespace

Integer lemma3_sum_bracket(std::size_t n, int d) { return lemma3_bracket(Integer(2 * n), n, d); }
Integer lemma3_product_bracket(std::size_t n, int d) { return lemma3_bracket(Integer(2), n, d); }

HeightBoundResult height_bound_sum(const std::vector<FieldElement>& elems) { return lemma3(elems, true); }
HeightBoundResult height_bound_product(const std::vector<FieldElement>& elems) { return lemma3(elems, false); }

// ---------------------------------------------------------------------------

namespace {

// Coefficient vectors (a_0..a_d) with max |a_i| = h, a_d > 0, content 1, in
// lexicographic ascending order.
std::vector<IntPolynomial> candidates(int d, long h) {
  std::vector<IntPolynomial> out;
  const auto n = static_cast<std::size_t>(d) + 1;
  std::vector<long> a(n, -h);
  a[n - 1] = 1;
  for (;;) {
    bool top = false;
    long g = 0;
    for (long x : a) {
      if (x == h || x == -h) top = true;
      g = std::gcd(g, x);
    }
    if (top && g == 1 && (d == 1 || a[0] != 0)) {
      std::vector<Integer> c(a.begin(), a.end());
      out.emplace_back(std::move(c));
    }
    // Odometer, last coordinate fastest.
    std::size_t k = n;
    while (k > 0) {
      --k;
      long lo = k == n - 1 ? 1 : -h;
      if (a[k] < h) {
        ++a[k];
        break;
      }
      a[k] = lo;
      if (k == 0) return out;
    }
  }
}

}  // namespace

std::vector<AlgebraicNumber> enumerate_algebraics(const BoundSpec& spec, Execution exec) {
  if (spec.max_degree < 1 || spec.max_height < 1) throw Error(ErrorCode::InvalidArgument, "bound spec needs degree and height >= 1");
  if (!spec.max_height.fits_slong_p()) throw Error(ErrorCode::Overflow, "height bound too large to enumerate");
  const long H = spec.max_height.get_si();
  std::vector<IntPolynomial> polys;
  for (int d = 1; d <= spec.max_degree; ++d)
    for (long h = 1; h <= H; ++h) {
      auto c = candidates(d, h);
      polys.insert(polys.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
    }
  const auto n = static_cast<long>(polys.size());
  std::vector<std::vector<AlgebraicNumber>> slots(polys.size());
  std::vector<std::exception_ptr> errors(polys.size());
#pragma omp parallel for schedule(dynamic, 64) if (exec == Execution::Parallel)
  for (long i = 0; i < n; ++i) {
    try {
      const IntPolynomial& p = polys[i];
      if (p.degree() == 1) {
        slots[i].push_back(AlgebraicNumber::from_rational(make_rational(-p.coeff(0), p.coeff(1))));
        continue;
      }
      if (!is_irreducible(p)) continue;
      for (const auto& iso : isolate_real_roots(p)) {
        AlgebraicNumber a;
        a.min_poly = p;
        a.iso = iso;
        a.degree = p.degree();
        a.height = lvt::height(p);
        slots[i].push_back(std::move(a));
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<AlgebraicNumber> out;
  for (auto& s : slots)
    for (auto& a : s) out.push_back(std::move(a));
  return out;
}

}  // namespace lvt
