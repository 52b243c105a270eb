#include <cmath>
#include <random>

#include "doctest.h"
#include "lvt/algebraic/lemmas.hpp"
#include "lvt/exact/log2.hpp"
#include "lvt/rmap/theorem.hpp"

using namespace lvt;

namespace {

Rational q(const char* s) { return parse_rational(s); }

FieldPtr sqrt2() { return NumberField::radical(2, 2); }

std::shared_ptr<SeriesNumber> ell() { return std::make_shared<SeriesNumber>(10, ExponentSchedule::factorial()); }

std::vector<unsigned long> range(unsigned long a, unsigned long b) {
  std::vector<unsigned long> ks;
  for (unsigned long k = a; k <= b; ++k) ks.push_back(k);
  return ks;
}

bool inside(const RationalInterval& x, const char* lo, const char* hi) { return x.subset_of(RationalInterval(q(lo), q(hi))); }

// b^m x^m - p a^m, made primitive: the minimal polynomial of p^(1/m) * a/b
// whenever it is irreducible.
IntPolynomial radical_oracle(unsigned m, long p, const Rational& alpha) {
  std::vector<Integer> c(m + 1, 0);
  c[m] = pow(Integer(alpha.get_den()), m);
  c[0] = -p * pow(Integer(alpha.get_num()), m);
  if (c[0] > 0) {  // odd m with negative alpha
    c[0] = -c[0];
    c[m] = -c[m];
  }
  Integer g = gcd(c[0], c[m]);
  c[0] /= g;
  c[m] /= g;
  if (c[m] < 0) {
    c[0] = -c[0];
    c[m] = -c[m];
  }
  return IntPolynomial(c);
}

}  // namespace

TEST_CASE("normalize_map examples") {
  FieldPtr Q = NumberField::rationals();
  auto one = [&](long v) { return FieldElement::from_rational(Q, v); };
  RationalMap F = RationalMap::normalize(FieldPolynomial(Q, {one(-1), one(0), one(1)}), FieldPolynomial(Q, {one(-1), one(1)}));
  CHECK(F.numerator() == FieldPolynomial(Q, {one(1), one(1)}));
  CHECK(F.denominator() == FieldPolynomial(Q, {one(1)}));

  FieldPtr K = sqrt2();
  RationalMap G = compile_map("theta*x", K);
  CHECK(G.numerator().degree() == 1);
  CHECK(G.numerator().coeff(1) == FieldElement::generator(K));
  CHECK(G.denominator().degree() == 0);

  CHECK_THROWS_WITH_AS(compile_map("2", Q), doctest::Contains("ConstantMap"), Error);
  CHECK_THROWS_AS(compile_map("(x^2-1)/(x-1) - x", Q), Error);  // reduces to 1
  CHECK_THROWS_WITH_AS(RationalMap::normalize(FieldPolynomial(Q, {one(1)}), FieldPolynomial(Q)),
                       doctest::Contains("ZeroDenominator"), Error);
  CHECK_THROWS_WITH_AS(compile_map("x/(x-x)", Q), doctest::Contains("ZeroDenominator"), Error);
  CHECK_THROWS_WITH_AS(compile_map("y*x", Q), doctest::Contains("ParseError"), Error);
}

TEST_CASE("map from coordinates matches the DSL") {
  FieldPtr K = sqrt2();
  RationalMap a = map_from_coordinates({{0, 0}, {0, 1}}, {{1, 0}}, K);
  RationalMap b = compile_map("theta*x", K);
  CHECK(a.numerator() == b.numerator());
  CHECK(a.denominator() == b.denominator());
  RationalMap c = compile_map("(theta*x+1)/(x+2)", K);
  RationalMap d = map_from_coordinates({{1, 0}, {0, 1}}, {{2, 0}, {1, 0}}, K);
  CHECK(c.numerator() == d.numerator());
  CHECK(c.denominator() == d.denominator());
  CHECK_THROWS_AS(map_from_coordinates({{0, 0, 1}}, {{1, 0}}, K), Error);
}

TEST_CASE("eval_at_rational examples") {
  AlgebraicNumber g3 = eval_at_rational(compile_map("theta*x", NumberField::radical(3, 2)), q("11/100"));
  CHECK(g3.min_poly == IntPolynomial({-1331, 0, 0, 500000}));
  CHECK(g3.height == 500000);
  CHECK(g3.degree == 3);

  RationalMap F = compile_map("theta*x", sqrt2());
  AlgebraicNumber g2 = eval_at_rational(F, q("11/100"));
  CHECK(g2.min_poly == IntPolynomial({-121, 0, 5000}));
  CHECK(g2.height == 5000);
  CHECK(inside(g2.iso, "0.1", "0.2"));

  AlgebraicNumber z = eval_at_rational(F, 0);
  CHECK(z.degree == 1);
  CHECK(z.rational_value() == 0);

  CHECK_THROWS_WITH_AS(eval_at_rational(compile_map("1/(x-1)", sqrt2()), 1), doctest::Contains("PoleAtAlpha"), Error);
}

TEST_CASE("degree law for theta*x with theta^m = p") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 60);
  for (auto [m, p] : {std::pair<unsigned, long>{2, 2}, {2, 3}, {3, 2}, {3, 5}, {5, 2}}) {
    RationalMap F = compile_map("theta*x", NumberField::radical(m, p));
    for (int t = 0; t < 25; ++t) {
      long a = num(rng);
      if (a == 0) continue;
      Rational alpha = make_rational(a, den(rng));
      AlgebraicNumber g = eval_at_rational(F, alpha);
      CHECK(g.degree == static_cast<int>(m));
      CHECK(g.min_poly == radical_oracle(m, p, alpha));
    }
  }
}

TEST_CASE("random maps: the minimal polynomial vanishes at F(alpha) inside K") {
  FieldPtr K = sqrt2();
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> c(-9, 9);
  auto elem = [&] { return FieldElement(K, {Rational(c(rng)), Rational(c(rng))}); };
  int done = 0;
  while (done < 60) {
    FieldPolynomial P(K, {elem(), elem(), elem()}), Q(K, {elem(), elem()});
    if (Q.is_zero() || P.is_zero()) continue;
    RationalMap F = [&]() -> RationalMap {
      try {
        return RationalMap::normalize(P, Q);
      } catch (const Error&) {
        return compile_map("x", K);
      }
    }();
    Rational alpha = make_rational(c(rng), 1 + (c(rng) + 9));
    if (evaluate(F.denominator(), alpha).is_zero()) continue;
    FieldElement v = F.eval_element(alpha);
    AlgebraicNumber g = eval_at_rational(F, alpha);
    FieldElement acc = FieldElement::from_rational(K, 0);
    const auto& mp = g.min_poly.coefficients();
    for (std::size_t i = mp.size(); i-- > 0;) acc = acc * v + FieldElement::from_rational(K, Rational(mp[i]));
    CHECK(acc.is_zero());
    CHECK(g.degree == element_degree(v));
    // the point image lies in the isolating interval
    CHECK(map_enclosure(F, RationalInterval(alpha)).intersects(real_enclosure(g, pow2(-40))));
    ++done;
  }
}

TEST_CASE("primitivity_scan examples") {
  FieldPtr K = sqrt2();
  PrimitivityScan s = primitivity_scan(compile_map("theta*x", K), 30);
  REQUIRE(s.exceptions.size() == 1);
  CHECK(s.exceptions[0] == 0);
  CHECK(s.poles.empty());

  PrimitivityScan t = primitivity_scan(compile_map("theta*(x-1)", K), 10);
  REQUIRE(t.exceptions.size() == 1);
  CHECK(t.exceptions[0] == 1);

  CHECK(primitivity_scan(compile_map("x", NumberField::rationals()), 12).exceptions.empty());

  PrimitivityScan u = primitivity_scan(compile_map("theta/(x-1/2)", K), 6);
  CHECK(u.poles == std::vector<Rational>{q("1/2")});
  CHECK(u.exceptions.empty());
}

TEST_CASE("primitivity_scan: serial equals parallel, scanned count matches a direct count") {
  RationalMap F = compile_map("(theta*x+1)/(x+2)", NumberField::radical(3, 2));
  PrimitivityScan a = primitivity_scan(F, 15, Execution::Serial);
  PrimitivityScan b = primitivity_scan(F, 15, Execution::Parallel);
  CHECK(a.exceptions == b.exceptions);
  CHECK(a.poles == b.poles);
  std::size_t n = 0;
  for (long qq = 1; qq <= 15; ++qq)
    for (long p = -15; p <= 15; ++p) n += std::gcd(p, qq) == 1;
  CHECK(a.scanned == n);
  CHECK(a.poles == std::vector<Rational>{Rational(-2)});
}

TEST_CASE("derivative_bound examples") {
  FieldPtr K = sqrt2();
  FieldPtr Q = NumberField::rationals();
  Rational b = derivative_bound(compile_map("theta*x", K), RationalInterval(0, 1));
  CHECK(b * b >= 2);
  CHECK(b <= q("1.4143"));
  Rational c = derivative_bound(compile_map("x^2", Q), RationalInterval(0, 1));
  CHECK(c >= 2);
  CHECK(c <= 3);
  CHECK(derivative_bound(compile_map("1/x", Q), RationalInterval(q("1/2"), 1)) >= 4);
  CHECK_THROWS_WITH_AS(derivative_bound(compile_map("1/x", Q), RationalInterval(q("-1/2"), 1)), doctest::Contains("PoleInInterval"),
                       Error);
}

TEST_CASE("map_enclosure examples") {
  FieldPtr K = sqrt2();
  RationalInterval I(q("1/3"), q("2/3"));
  CHECK(map_enclosure(compile_map("x", NumberField::rationals()), I) == I);
  RationalInterval J = map_enclosure(compile_map("theta*x", K), RationalInterval(q("11/100"), q("111/1000")));
  // sqrt(2) * 11/100 = 0.1555634..., sqrt(2) * 111/1000 = 0.1569777...
  CHECK(J.lo() <= q("0.1555635"));
  CHECK(J.hi() >= q("0.1569777"));
  CHECK(inside(J, "0.1555", "0.1570"));
  CHECK_THROWS_WITH_AS(map_enclosure(compile_map("(x+1)/(x-1)", NumberField::rationals()), RationalInterval(q("0.9"), q("1.1"))),
                       doctest::Contains("PoleInInterval"), Error);
  // 1/(x^2+1/100) needs subdivision near 0 but has no pole
  RationalInterval L = map_enclosure(compile_map("1/(x^2+1/100)", NumberField::rationals()), RationalInterval(-1, 1));
  CHECK(L.contains(100));
  CHECK(L.contains(q("100/101")));
}

TEST_CASE("map_enclosure contains sampled images") {
  FieldPtr K = NumberField::radical(3, 2);
  RationalMap F = compile_map("(theta*x^2 - 3)/(x^2 + theta)", K);
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> d(-200, 200);
  for (int t = 0; t < 40; ++t) {
    Rational a = make_rational(d(rng), 50), b = make_rational(d(rng), 50);
    if (a > b) std::swap(a, b);
    RationalInterval E = map_enclosure(F, RationalInterval(a, b));
    for (int s = 0; s <= 4; ++s) {
      Rational x = a + (b - a) * s / 4;
      CHECK(E.intersects(F.eval_element(x).enclosure(pow2(-60))));
    }
  }
}

TEST_CASE("approximant_sequence examples") {
  auto xi = ell();
  RationalMap F = compile_map("theta*x", sqrt2());
  auto recs = approximant_sequence(*xi, F, {2, 3});
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].alpha == q("11/100"));
  CHECK(recs[0].h_gamma == 5000);
  CHECK(inside(recs[0].gap, "1.41e-6", "1.58e-6"));
  // sqrt(2) * (10^-6 + 10^-24 + ...) with 1.41421 < sqrt(2) < 1.41422
  CHECK(recs[0].gap.intersects(RationalInterval(q("1.41421e-6"), q("1.41423e-6"))));
  CHECK(recs[1].h_gamma == Integer("500000000000"));
  CHECK(inside(recs[1].gap, "1.41e-24", "1.58e-24"));
  CHECK(recs[0].gamma.degree == 2);

  auto id = approximant_sequence(*xi, compile_map("x", NumberField::rationals()), {1, 2, 3});
  for (const auto& r : id) {
    Convergent c = xi->convergent(r.k);
    CHECK(r.gamma.rational_value() == c.value);
    CHECK(r.h_gamma == r.h_alpha);
    CHECK(r.gap.intersects(c.gap));
    CHECK(r.gap.width() <= c.gap.lo() / 1000);
  }
}

TEST_CASE("verify_theorem_chain examples") {
  auto xi = ell();
  RationalMap F = compile_map("theta*x", sqrt2());
  auto recs = approximant_sequence(*xi, F, {2, 3, 4});
  Rational C = measure_growth_constant(recs);
  CHECK(C > 1);
  CHECK(C < q("1.01"));
  TheoremReport rep = verify_theorem_chain(recs, C, 2);
  const TheoremRow& r2 = rep.rows[0];
  CHECK(inside(r2.e, "1.55", "1.60"));
  // oracle in doubles: -log(sqrt(2) 1e-6) / log(5000)
  double e2 = -std::log(std::sqrt(2.0) * 1e-6) / std::log(5000.0);
  CHECK(r2.e.lo().get_d() <= e2 + 1e-6);
  CHECK(r2.e.hi().get_d() >= e2 - 1e-6);
  CHECK(r2.omega.lo() / 16 <= q("3/16"));
  CHECK(r2.eq9);
  CHECK(r2.ratio7 == Rational(5000) / pow(Rational(100), 8));
  CHECK(r2.eq7);
  CHECK(r2.eq6);
  CHECK(r2.eq12.value_or(false));
  CHECK_FALSE(rep.rows.back().eq12.has_value());
  CHECK(rep.monotone_e);
  CHECK(rep.all_pass());

  CHECK_THROWS_WITH_AS(verify_theorem_chain({}, C, 2), doctest::Contains("EmptyRecords"), Error);
  CHECK_THROWS_AS(verify_theorem_chain(recs, 1, 2), Error);
}

TEST_CASE("identity map: e_k matches omega_k") {
  auto xi = ell();
  auto recs = approximant_sequence(*xi, compile_map("x", NumberField::rationals()), {1, 2, 3, 4});
  TheoremReport rep = verify_theorem_chain(recs, measure_growth_constant(recs), 1);
  for (const auto& r : rep.rows) {
    INFO(r.k, " e=", to_string(r.e), " omega=", to_string(r.omega));
    // same quantity up to the 2^-24 output grid; omega may be the looser one
    CHECK(r.e.subset_of(RationalInterval(r.omega.lo() - pow2(-21), r.omega.hi() + pow2(-21))));
    CHECK(r.eq6);
    CHECK(r.eq9);
  }
}

TEST_CASE("consistency: overlapping k ranges give the same certified booleans") {
  auto xi = ell();
  RationalMap F = compile_map("theta*x", sqrt2());
  auto a = approximant_sequence(*xi, F, range(2, 4));
  auto b = approximant_sequence(*xi, F, range(2, 5));
  TheoremReport ra = verify_theorem_chain(a, 2, 2), rb = verify_theorem_chain(b, 2, 2);
  for (std::size_t i = 0; i < ra.rows.size(); ++i) {
    CHECK(ra.rows[i].eq6 == rb.rows[i].eq6);
    CHECK(ra.rows[i].eq7 == rb.rows[i].eq7);
    CHECK(ra.rows[i].eq9 == rb.rows[i].eq9);
    CHECK(ra.rows[i].e == rb.rows[i].e);
  }
  Refiner Fx = map_of(xi, F);
  RationalInterval coarse = Fx(pow2(-40)), fine = Fx(pow2(-120));
  CHECK(coarse.intersects(fine));
  CHECK(fine.width() <= pow2(-120));
  CHECK(coarse.width() <= pow2(-40));
}

TEST_CASE("continued-fraction input") {
  auto cf = build_strong_cf([](unsigned long k) { return k; }, 5);
  RationalMap F = compile_map("theta*x", sqrt2());
  auto recs = approximant_sequence(*cf, F, {1, 2, 3});
  for (const auto& r : recs) {
    CHECK(sgn(r.gap.lo()) > 0);
    CHECK(r.gamma.degree == 2);
  }
}

TEST_CASE("lower_degree_audit: small window against a brute-force oracle") {
  auto xi = ell();
  RationalMap F = compile_map("theta*x", sqrt2());
  auto recs = approximant_sequence(*xi, F, range(2, 4));
  BoundSpec spec{1, 10};
  AuditReport rep = lower_degree_audit(map_of(xi, F), 1, spec, recs, 2, 2);
  CHECK(rep.all_separated);
  REQUIRE(rep.worst.has_value());
  CHECK(rep.worst->exponent.hi() < 3);
  CHECK(rep.triangle_violations == 0);
  CHECK(rep.triangle_pairs == rep.candidates * recs.size());
  CHECK(rep.final_bound == 2 + 16 * 2 * 64);

  // oracle: doubles are plenty at this height
  double x = std::sqrt(2.0) * 0.110001;
  double best = -1;
  Rational arg;
  for (long qq = 1; qq <= 10; ++qq)
    for (long p = -10; p <= 10; ++p) {
      if (std::gcd(p, qq) != 1 || std::max(std::labs(p), qq) < 2) continue;
      double e = -std::log(std::fabs(x - double(p) / qq)) / std::log(double(std::max(std::labs(p), qq)));
      if (e > best) best = e, arg = make_rational(p, qq);
    }
  CHECK(rep.worst->candidate.rational_value() == arg);
  CHECK(rep.worst->exponent.lo().get_d() <= best + 1e-9);
  CHECK(rep.worst->exponent.hi().get_d() >= best - 1e-9);

  std::size_t n = 0;
  for (long qq = 1; qq <= 10; ++qq)
    for (long p = -10; p <= 10; ++p) n += std::gcd(p, qq) == 1;
  CHECK(rep.candidates == n);
  CHECK(rep.audited == n - 3);  // -1, 0, 1 have height 1
}

TEST_CASE("lower_degree_audit errors and determinism") {
  auto xi = ell();
  RationalMap F = compile_map("theta*x", sqrt2());
  auto recs = approximant_sequence(*xi, F, range(2, 3));
  CHECK_THROWS_WITH_AS(lower_degree_audit(map_of(xi, F), 2, BoundSpec{2, 5}, recs, 2, 2), doctest::Contains("DegreeNotBelowM"), Error);
  CHECK_THROWS_AS(lower_degree_audit(map_of(xi, F), 1, BoundSpec{2, 5}, recs, 2, 3), Error);
  AuditReport s = lower_degree_audit(map_of(xi, F), 1, BoundSpec{1, 40}, recs, 2, 2, Execution::Serial);
  AuditReport p = lower_degree_audit(map_of(xi, F), 1, BoundSpec{1, 40}, recs, 2, 2, Execution::Parallel);
  REQUIRE(s.worst.has_value());
  REQUIRE(p.worst.has_value());
  CHECK(s.worst->exponent == p.worst->exponent);
  CHECK(same_number(s.worst->candidate, p.worst->candidate));
  CHECK(s.triangle_pairs == p.triangle_pairs);
  CHECK(s.audited == p.audited);
}

TEST_CASE("lower_degree_audit over a cubic field, quadratic candidates") {
  auto xi = ell();
  RationalMap F = compile_map("theta*x", NumberField::radical(3, 2));
  auto recs = approximant_sequence(*xi, F, range(2, 3));
  AuditReport rep = lower_degree_audit(map_of(xi, F), 2, BoundSpec{2, 3}, recs, 2, 3);
  CHECK(rep.all_separated);
  CHECK(rep.triangle_violations == 0);
  CHECK(rep.candidates == enumerate_algebraics(BoundSpec{2, 3}).size());
}
