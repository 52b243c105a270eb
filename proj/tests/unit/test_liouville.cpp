#include <random>
#include <thread>

#include "doctest.h"
#include "lvt/exact/log2.hpp"
#include "lvt/exact/roots.hpp"
#include "lvt/liouville/numbers.hpp"

using namespace lvt;

namespace {

Rational q(const char* s) { return parse_rational(s); }

SeriesNumber ell() { return SeriesNumber(10, ExponentSchedule::factorial()); }

Refiner root_refiner(const IntPolynomial& p, RationalInterval iso) {
  return [p, iso](const Rational& w) { return refine_root(p, iso, w); };
}

// Exact convergents of a quotient list, independent of CFNumber.
std::vector<Rational> convergents_of(const std::vector<Integer>& a) {
  std::vector<Rational> out;
  for (std::size_t n = 1; n <= a.size(); ++n) {
    Rational x = a[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x = a[i] + 1 / x;
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("schedules") {
  CHECK(ExponentSchedule::factorial().v(5) == 120);
  CHECK(ExponentSchedule::parse("geometric:3").v(4) == 81);
  CHECK(ExponentSchedule::parse("tower:2").v(3) == 16);
  CHECK(ExponentSchedule::parse("tower:2").v(4) == 65536);
  CHECK(ExponentSchedule::parse("list:1,2,6,24").v(4) == 24);
  CHECK(ExponentSchedule::parse("list:1,2,6,24").to_string() == "list:1,2,6,24");
  CHECK_THROWS_AS(ExponentSchedule::parse("list:1,3,3"), Error);
  CHECK_THROWS_AS(ExponentSchedule::parse("geometric:1"), Error);
  CHECK_THROWS_AS(ExponentSchedule::parse("zigzag"), Error);
  try {
    ExponentSchedule::parse("list:1,2").v(3);
    FAIL("expected TooFewEntries");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooFewEntries);
  }
}

TEST_CASE("series_convergent examples") {
  auto l = ell();
  Convergent c = l.convergent(2);
  CHECK(c.value == q("11/100"));
  CHECK(c.gap.subset_of({q("1e-6"), q("10/9") * q("1e-6")}));
  c = l.convergent(3);
  CHECK(c.value == q("110001/1000000"));
  CHECK(c.gap.subset_of({q("1e-24"), q("10/9") * q("1e-24")}));
  SeriesNumber two(2, ExponentSchedule::parse("list:1,2,3,4"));
  c = two.convergent(1);
  CHECK(c.value == q("1/2"));
  CHECK(c.gap.lo() == q("1/4"));
  // Denominator is exactly a^v(k).
  CHECK(l.convergent(4).value.get_den() == pow(Integer(10), 24));
}

TEST_CASE("omega_measured examples and exact power oracle") {
  auto l = ell();
  RationalInterval w2 = l.omega(2);
  CHECK(w2.subset_of({q("2.97"), q("3")}));
  CHECK(w2.hi() == 3);
  CHECK(l.omega(1).subset_of({q("1.95"), q("2")}));
  SeriesNumber lin(2, ExponentSchedule::parse("list:1,2,3,4,5"));
  CHECK(lin.omega(1).hi() == 2);

  // |xi - p/q| = q^-omega with omega inside the interval: gap.hi <= q^-lo
  // and q^-hi <= gap.lo, checked with exact integer powers. The lower end is
  // tested on the 2^-12 grid to keep the powers small.
  for (auto base : {2, 3, 10}) {
    SeriesNumber s(base, ExponentSchedule::factorial());
    for (unsigned long k = 1; k <= 3; ++k) {
      Convergent c = s.convergent(k);
      RationalInterval w = s.omega(k);
      Integer qk = c.value.get_den();
      CHECK(le_neg_power(c.gap.hi(), qk, floor_to_grid(w.lo(), 12)));
      CHECK(w.hi() - w.lo() <= make_rational(Integer(1), ExponentSchedule::factorial().v(k)) + pow2(-20));
      // q^-hi <= gap.lo  <=>  gap.lo^-1 <= q^hi
      Rational inv = 1 / c.gap.lo();
      CHECK(pow(Integer(inv.get_num()), w.hi().get_den().get_ui()) <=
            pow(qk, w.hi().get_num().get_ui()) * pow(Integer(inv.get_den()), w.hi().get_den().get_ui()));
    }
  }
}

TEST_CASE("tail-bound soundness against deeper partial sums") {
  for (auto spec : {"factorial", "geometric:2", "geometric:3", "list:1,3,4,9,10,20,21", "tower:2"}) {
    for (auto base : {2, 3, 7, 10}) {
      SeriesNumber s(base, ExponentSchedule::parse(spec));
      const bool tower = std::string(spec) == "tower:2";
      for (unsigned long k = 1; k <= (tower ? 1ul : 3ul); ++k) {
        Convergent c = s.convergent(k);
        Convergent deep = s.convergent(k + (tower ? 2 : 3));
        Rational lo = deep.value - c.value + deep.gap.lo();
        Rational hi = deep.value - c.value + deep.gap.hi();
        CHECK(RationalInterval(lo, hi).subset_of(c.gap));
      }
    }
  }
}

TEST_CASE("series enclosure") {
  auto l = ell();
  RationalInterval e = l.enclosure(q("1e-30"));
  CHECK(e.width() <= q("1e-30"));
  CHECK(e.contains(l.convergent(5).value));
  SeriesNumber short_list(2, ExponentSchedule::parse("list:1,2"));
  try {
    short_list.enclosure(q("1e-6"));
    FAIL("expected RefinementBudgetExceeded");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::RefinementBudgetExceeded);
  }
}

TEST_CASE("cf_expansion examples") {
  auto l = ell();
  auto a = cf_expansion([&](const Rational& w) { return l.enclosure(w); }, 2);
  CHECK(a == std::vector<Integer>{0, 9});
  auto golden = cf_expansion(root_refiner(parse_polynomial("[-1,-1,1]"), {1, 2}), 20);
  CHECK(golden == std::vector<Integer>(20, 1));
  auto r2 = cf_expansion(root_refiner(parse_polynomial("[-2,0,1]"), {1, 2}), 15);
  CHECK(r2[0] == 1);
  for (std::size_t i = 1; i < r2.size(); ++i) CHECK(r2[i] == 2);
  // A fixed enclosure can never be refined: budget runs out.
  try {
    cf_expansion([](const Rational&) { return RationalInterval(q("1/3"), q("1/2")); }, 3, 4);
    FAIL("expected RefinementBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RefinementBudgetExceeded);
  }
}

TEST_CASE("cf_expansion round trip: convergents bracket the enclosed real") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-30, 30), lead(1, 9);
  for (int it = 0; it < 40; ++it) {
    IntPolynomial p{c(rng), c(rng), lead(rng)};
    // Irrational roots only: non-square positive discriminant.
    Integer disc = p.coeff(1) * p.coeff(1) - 4 * p.coeff(0) * p.coeff(2);
    if (disc <= 0 || mpz_perfect_square_p(disc.get_mpz_t())) continue;
    auto roots = isolate_real_roots(p);
    for (const auto& iso : roots) {
      if (iso.is_point()) continue;
      Refiner x = root_refiner(p, iso);
      auto a = cf_expansion(x, 8);
      auto conv = convergents_of(a);
      // The real lies between the last convergent and the next mediant-type
      // bound, so it sits inside the hull of the last two convergents.
      RationalInterval tight = x(q("1e-40"));
      RationalInterval between = hull(RationalInterval(conv[6]), RationalInterval(conv[7]));
      CHECK(tight.intersects(between));
      CHECK(between.contains(tight.midpoint()));
    }
  }
}

TEST_CASE("CF recurrence p_k q_{k-1} - p_{k-1} q_k = +-1") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> a(1, 1000);
  for (int it = 0; it < 50; ++it) {
    std::vector<Integer> qs{a(rng) - 500};
    for (int i = 0; i < 25; ++i) qs.push_back(a(rng));
    CFNumber cf(qs);
    auto conv = convergents_of(qs);
    for (unsigned long k = 1; k < qs.size(); ++k) {
      Integer d = cf.p(k) * cf.q(k - 1) - cf.p(k - 1) * cf.q(k);
      CHECK(abs(d) == 1);
      CHECK(make_rational(cf.p(k), cf.q(k)) == conv[k]);
    }
  }
  CHECK_THROWS_AS(CFNumber({1, 0, 2}), Error);
}

TEST_CASE("CF gap and omega") {
  CFNumber cf({1, 2, 2, 2, 2, 2, 2, 2, 2});
  Rational r2_lo = q("1.41421356237"), r2_hi = q("1.41421356238");
  for (unsigned long k = 1; k + 1 < 9; ++k) {
    Convergent c = cf.convergent(k);
    CHECK(abs(r2_lo - c.value) >= c.gap.lo() - (r2_hi - r2_lo));
    CHECK(abs(r2_lo - c.value) <= c.gap.hi() + (r2_hi - r2_lo));
    RationalInterval w = cf.omega(k);
    CHECK(w.lo() >= 1);
    CHECK(w.hi() <= 3);
  }
  CHECK_THROWS_AS(cf.convergent(8), Error);
  CHECK(cf.enclosure(q("1/1000")).contains(q("1.41421356")));
}

TEST_CASE("build_strong_cf examples") {
  auto cf = build_strong_cf([](unsigned long k) { return k; }, 4);
  CHECK(cf->quotients() == std::vector<Integer>{0, 2, 2, 25, 2048383});
  CHECK(cf->q(1) == 2);
  CHECK(cf->q(2) == 5);
  CHECK(cf->q(3) == 127);
  CHECK(cf->q(4) == 260144646);
  CHECK(cf->q(4) > pow(Integer(127), 3));
  // Further quotients follow the same rule lazily.
  CHECK(cf->quotient(5) == pow(cf->q(4), 4));

  auto one = build_strong_cf([](unsigned long) { return 1; }, 3);
  for (unsigned long k = 1; k < 3; ++k) CHECK(one->q(k + 1) > one->q(k));
  auto two = build_strong_cf([](unsigned long) { return 2; }, 3);
  CHECK(two->quotient(2) == 4);
  CHECK(two->q(2) == 9);
}

TEST_CASE("strong_prefix_check examples") {
  auto cf = build_strong_cf([](unsigned long k) { return k; }, 4);
  CHECK(strong_prefix_check(*cf, 2, 1).passes);
  CFNumber r2({1, 2, 2, 2, 2, 2, 2, 2});
  ClassVerdict v = strong_prefix_check(r2, 2, 0);
  CHECK_FALSE(v.passes);
  CHECK(v.first_failure_index == 2ul);
  CHECK(strong_prefix_check(r2, 1, 0).passes);
  CHECK_THROWS_AS(strong_prefix_check(r2, 2, 7), Error);
}

TEST_CASE("classify_witness fixtures") {
  auto l = ell();
  Witness full = make_witness(l, {1, 2, 3, 4, 5, 6});
  ClassVerdict v = classify_witness(full, q("1.1"), 0);
  CHECK(v.passes);
  CHECK_FALSE(v.first_failure_index);

  Witness even = make_witness(l, {2, 4, 6});
  v = classify_witness(even, q("1.4"), 0);
  CHECK_FALSE(v.passes);
  CHECK(v.first_failure_index == 2ul);
  CHECK(classify_witness(even, q("1.4"), 1).passes);
  // Oracle: the failing step needs exponent 12 = v4/v2 against 1.4 * 3.
  CHECK(rational_height(even.entries[1].convergent.value) == pow(rational_height(even.entries[0].convergent.value), 12));
  // Fractional epsilon: 1.4 * 3^1.5 ~ 7.27 < 12 fails, 1.4 * 3^2.5 ~ 21.8 passes.
  CHECK_FALSE(classify_witness(even, q("1.4"), q("1/2")).passes);
  CHECK(classify_witness(even, q("1.4"), q("3/2")).passes);
  CHECK_THROWS_AS(classify_witness(make_witness(l, {2}), 1, 0), Error);
}

TEST_CASE("Corollary-1 witness law over several schedules") {
  for (auto spec : {"factorial", "list:1,3,12,60,360,2520", "list:2,5,20,100,700"}) {
    for (auto base : {2, 3, 5, 10}) {
      SeriesNumber s(base, ExponentSchedule::parse(spec));
      std::vector<unsigned long> ks;
      const unsigned long kmax = std::string(spec) == "factorial" ? 6 : 4;
      for (unsigned long k = 1; k <= kmax; ++k) ks.push_back(k);
      CHECK(classify_witness(make_witness(s, ks), q("1.1"), 0).passes);
    }
  }
}

TEST_CASE("concurrent access to memoized convergents") {
  SeriesNumber s(10, ExponentSchedule::factorial());
  auto cf = build_strong_cf([](unsigned long k) { return k; }, 4);
  std::vector<Rational> got(8);
  std::vector<Integer> qs(8);
  std::vector<std::thread> pool;
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] {
      got[t] = s.convergent(1 + t % 5).value;
      qs[t] = cf->q(1 + t % 5);
    });
  for (auto& th : pool) th.join();
  for (int t = 0; t < 8; ++t) {
    CHECK(got[t] == SeriesNumber(10, ExponentSchedule::factorial()).partial_sum(1 + t % 5));
    CHECK(qs[t] == cf->q(1 + t % 5));
  }
}
