#include "lvt/exact/roots.hpp"

#include <algorithm>
#include <utility>

namespace lvt {

namespace {

// Multiply by a positive constant so the result is an integer polynomial with
// content 1; the sign of every value is preserved (unlike primitive_part).
IntPolynomial positive_integer_scale(const RatPolynomial& p) {
  Integer l = 1;
  for (const auto& x : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.push_back(Integer(x.get_num() * (l / x.get_den())));
  IntPolynomial q(std::move(c));
  Integer g = content(q);
  if (g > 1) {
    std::vector<Integer> d(q.coefficients());
    for (auto& x : d) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    q = IntPolynomial(std::move(d));
  }
  return q;
}

}  // namespace

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative());
  RatPolynomial prev = to_rational(chain_[0]);
  RatPolynomial cur = to_rational(chain_[1]);
  for (;;) {
    RatPolynomial r = divmod(prev, cur).second;
    if (r.is_zero()) break;
    RatPolynomial next = -r;
    chain_.push_back(positive_integer_scale(next));
    prev = std::move(cur);
    cur = to_rational(chain_.back());
  }
  if (chain_.back().degree() > 0)
    throw Error(ErrorCode::NotSquarefree, "polynomial " + to_string(p) + " has a repeated factor");
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_roots(const RationalInterval& closed) const {
  int n = variations(closed.lo()) - variations(closed.hi());
  if (sign_at(chain_.front(), closed.lo()) == 0) ++n;
  return n;
}

Rational root_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root bound of the zero polynomial");
  Integer m = 0;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (abs(c[i]) > m) m = abs(c[i]);
  Rational cauchy = 1 + Rational(m) / abs(p.leading());
  return pow2(ceil_log2(cauchy));
}

Rational dyadic_between(const Rational& lo, const Rational& hi) {
  Rational w = hi - lo;
  long k = ceil_log2(w) - 3;
  Rational step = pow2(k);
  Rational mid = (lo + hi) / 2;
  Rational s = Rational(floor(mid / step)) * step;
  if (s <= lo) s += step;
  return s;
}

std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root isolation of the zero polynomial");
  std::vector<RationalInterval> out;
  if (p.degree() == 0) return out;
  SturmSequence sturm(p);
  if (p.degree() == 1) {
    Rational r = make_rational(-p.coeff(0), p.coeff(1));
    out.emplace_back(r);
    return out;
  }
  Rational bound = root_bound(p);

  struct Work {
    Rational lo, hi;
    int v_lo, v_hi;
  };
  // Depth-first, left half first, so emitted intervals come out sorted.
  // Splits at exact midpoints of a power-of-two box, and isolating intervals
  // are bisected down to width <= 1, so they are aligned dyadic cells.
  std::vector<Work> stack;
  stack.push_back({-bound, bound, sturm.variations(-bound), sturm.variations(bound)});
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    int n = w.v_lo - w.v_hi;
    if (n == 0) continue;
    if (n == 1 && w.hi - w.lo <= 1) {
      out.emplace_back(w.lo, w.hi);
      continue;
    }
    Rational s = (w.lo + w.hi) / 2;
    // Never split at a root: the endpoints of every work item stay non-roots.
    for (long j = 4; sign_at(p, s) == 0; ++j) s = (w.lo + w.hi) / 2 + (w.hi - w.lo) * pow2(-j);
    int v_s = sturm.variations(s);
    stack.push_back({s, w.hi, v_s, w.v_hi});
    stack.push_back({w.lo, s, w.v_lo, v_s});
  }
  // Neighbours may share an endpoint; shrink until strictly disjoint.
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    while (out[i].hi() >= out[i + 1].lo()) {
      Rational w = out[i].width() / 2;
      out[i] = refine_root(p, out[i], w);
    }
  }
  return out;
}

RationalInterval refine_root(const IntPolynomial& p, const RationalInterval& iso, const Rational& width) {
  if (sgn(width) <= 0) throw Error(ErrorCode::InvalidArgument, "refinement width must be positive");
  Rational lo = iso.lo(), hi = iso.hi();
  int s_lo = sign_at(p, lo);
  if (s_lo == 0) return RationalInterval(lo);
  int s_hi = sign_at(p, hi);
  if (s_hi == 0) return RationalInterval(hi);
  if (s_lo == s_hi)
    throw Error(ErrorCode::NoSignChange, "interval " + to_string(iso) + " does not bracket a root of " + to_string(p));
  while (hi - lo > width) {
    Rational s = dyadic_between(lo, hi);
    int sm = sign_at(p, s);
    if (sm == 0) return RationalInterval(s);
    if (sm == s_lo)
      lo = std::move(s);
    else
      hi = std::move(s);
  }
  return {lo, hi};
}

}  // namespace lvt
