#include "lvt/rmap/rational_map.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <optional>

#include "lvt/exact/expr.hpp"

namespace lvt {

RationalMap RationalMap::normalize(FieldPolynomial P, FieldPolynomial Q) {
  if (Q.is_zero()) throw Error(ErrorCode::ZeroDenominator, "map denominator is zero");
  if (P.is_zero()) throw Error(ErrorCode::ConstantMap, "map is identically zero");
  FieldPolynomial g = gcd(P, Q);
  if (g.degree() > 0) {
    P = divmod(P, g).first;
    Q = divmod(Q, g).first;
  }
  if (P.degree() <= 0 && Q.degree() <= 0) throw Error(ErrorCode::ConstantMap, "map does not depend on x");
  // Scale so Q is monic; keeps the representation canonical.
  FieldElement inv = field_inverse(Q.leading());
  return RationalMap(inv * P, inv * Q);
}

FieldElement RationalMap::eval_element(const Rational& alpha) const {
  FieldElement q = evaluate(Q_, alpha);
  if (q.is_zero()) throw Error(ErrorCode::PoleAtAlpha, "F has a pole at " + to_string(alpha));
  return evaluate(P_, alpha) / q;
}

namespace {

using Fraction = std::pair<FieldPolynomial, FieldPolynomial>;

Fraction compile(const Expr& e, const FieldPtr& K) {
  auto constant = [&](const FieldElement& c) { return FieldPolynomial(K, {c}); };
  auto one = [&] { return constant(FieldElement::from_rational(K, 1)); };
  switch (e.kind()) {
    case Expr::Kind::Constant: return {constant(FieldElement::from_rational(K, e.value())), one()};
    case Expr::Kind::Variable:
      if (e.name() == "x") return {FieldPolynomial(K, {FieldElement::from_rational(K, 0), FieldElement::from_rational(K, 1)}), one()};
      if (e.name() == "theta" || e.name() == "t") return {constant(FieldElement::generator(K)), one()};
      throw Error(ErrorCode::ParseError, "unknown symbol '" + e.name() + "' in map (use x and theta)");
    case Expr::Kind::Neg: {
      auto [n, d] = compile(e.lhs(), K);
      return {FieldElement::from_rational(K, -1) * n, d};
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      auto [an, ad] = compile(e.lhs(), K);
      auto [bn, bd] = compile(e.rhs(), K);
      if (e.kind() == Expr::Kind::Add) return {an * bd + bn * ad, ad * bd};
      return {an * bd - bn * ad, ad * bd};
    }
    case Expr::Kind::Mul: {
      auto [an, ad] = compile(e.lhs(), K);
      auto [bn, bd] = compile(e.rhs(), K);
      return {an * bn, ad * bd};
    }
    case Expr::Kind::Div: {
      auto [an, ad] = compile(e.lhs(), K);
      auto [bn, bd] = compile(e.rhs(), K);
      if (bn.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero in map");
      return {an * bd, ad * bn};
    }
    case Expr::Kind::Pow: {
      auto [n, d] = compile(e.lhs(), K);
      long k = e.exponent();
      if (k < 0) {
        if (n.is_zero()) throw Error(ErrorCode::ZeroDenominator, "negative power of zero in map");
        std::swap(n, d);
        k = -k;
      }
      Fraction r{one(), one()};
      for (long i = 0; i < k; ++i) r = {r.first * n, r.second * d};
      return r;
    }
  }
  throw Error(ErrorCode::ParseError, "unsupported expression");
}

}  // namespace

RationalMap compile_map(std::string_view expression, const FieldPtr& K) {
  auto [n, d] = compile(parse_expr(expression), K);
  return RationalMap::normalize(std::move(n), std::move(d));
}

RationalMap map_from_coordinates(const std::vector<std::vector<Rational>>& num, const std::vector<std::vector<Rational>>& den,
                                 const FieldPtr& K) {
  auto lift = [&](const std::vector<std::vector<Rational>>& cs) {
    std::vector<FieldElement> out;
    for (const auto& c : cs) {
      if (c.size() != static_cast<std::size_t>(K->degree()))
        throw Error(ErrorCode::InvalidArgument, "map coefficient needs " + std::to_string(K->degree()) + " coordinates");
      out.emplace_back(K, c);
    }
    return FieldPolynomial(K, std::move(out));
  };
  return RationalMap::normalize(lift(num), lift(den));
}

AlgebraicNumber eval_at_rational(const RationalMap& F, const Rational& alpha) { return minimal_polynomial(F.eval_element(alpha)); }

PrimitivityScan primitivity_scan(const RationalMap& F, const Integer& height_cap, Execution exec) {
  if (height_cap < 1 || !height_cap.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "height cap out of range");
  const long H = height_cap.get_si();
  std::vector<Rational> alphas;
  for (long q = 1; q <= H; ++q)
    for (long p = -H; p <= H; ++p)
      if (std::gcd(p, q) == 1) alphas.push_back(make_rational(p, q));
  std::sort(alphas.begin(), alphas.end());
  const int m = F.field_degree();
  // 0 = primitive, 1 = exception, 2 = pole
  std::vector<int> kind(alphas.size(), 0);
  std::vector<std::exception_ptr> errors(alphas.size());
  const auto n = static_cast<long>(alphas.size());
#pragma omp parallel for schedule(dynamic, 16) if (exec == Execution::Parallel)
  for (long i = 0; i < n; ++i) {
    try {
      if (evaluate(F.denominator(), alphas[i]).is_zero())
        kind[i] = 2;
      else if (element_degree(F.eval_element(alphas[i])) < m)
        kind[i] = 1;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  PrimitivityScan out;
  out.scanned = alphas.size();
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (kind[i] == 1) out.exceptions.push_back(alphas[i]);
    if (kind[i] == 2) out.poles.push_back(alphas[i]);
  }
  return out;
}

namespace {

constexpr int kMaxSplitDepth = 16;

Rational coefficient_width(const RationalInterval& I) {
  Rational w = pow2(-64);
  if (!I.is_point()) {
    Rational s = I.width() / 256;
    if (s < w) w = s;
  }
  return w;
}

// Visits pieces of I on which `den` is bounded away from zero, splitting
// where its enclosure straddles zero. A certified sign change or an exact
// zero at a split point means a genuine pole.
template <class Visit>
void for_each_safe_piece(const FieldPolynomial& den, const RationalInterval& I, const Rational& cw, int depth, Visit&& visit) {
  RationalInterval d = evaluate(den, I, cw);
  if (!d.contains_zero()) {
    visit(I, d);
    return;
  }
  if (I.is_point() || depth >= kMaxSplitDepth) throw Error(ErrorCode::PoleInInterval, "denominator vanishes on " + to_string(I));
  int s_lo = evaluate(den, I.lo()).sign(), s_hi = evaluate(den, I.hi()).sign();
  if (s_lo == 0 || s_hi == 0 || s_lo != s_hi) throw Error(ErrorCode::PoleInInterval, "denominator vanishes on " + to_string(I));
  Rational mid = I.midpoint();
  if (evaluate(den, mid).is_zero()) throw Error(ErrorCode::PoleInInterval, "denominator vanishes at " + to_string(mid));
  for_each_safe_piece(den, RationalInterval(I.lo(), mid), cw, depth + 1, visit);
  for_each_safe_piece(den, RationalInterval(mid, I.hi()), cw, depth + 1, visit);
}

}  // namespace

Rational derivative_bound(const RationalMap& F, const RationalInterval& I) {
  const FieldPolynomial& P = F.numerator();
  const FieldPolynomial& Q = F.denominator();
  FieldPolynomial N = P.derivative() * Q - P * Q.derivative();
  FieldPolynomial D = Q * Q;
  const Rational cw = coefficient_width(I);
  std::optional<Rational> best;
  for_each_safe_piece(D, I, cw, 0, [&](const RationalInterval& piece, const RationalInterval& d) {
    Rational b = evaluate(N, piece, cw).magnitude() / d.mignitude();
    if (!best || b > *best) best = b;
  });
  return *best;
}

RationalInterval map_enclosure(const RationalMap& F, const RationalInterval& I) {
  const Rational cw = coefficient_width(I);
  std::optional<RationalInterval> out;
  for_each_safe_piece(F.denominator(), I, cw, 0, [&](const RationalInterval& piece, const RationalInterval& d) {
    RationalInterval v = evaluate(F.numerator(), piece, cw) / d;
    out = out ? hull(*out, v) : v;
  });
  return *out;
}

}  // namespace lvt
