#pragma once

#include <vector>

#include "lvt/exact/interval.hpp"
#include "lvt/exact/polynomial.hpp"

namespace lvt {

/// Sturm chain p, p', -rem(...), ... kept as positively-scaled integer
/// polynomials so sign evaluation stays in integer arithmetic.
class SturmSequence {
 public:
  /// Throws ZeroPolynomial, or NotSquarefree if gcd(p, p') is non-constant.
  explicit SturmSequence(const IntPolynomial& p);

  const IntPolynomial& polynomial() const { return chain_.front(); }
  const std::vector<IntPolynomial>& chain() const { return chain_; }

  /// Sign variations of the chain at x (zeros skipped).
  int variations(const Rational& x) const;
  /// Distinct roots in the closed interval.
  int count_roots(const RationalInterval& closed) const;

 private:
  std::vector<IntPolynomial> chain_;
};

/// 2^k with every real root strictly inside (-2^k, 2^k).
Rational root_bound(const IntPolynomial& p);

/// A dyadic rational in the middle half of (lo, hi) with a short numerator.
Rational dyadic_between(const Rational& lo, const Rational& hi);

/// Pairwise-disjoint closed intervals, sorted ascending, each containing
/// exactly one real root of the squarefree polynomial p.
std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& p);

/// Bisects iso (which must bracket a single simple root) down to the given
/// width. Exact rational roots come back as point intervals.
RationalInterval refine_root(const IntPolynomial& p, const RationalInterval& iso, const Rational& width);

}  // namespace lvt
