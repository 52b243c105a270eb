#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <random>
#include <vector>

#include "lvt/algebraic/lemmas.hpp"
#include "lvt/algebraic/number_field.hpp"

namespace lvt::oracle {

inline FieldElement random_element(std::mt19937_64& rng, const FieldPtr& K, int bound = 100) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  std::vector<Rational> c;
  for (int i = 0; i < K->degree(); ++i) c.push_back(make_rational(num(rng), den(rng)));
  return FieldElement(K, std::move(c));
}

// Faddeev-LeVerrier: characteristic polynomial det(xI - M), ascending.
inline RatPolynomial charpoly(const std::vector<std::vector<Rational>>& M) {
  const std::size_t n = M.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<Rational>> Mk(n, std::vector<Rational>(n, Rational(0)));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = M * M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t t = 0; t < n; ++t) next[i][j] += M[i][t] * Mk[t][j];
        if (i == j) next[i][j] += c[n - k + 1];
      }
    Mk = std::move(next);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) tr += M[i][t] * Mk[t][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return RatPolynomial(std::move(c));
}

// Rank by plain row reduction, independent of linear_dependency().
inline std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// p(e) evaluated exactly inside K.
inline FieldElement eval_in_field(const IntPolynomial& p, const FieldElement& e) {
  FieldElement acc = FieldElement::from_rational(e.field(), Rational(0));
  for (int i = p.degree(); i >= 0; --i) acc = acc * e + FieldElement::from_rational(e.field(), Rational(p.coeff(i)));
  return acc;
}

// G(y, x_1, ..., x_{r+l+3}) = sum_j x_1 x_{j+1} y^(j-1) - sum_j x_{r+j+2} y^(j-1):
// gamma Q(alpha) - P(alpha) with y = alpha, x_1 = gamma, then b_0..b_r and a_0..a_l.
inline IntMultiPolynomial eq13_relation(int l, int r) {
  const std::size_t vars = 1 + 1 + (r + 1) + (l + 1);
  IntMultiPolynomial G(vars);
  for (int j = 1; j <= r + 1; ++j) {
    std::vector<unsigned> e(vars, 0);
    e[0] = j - 1;
    e[1] = 1;
    e[1 + j] = 1;
    G.add_term(e, 1);
  }
  for (int j = 1; j <= l + 1; ++j) {
    std::vector<unsigned> e(vars, 0);
    e[0] = j - 1;
    e[r + j + 2] = 1;
    G.add_term(e, -1);
  }
  return G;
}

}  // namespace lvt::oracle
