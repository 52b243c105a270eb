#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lvt/algebraic/algebraic_number.hpp"
#include "lvt/exact/execution.hpp"

namespace lvt {

// ---- Lemma 2 (Bombieri) ---------------------------------------------------

struct BombieriResult {
  Rational bound;
  bool verified = false;
};

/// (4 n1 n2)^(-3 n1 n2) H1^(-n2) H2^(-n1).
Rational bombieri_bound(int n1, const Integer& h1, int n2, const Integer& h2);

/// Decides |a1 - a2| > bound by refining both enclosures until the comparison
/// is certain. Throws EqualNumbers when a1 and a2 coincide.
BombieriResult bombieri_gap_check(const AlgebraicNumber& a1, const AlgebraicNumber& a2);

struct Lemma2Sweep {
  std::size_t numbers = 0;
  std::size_t pairs = 0;
  std::size_t violations = 0;
  /// Smallest (i, j) in lexicographic order that violates the bound.
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;
};

/// Runs bombieri_gap_check over all pairs i < j of distinct numbers.
Lemma2Sweep lemma2_sweep(const std::vector<AlgebraicNumber>& numbers, Execution exec = Execution::Parallel);

// ---- Lemma 1 (Icen) -------------------------------------------------------

/// Integer polynomial in y (variable 0) and x_1..x_k (variables 1..k).
class IntMultiPolynomial {
 public:
  explicit IntMultiPolynomial(std::size_t variables);
  /// Adds c * y^e[0] x_1^e[1] ... ; e.size() must equal variables().
  void add_term(const std::vector<unsigned>& exponents, const Integer& c);

  std::size_t variables() const { return vars_; }
  const std::map<std::vector<unsigned>, Integer>& terms() const { return terms_; }
  unsigned degree_in(std::size_t var) const;
  Integer height() const;

 private:
  std::size_t vars_;
  std::map<std::vector<unsigned>, Integer> terms_;
};

struct IcenResult {
  int d = 0;           // degree in y
  int g = 0;           // field degree
  int eta_degree = 0;
  Integer eta_height;
  Integer bound;
  bool degree_ok = false;
  bool height_ok = false;
};

/// Eq. (3) bound 3^(2dg + (l_1+...+l_k) g) H^g prod H(alpha_i)^(l_i g).
Integer icen_bound(int d, int g, const std::vector<unsigned>& l, const Integer& relation_height,
                   const std::vector<Integer>& alpha_heights);

/// Verifies relation(eta, alphas) = 0 exactly (RelationNotSatisfied
/// otherwise), then checks deg eta <= d g and H(eta) against the bound. The
/// alphas are elements of one field K of degree g.
IcenResult icen_check(const IntMultiPolynomial& relation, const std::vector<FieldElement>& alphas, const AlgebraicNumber& eta);

// ---- Lemma 3 --------------------------------------------------------------

struct HeightBoundResult {
  Integer bound;
  Integer actual;
  bool ok = false;
};

/// ceil([2 n (d+1)^(n/2)]^d) and ceil([2 (d+1)^(n/2)]^d).
Integer lemma3_sum_bracket(std::size_t n, int d);
Integer lemma3_product_bracket(std::size_t n, int d);

/// Both throw FieldMismatch unless all elements share one field, and
/// InvalidArgument for an empty list.
HeightBoundResult height_bound_sum(const std::vector<FieldElement>& elems);
HeightBoundResult height_bound_product(const std::vector<FieldElement>& elems);

// ---- enumeration ----------------------------------------------------------

struct BoundSpec {
  int max_degree = 1;
  Integer max_height = 1;
};

/// Every real algebraic number with degree <= max_degree and height <=
/// max_height, exactly once, ordered by degree, height, coefficient vector
/// (a_0..a_d, lexicographic ascending) and root index.
std::vector<AlgebraicNumber> enumerate_algebraics(const BoundSpec& spec, Execution exec = Execution::Parallel);

}  // namespace lvt
