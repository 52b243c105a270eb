#pragma once

#include <optional>
#include <set>

#include "lvt/exact/polynomial.hpp"

namespace lvt {

/// A rational root of p, if any. Found exactly by isolating the real roots
/// and testing the unique candidate with denominator dividing lc(p) in each
/// isolating interval, so no integer factoring is required.
std::optional<Rational> find_rational_root(const IntPolynomial& p);

/// Degrees d (0 < d < deg p) that a factor of p over Q could have, judged by
/// distinct-degree factorisation modulo small primes. An empty result is a
/// certificate of irreducibility.
std::set<int> possible_factor_degrees(const IntPolynomial& p, int primes_to_try = 12);

/// Irreducibility over Q of a nonzero integer polynomial of degree >= 1.
/// Degree <= 3 is settled by the rational-root test, higher degree by the
/// modular degree certificate with a Kronecker search as fallback. Raises
/// IrreducibilityUndecided if the fallback would need to factor huge values.
bool is_irreducible(const IntPolynomial& p);

}  // namespace lvt
