#pragma once

#include <optional>
#include <vector>

#include "lvt/algebraic/lemmas.hpp"
#include "lvt/liouville/numbers.hpp"
#include "lvt/rmap/rational_map.hpp"

namespace lvt {

/// gamma_k = F(alpha_k) with a certified enclosure of |F(xi) - gamma_k|.
struct ApproximantRecord {
  unsigned long k = 0;
  Rational alpha;
  AlgebraicNumber gamma;
  Integer h_alpha, h_gamma;
  RationalInterval gap;
  RationalInterval omega;
  /// Upper bound on |F'| over the hull of alpha_k and the xi enclosure used.
  Rational mvt_bound;
};

/// One record per k, in the given order. The xi enclosure is refined to
/// width tail_lo / 2^12 before mapping.
std::vector<ApproximantRecord> approximant_sequence(const ApproximableReal& xi, const RationalMap& F,
                                                    const std::vector<unsigned long>& ks);

struct TheoremRow {
  unsigned long k = 0;
  Integer h_alpha, h_gamma;
  RationalInterval gap, omega;
  /// log2(gap.hi / H(alpha_k)^(-omega.lo)); eq6 compares it with log2 mvt_bound.
  RationalInterval log2_ratio6;
  Rational mvt_bound;
  /// h_gamma / h_alpha^(2 m^2), exact.
  Rational ratio7;
  /// log2 H(gamma_{k+1}) - 2 C m^2 omega.lo log2 h_alpha; absent for the last k.
  std::optional<RationalInterval> log2_ratio12;
  RationalInterval e;
  bool eq6 = false, eq7 = false, eq9 = false;
  std::optional<bool> eq12;
  bool exponent_ok() const { return eq9; }
};

struct TheoremReport {
  int m = 1;
  Rational C;
  std::vector<TheoremRow> rows;
  /// e_k.lo strictly increasing.
  bool monotone_e = true;
  bool all_pass() const;
};

/// max_k log H(alpha_{k+1}) / (omega_k.lo log H(alpha_k)), rounded up to the
/// 2^-24 grid and at least 1 + 2^-24. Needs two records with omega.lo > 0.
Rational measure_growth_constant(const std::vector<ApproximantRecord>& records);

/// Throws EmptyRecords; InvalidArgument when C <= 1 or m < 1.
TheoremReport verify_theorem_chain(const std::vector<ApproximantRecord>& records, const Rational& C, int m);

struct AuditCandidate {
  AlgebraicNumber candidate;
  RationalInterval distance;
  RationalInterval exponent;
};

struct AuditReport {
  int n = 1;
  int m = 1;
  BoundSpec spec;
  Rational C;
  std::size_t candidates = 0;
  /// Candidates of height >= 2 (the ones with a defined exponent).
  std::size_t audited = 0;
  std::optional<AuditCandidate> worst;
  bool all_separated = false;
  /// Pairs (gamma, gamma_k) tested against the Lemma 2 separation bound.
  std::size_t triangle_pairs = 0;
  std::size_t triangle_violations = 0;
  /// m + 16 C n m^6.
  Rational final_bound;
};

/// Enclosures of F(xi) from enclosures of xi.
Refiner map_of(std::shared_ptr<const ApproximableReal> xi, RationalMap F);

/// Separation and exponent of every enumerated gamma (degree <= n) from
/// F(xi). Throws DegreeNotBelowM unless n < m, InvalidArgument unless
/// spec.max_degree == n, RefinementBudgetExceeded when a distance cannot be
/// certified within `budget` refinements.
AuditReport lower_degree_audit(const Refiner& F_of_xi, int n, const BoundSpec& spec,
                               const std::vector<ApproximantRecord>& records, const Rational& C, int m,
                               Execution exec = Execution::Parallel, unsigned budget = 16);

}  // namespace lvt
