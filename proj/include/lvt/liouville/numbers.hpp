#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lvt/exact/interval.hpp"
#include "lvt/liouville/schedule.hpp"

namespace lvt {

/// k-th rational approximation p_k/q_k with a certified enclosure of
/// |xi - p_k/q_k|.
struct Convergent {
  unsigned long k = 0;
  Rational value;
  RationalInterval gap;
};

/// H(p/q) = max(|p|, q).
Integer rational_height(const Rational& r);

/// A computable real known through convergents, measured exponents and
/// arbitrarily tight enclosures. Implementations are safe for concurrent use.
class ApproximableReal {
 public:
  virtual ~ApproximableReal() = default;
  virtual Convergent convergent(unsigned long k) const = 0;
  /// Interval containing -log|xi - p_k/q_k| / log H(p_k/q_k).
  virtual RationalInterval omega(unsigned long k) const = 0;
  /// Enclosure of xi of width <= width.
  virtual RationalInterval enclosure(const Rational& width) const = 0;
  /// Smallest index with a meaningful convergent (H >= 2).
  virtual unsigned long first_index() const { return 1; }
  virtual std::string describe() const = 0;
};

/// xi = sum_{n >= 1} a^(-v(n)).
class SeriesNumber final : public ApproximableReal {
 public:
  SeriesNumber(Integer base, ExponentSchedule schedule);

  const Integer& base() const { return base_; }
  const ExponentSchedule& schedule() const { return schedule_; }

  Convergent convergent(unsigned long k) const override;
  RationalInterval omega(unsigned long k) const override;
  RationalInterval enclosure(const Rational& width) const override;
  std::string describe() const override;

  /// Partial sum over n <= k (exact), denominator a^v(k).
  Rational partial_sum(unsigned long k) const;

 private:
  Integer v(unsigned long n) const;
  Integer power(const Integer& exponent) const;

  Integer base_;
  ExponentSchedule schedule_;
  mutable std::mutex mutex_;
  mutable std::vector<Integer> v_cache_;
  mutable std::vector<Rational> sums_;
};

/// Continued fraction [a_0; a_1, a_2, ...]. Quotients beyond the given
/// prefix can be produced by an extension rule a_{k+1} = rule(k, q_k).
class CFNumber final : public ApproximableReal {
 public:
  using Rule = std::function<Integer(unsigned long k, const Integer& q_k)>;

  /// a_0 any integer, a_k >= 1 after that (InvalidArgument otherwise).
  explicit CFNumber(std::vector<Integer> quotients, Rule extension = {});

  /// Quotients a_0..a_prefix_length-1 given at construction.
  std::size_t prefix_length() const { return prefix_; }
  std::vector<Integer> quotients() const;
  Integer quotient(unsigned long k) const;
  /// p_k and q_k (p_{-1} = 1, q_{-1} = 0 are not exposed).
  Integer p(unsigned long k) const;
  Integer q(unsigned long k) const;
  bool extensible() const { return static_cast<bool>(rule_); }

  /// Needs quotient k+1 to bound the gap; TooFewEntries when it is missing.
  Convergent convergent(unsigned long k) const override;
  RationalInterval omega(unsigned long k) const override;
  /// Hull of two consecutive convergents; RefinementBudgetExceeded when the
  /// prefix runs out and there is no extension rule.
  RationalInterval enclosure(const Rational& width) const override;
  unsigned long first_index() const override;
  std::string describe() const override;

 private:
  bool ensure(unsigned long k) const;  // materialize through index k

  mutable std::mutex mutex_;
  mutable std::vector<Integer> a_, p_, q_;
  std::size_t prefix_;
  Rule rule_;
};

/// a_0 = 0, a_1 = 2, a_{k+1} = q_k^{n(k)}, so q_{k+1} > q_k^{n(k)}. `count`
/// quotients after a_0 are materialized; later ones follow the same rule.
std::shared_ptr<CFNumber> build_strong_cf(std::function<unsigned long(unsigned long)> n_schedule, std::size_t count);

/// Refinable enclosure of a real: returns an interval of width <= width.
using Refiner = std::function<RationalInterval(const Rational& width)>;

/// First `count` partial quotients of the (irrational) real behind `x`. A
/// quotient is accepted only when both ends of the enclosed complete quotient
/// share an integer part; otherwise the enclosure is refined, at most
/// `budget` times in total (RefinementBudgetExceeded). Each refinement
/// doubles the working precision, starting from 64 bits.
std::vector<Integer> cf_expansion(const Refiner& x, std::size_t count, unsigned budget = 16);

struct WitnessEntry {
  Convergent convergent;
  RationalInterval omega;
};

struct Witness {
  std::vector<WitnessEntry> entries;
};

Witness make_witness(const ApproximableReal& x, const std::vector<unsigned long>& ks);

struct ClassVerdict {
  std::string class_name;
  Rational C;
  bool passes = true;
  /// Convergent index k of the first failing step.
  std::optional<unsigned long> first_failure_index;
};

/// H_{n+1} <= H_n^(C t^(1+eps)) for each consecutive pair, t = omega_n.hi.
/// Throws TooFewEntries for fewer than two entries.
ClassVerdict classify_witness(const Witness& w, const Rational& C, const Rational& epsilon);

/// q_{k+1} > q_k^n for every k > N with q_{k+1} inside the materialized
/// prefix. Throws TooFewEntries unless q_0..q_{N+1} are available.
ClassVerdict strong_prefix_check(const CFNumber& cf, unsigned long n, unsigned long N);

}  // namespace lvt
