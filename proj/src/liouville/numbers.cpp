#include "lvt/liouville/numbers.hpp"

#include "lvt/exact/error.hpp"
#include "lvt/exact/log2.hpp"

namespace lvt {

namespace {

// Exponent of omega intervals is rounded to this grid.
constexpr unsigned kGridBits = 24;

}  // namespace

Integer rational_height(const Rational& r) {
  Integer p = abs(Integer(r.get_num()));
  return p > r.get_den() ? p : Integer(r.get_den());
}

// ---------------------------------------------------------------------------

SeriesNumber::SeriesNumber(Integer base, ExponentSchedule schedule) : base_(std::move(base)), schedule_(std::move(schedule)) {
  if (base_ < 2) throw Error(ErrorCode::InvalidArgument, "series base must be at least 2");
}

Integer SeriesNumber::v(unsigned long n) const {
  std::lock_guard lock(mutex_);
  while (v_cache_.size() < n) v_cache_.push_back(schedule_.v(v_cache_.size() + 1));
  return v_cache_[n - 1];
}

Integer SeriesNumber::power(const Integer& exponent) const {
  // a^e with e limited so the result stays below 2^34 bits.
  if (!exponent.fits_ulong_p() || exponent.get_d() * static_cast<double>(bit_length(base_)) > 17179869184.0)
    throw Error(ErrorCode::Overflow, "power of " + base_.get_str() + " with a " + std::to_string(bit_length(exponent)) +
                                         "-bit exponent is too large to materialize");
  return pow(base_, exponent.get_ui());
}

Rational SeriesNumber::partial_sum(unsigned long k) const {
  if (k == 0) return 0;
  // Fill the exponents first; v() takes the lock itself.
  for (unsigned long n = 1; n <= k; ++n) v(n);
  std::lock_guard lock(mutex_);
  while (sums_.size() < k) {
    const std::size_t n = sums_.size() + 1;
    Rational term = make_rational(Integer(1), power(v_cache_[n - 1]));
    sums_.push_back(sums_.empty() ? term : sums_.back() + term);
  }
  return sums_[k - 1];
}

Convergent SeriesNumber::convergent(unsigned long k) const {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "series convergents start at k = 1");
  Convergent c;
  c.k = k;
  c.value = partial_sum(k);
  Rational lo = make_rational(Integer(1), power(v(k + 1)));
  c.gap = RationalInterval(lo, lo * make_rational(base_, base_ - 1));
  return c;
}

RationalInterval SeriesNumber::omega(unsigned long k) const {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "series convergents start at k = 1");
  const Integer vk = v(k), vk1 = v(k + 1);
  // log_a(a/(a-1)) from above.
  RationalInterval tail = log2_enclosure(make_rational(base_, base_ - 1), kGridBits + 40) / log2_enclosure(base_, kGridBits + 40);
  Rational u = ceil_to_grid(tail.hi(), kGridBits);
  Rational hi = make_rational(vk1, vk);
  Rational lo = floor_to_grid((Rational(vk1) - u) / Rational(vk), kGridBits);
  return {lo, hi};
}

RationalInterval SeriesNumber::enclosure(const Rational& width) const {
  if (sgn(width) <= 0) throw Error(ErrorCode::InvalidArgument, "enclosure width must be positive");
  // The enclosure after k terms has width a^(-v(k+1)) / (a-1).
  for (unsigned long k = 1;; ++k) {
    Integer next;
    try {
      next = v(k + 1);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::TooFewEntries)
        throw Error(ErrorCode::RefinementBudgetExceeded, "schedule " + schedule_.to_string() + " too short for width " + to_string(width));
      throw;
    }
    // Skip convergents that are clearly too coarse without building them:
    // the width is below 2^-(v bits(a) - bits(a)) only once that exceeds
    // roughly log2(1 / width).
    const double need = static_cast<double>(bit_length(width.get_den())) - static_cast<double>(bit_length(width.get_num()));
    if ((next.get_d() + 1) * static_cast<double>(bit_length(base_)) + 2 < need) continue;
    Convergent c = convergent(k);
    if (c.gap.width() <= width) return RationalInterval(c.value + c.gap.lo(), c.value + c.gap.hi());
  }
}

std::string SeriesNumber::describe() const { return "series:" + base_.get_str() + ":" + schedule_.to_string(); }

// ---------------------------------------------------------------------------

CFNumber::CFNumber(std::vector<Integer> quotients, Rule extension) : prefix_(quotients.size()), rule_(std::move(extension)) {
  if (quotients.empty()) throw Error(ErrorCode::InvalidArgument, "continued fraction needs a_0");
  for (std::size_t i = 1; i < quotients.size(); ++i)
    if (quotients[i] < 1) throw Error(ErrorCode::InvalidArgument, "partial quotients after a_0 must be positive");
  for (const auto& a : quotients) {
    const std::size_t k = a_.size();
    a_.push_back(a);
    p_.push_back(k == 0 ? a : Integer(k == 1 ? Integer(a * p_[0] + 1) : Integer(a * p_[k - 1] + p_[k - 2])));
    q_.push_back(k == 0 ? Integer(1) : Integer(k == 1 ? a : Integer(a * q_[k - 1] + q_[k - 2])));
  }
}

bool CFNumber::ensure(unsigned long k) const {
  while (a_.size() <= k) {
    if (!rule_) return false;
    const std::size_t n = a_.size();
    Integer a = rule_(n - 1, q_[n - 1]);
    if (a < 1) throw Error(ErrorCode::InvalidArgument, "extension rule produced a non-positive quotient");
    a_.push_back(a);
    p_.push_back(n == 1 ? Integer(a * p_[0] + 1) : Integer(a * p_[n - 1] + p_[n - 2]));
    q_.push_back(n == 1 ? a : Integer(a * q_[n - 1] + q_[n - 2]));
  }
  return true;
}

std::vector<Integer> CFNumber::quotients() const {
  std::lock_guard lock(mutex_);
  return std::vector<Integer>(a_.begin(), a_.begin() + static_cast<long>(prefix_));
}

Integer CFNumber::quotient(unsigned long k) const {
  std::lock_guard lock(mutex_);
  if (!ensure(k)) throw Error(ErrorCode::TooFewEntries, "quotient " + std::to_string(k) + " is not available");
  return a_[k];
}

Integer CFNumber::p(unsigned long k) const {
  std::lock_guard lock(mutex_);
  if (!ensure(k)) throw Error(ErrorCode::TooFewEntries, "convergent " + std::to_string(k) + " is not available");
  return p_[k];
}

Integer CFNumber::q(unsigned long k) const {
  std::lock_guard lock(mutex_);
  if (!ensure(k)) throw Error(ErrorCode::TooFewEntries, "convergent " + std::to_string(k) + " is not available");
  return q_[k];
}

Convergent CFNumber::convergent(unsigned long k) const {
  std::lock_guard lock(mutex_);
  if (!ensure(k + 1))
    throw Error(ErrorCode::TooFewEntries, "gap of convergent " + std::to_string(k) + " needs quotient " + std::to_string(k + 1));
  Convergent c;
  c.k = k;
  c.value = make_rational(p_[k], q_[k]);
  const Integer& qk = q_[k];
  const Integer& qk1 = q_[k + 1];
  c.gap = RationalInterval(make_rational(Integer(1), qk * (qk1 + qk)), make_rational(Integer(1), qk * qk1));
  return c;
}

RationalInterval CFNumber::omega(unsigned long k) const {
  Convergent c = convergent(k);
  Integer h = rational_height(c.value);
  if (h < 2) throw Error(ErrorCode::InvalidArgument, "omega needs a convergent of height >= 2");
  return neg_log_ratio(c.gap, h, kGridBits);
}

RationalInterval CFNumber::enclosure(const Rational& width) const {
  if (sgn(width) <= 0) throw Error(ErrorCode::InvalidArgument, "enclosure width must be positive");
  std::lock_guard lock(mutex_);
  for (unsigned long k = 0;; ++k) {
    if (!ensure(k + 1))
      throw Error(ErrorCode::RefinementBudgetExceeded, "continued fraction prefix too short for width " + to_string(width));
    Rational w = make_rational(Integer(1), q_[k] * q_[k + 1]);
    if (w <= width) {
      Rational a = make_rational(p_[k], q_[k]), b = make_rational(p_[k + 1], q_[k + 1]);
      return a < b ? RationalInterval(a, b) : RationalInterval(b, a);
    }
  }
}

unsigned long CFNumber::first_index() const {
  std::lock_guard lock(mutex_);
  for (unsigned long k = 0;; ++k) {
    if (!ensure(k)) return k;
    if (rational_height(make_rational(p_[k], q_[k])) >= 2) return k;
  }
}

std::string CFNumber::describe() const {
  std::lock_guard lock(mutex_);
  std::string s = "cf:[" + a_[0].get_str();
  for (std::size_t i = 1; i < prefix_; ++i) s += (i == 1 ? ";" : ",") + a_[i].get_str();
  return s + (rule_ ? ",...]" : "]");
}

std::shared_ptr<CFNumber> build_strong_cf(std::function<unsigned long(unsigned long)> n_schedule, std::size_t count) {
  if (count < 2) throw Error(ErrorCode::InvalidArgument, "build_strong_cf needs count >= 2");
  auto rule = [n_schedule](unsigned long k, const Integer& qk) { return pow(qk, n_schedule(k)); };
  std::vector<Integer> a{0, 2};
  Integer q_prev = 1, q = 2;  // q_0, q_1
  for (std::size_t k = 1; k < count; ++k) {
    Integer next = rule(k, q);
    a.push_back(next);
    Integer q_next = next * q + q_prev;
    q_prev = q;
    q = q_next;
  }
  return std::make_shared<CFNumber>(std::move(a), rule);
}

std::vector<Integer> cf_expansion(const Refiner& x, std::size_t count, unsigned budget) {
  std::vector<Integer> out;
  // p_{j-1}, p_{j-2}, q_{j-1}, q_{j-2}
  Integer p1 = 1, p2 = 0, q1 = 0, q2 = 1;
  Rational width = pow2(-64);
  RationalInterval X = x(width);
  unsigned rounds = 0;
  while (out.size() < count) {
    // Complete quotient t = (q2 xi - p2) / (p1 - q1 xi).
    std::optional<Integer> a;
    try {
      const RationalInterval P1{Rational(p1)}, P2{Rational(p2)}, Q1{Rational(q1)}, Q2{Rational(q2)};
      RationalInterval t = (Q2 * X - P2) / (P1 - Q1 * X);
      Integer lo = floor(t.lo()), hi = floor(t.hi());
      if (lo == hi && (out.empty() || lo >= 1)) a = lo;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DivisionByIntervalContainingZero) throw;
    }
    if (!a) {
      if (++rounds > budget)
        throw Error(ErrorCode::RefinementBudgetExceeded, "partial quotient " + std::to_string(out.size()) + " not certified within budget");
      width = width * width;
      X = x(width);
      continue;
    }
    out.push_back(*a);
    Integer p0 = *a * p1 + p2, q0 = *a * q1 + q2;
    p2 = p1;
    p1 = p0;
    q2 = q1;
    q1 = q0;
  }
  return out;
}

Witness make_witness(const ApproximableReal& x, const std::vector<unsigned long>& ks) {
  Witness w;
  for (unsigned long k : ks) w.entries.push_back({x.convergent(k), x.omega(k)});
  return w;
}

namespace {

// H1 <= H0^(C t^(1+eps)).
bool growth_ok(const Integer& h1, const Integer& h0, const Rational& C, const Rational& t, const Rational& eps) {
  if (eps.get_den() == 1) {
    Rational e = C * pow(t, eps.get_num().get_si() + 1);
    return power_le(h1, h0, e);
  }
  if (h1 <= 1) return true;
  if (h0 <= 1) return false;
  // log H1 / log H0 <= C t * t^(u/w)  <=>  (log H1 / (C t log H0))^w <= t^u
  const long u = eps.get_num().get_si(), w = eps.get_den().get_si();
  const Rational tu = pow(t, u);
  for (unsigned precision = 64; precision <= 8192; precision *= 2) {
    RationalInterval r = log2_enclosure(h1, precision) / log2_enclosure(h0, precision) / RationalInterval(C * t);
    RationalInterval rw = pow(r, w);
    if (rw.hi() <= tu) return true;
    if (rw.lo() > tu) return false;
  }
  throw Error(ErrorCode::ComparisonUndecided, "height growth comparison undecided");
}

}  // namespace

ClassVerdict classify_witness(const Witness& w, const Rational& C, const Rational& epsilon) {
  if (w.entries.size() < 2) throw Error(ErrorCode::TooFewEntries, "a witness needs at least two entries");
  if (sgn(C) <= 0) throw Error(ErrorCode::InvalidArgument, "C must be positive");
  if (sgn(epsilon) < 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be non-negative");
  ClassVerdict v;
  v.class_name = "L_epsilon(" + to_string(epsilon) + ")";
  v.C = C;
  for (std::size_t i = 0; i + 1 < w.entries.size(); ++i) {
    const auto& a = w.entries[i];
    const auto& b = w.entries[i + 1];
    if (!growth_ok(rational_height(b.convergent.value), rational_height(a.convergent.value), C, a.omega.hi(), epsilon)) {
      v.passes = false;
      v.first_failure_index = a.convergent.k;
      break;
    }
  }
  return v;
}

ClassVerdict strong_prefix_check(const CFNumber& cf, unsigned long n, unsigned long N) {
  const std::size_t last = cf.prefix_length() - 1;  // q_0..q_last materialized
  if (N + 1 > last) throw Error(ErrorCode::TooFewEntries, "strong prefix check needs q_0..q_" + std::to_string(N + 1));
  ClassVerdict v;
  v.class_name = "strong_prefix";
  v.C = Rational(n);
  for (unsigned long k = N + 1; k < last; ++k) {
    if (!(cf.q(k + 1) > pow(cf.q(k), n))) {
      v.passes = false;
      v.first_failure_index = k;
      break;
    }
  }
  return v;
}

}  // namespace lvt
