#include "lvt/rmap/theorem.hpp"

#include <algorithm>
#include <exception>

#include "lvt/algebraic/lemmas.hpp"
#include "lvt/exact/log2.hpp"

namespace lvt {

namespace {

// Outward rounding that keeps about 8 bits below `width`.
RationalInterval compact(const RationalInterval& X, const Rational& width) {
  Rational mag = X.magnitude();
  if (mag == 0) return X;
  long bits = ceil_log2(mag) - ceil_log2(width) + 8;
  return round_outward(X, static_cast<unsigned>(std::max(bits, 8L)));
}

// Decides lhs.hi <= rhs.lo for log enclosures computed at rising precision.
// Undecided at the last precision counts as false.
template <class Lhs, class Rhs>
bool log_le(Lhs&& lhs, Rhs&& rhs) {
  for (unsigned prec : {64u, 256u, 1024u, 4096u}) {
    RationalInterval a = lhs(prec), b = rhs(prec);
    if (a.hi() <= b.lo()) return true;
    if (a.lo() > b.hi()) return false;
  }
  return false;
}

}  // namespace

std::vector<ApproximantRecord> approximant_sequence(const ApproximableReal& xi, const RationalMap& F,
                                                    const std::vector<unsigned long>& ks) {
  std::vector<ApproximantRecord> out;
  out.reserve(ks.size());
  for (unsigned long k : ks) {
    Convergent c = xi.convergent(k);
    ApproximantRecord r;
    r.k = k;
    r.alpha = c.value;
    r.gamma = eval_at_rational(F, c.value);
    r.h_alpha = rational_height(c.value);
    r.h_gamma = r.gamma.height;
    r.omega = xi.omega(k);
    if (sgn(c.gap.lo()) <= 0) throw Error(ErrorCode::InvalidArgument, "convergent " + std::to_string(k) + " has no tail bound");
    Rational w = c.gap.lo() / 4096;
    RationalInterval X;
    for (int round = 0;; ++round) {
      X = compact(xi.enclosure(w), w);
      RationalInterval FX = map_enclosure(F, X);
      RationalInterval G = real_enclosure(r.gamma, w / 16);
      r.gap = abs(FX - G);
      if (sgn(r.gap.lo()) > 0) break;
      // F(xi) = gamma_k would mean xi is algebraic; give up eventually.
      if (round == 16) throw Error(ErrorCode::RefinementBudgetExceeded, "cannot separate F(xi) from gamma_" + std::to_string(k));
      w /= 65536;
    }
    r.mvt_bound = derivative_bound(F, hull(X, RationalInterval(r.alpha)));
    out.push_back(std::move(r));
  }
  return out;
}

bool TheoremReport::all_pass() const {
  if (!monotone_e) return false;
  return std::all_of(rows.begin(), rows.end(), [](const TheoremRow& r) { return r.eq6 && r.eq7 && r.eq9 && r.eq12.value_or(true); });
}

Rational measure_growth_constant(const std::vector<ApproximantRecord>& records) {
  Rational C = 1 + pow2(-24);
  bool any = false;
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    const auto& a = records[i];
    const auto& b = records[i + 1];
    if (b.k != a.k + 1 || sgn(a.omega.lo()) <= 0 || a.h_alpha < 2) continue;
    Rational ratio = log2_enclosure(b.h_alpha).hi() / (a.omega.lo() * log2_enclosure(a.h_alpha).lo());
    C = std::max(C, ceil_to_grid(ratio, 24));
    any = true;
  }
  if (!any) throw Error(ErrorCode::TooFewEntries, "growth constant needs two consecutive records");
  return C;
}

TheoremReport verify_theorem_chain(const std::vector<ApproximantRecord>& records, const Rational& C, int m) {
  if (records.empty()) throw Error(ErrorCode::EmptyRecords, "no approximant records");
  if (C <= 1) throw Error(ErrorCode::InvalidArgument, "growth constant must exceed 1");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "field degree must be positive");
  TheoremReport rep;
  rep.m = m;
  rep.C = C;
  const long m2 = static_cast<long>(m) * m;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    TheoremRow row;
    row.k = r.k;
    row.h_alpha = r.h_alpha;
    row.h_gamma = r.h_gamma;
    row.gap = r.gap;
    row.omega = r.omega;
    row.mvt_bound = r.mvt_bound;

    // Eq. (6): gap <= c * H(alpha)^(-omega), with c the MVT constant.
    auto ratio6 = [&](unsigned prec) {
      return log2_enclosure(r.gap.hi(), prec) + RationalInterval(r.omega.lo()) * log2_enclosure(r.h_alpha, prec);
    };
    row.log2_ratio6 = ratio6(64);
    row.eq6 = sgn(r.gap.hi()) > 0 && sgn(r.mvt_bound) > 0 &&
              log_le(ratio6, [&](unsigned prec) { return log2_enclosure(r.mvt_bound, prec); });

    // Eq. (7)
    row.ratio7 = Rational(r.h_gamma) / pow(Rational(r.h_alpha), 2 * m2);
    row.eq7 = row.ratio7 <= 1;

    // Eq. (9)
    if (r.h_gamma >= 2 && sgn(r.gap.lo()) > 0) {
      row.e = neg_log_ratio(r.gap, r.h_gamma);
      row.eq9 = row.e.lo() >= r.omega.lo() / (4 * m2);
    }

    // Eq. (12)
    if (i + 1 < records.size() && records[i + 1].k == r.k + 1) {
      const Integer& next = records[i + 1].h_gamma;
      Rational slope = 2 * C * m2 * r.omega.lo();
      auto ratio12 = [&](unsigned prec) {
        return log2_enclosure(next, prec) - RationalInterval(slope) * log2_enclosure(r.h_alpha, prec);
      };
      row.log2_ratio12 = ratio12(64);
      row.eq12 = log_le(ratio12, [](unsigned) { return RationalInterval(Rational(0)); });
    }
    if (!rep.rows.empty() && !(row.e.lo() > rep.rows.back().e.lo())) rep.monotone_e = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Refiner map_of(std::shared_ptr<const ApproximableReal> xi, RationalMap F) {
  return [xi = std::move(xi), F = std::move(F)](const Rational& width) {
    Rational w = width / 4;
    for (int round = 0; round < 64; ++round) {
      RationalInterval FX = map_enclosure(F, compact(xi->enclosure(w), w));
      if (FX.width() <= width) return FX;
      w /= 256;
    }
    throw Error(ErrorCode::RefinementBudgetExceeded, "F(xi) enclosure does not shrink");
  };
}

namespace {

struct Slot {
  RationalInterval distance, exponent;
  bool separated = false;
  std::size_t triangle_pairs = 0, triangle_violations = 0;
  std::exception_ptr error;
};

}  // namespace

AuditReport lower_degree_audit(const Refiner& F_of_xi, int n, const BoundSpec& spec,
                               const std::vector<ApproximantRecord>& records, const Rational& C, int m,
                               Execution exec, unsigned budget) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "audited degree must be positive");
  if (n >= m) throw Error(ErrorCode::DegreeNotBelowM, "audit degree " + std::to_string(n) + " is not below m = " + std::to_string(m));
  if (spec.max_degree != n) throw Error(ErrorCode::InvalidArgument, "window degree must equal the audited degree");
  if (C <= 1) throw Error(ErrorCode::InvalidArgument, "growth constant must exceed 1");

  AuditReport rep;
  rep.n = n;
  rep.m = m;
  rep.spec = spec;
  rep.C = C;
  rep.final_bound = m + 16 * C * n * pow(Rational(m), 6);

  const auto cands = enumerate_algebraics(spec, exec);
  rep.candidates = cands.size();

  // gamma_k enclosures shared by all candidates: tight enough for the
  // smallest separation bound any candidate can have.
  std::vector<RationalInterval> gk(records.size());
  for (std::size_t j = 0; j < records.size(); ++j) {
    const auto& g = records[j].gamma;
    Rational w = bombieri_bound(1, spec.max_height, g.degree, g.height);
    for (int d = 2; d <= n; ++d) w = std::min(w, bombieri_bound(d, spec.max_height, g.degree, g.height));
    gk[j] = real_enclosure(g, w / 4);
  }

  const Rational w0 = pow2(-96);
  const RationalInterval base = F_of_xi(w0);
  const Rational tight = pow2(-16);

  std::vector<Slot> slots(cands.size());
  const auto count = static_cast<long>(cands.size());
#pragma omp parallel for schedule(dynamic, 64) if (exec == Execution::Parallel)
  for (long i = 0; i < count; ++i) {
    Slot& s = slots[i];
    const AlgebraicNumber& c = cands[i];
    try {
      Rational w = w0;
      RationalInterval Y = base;
      for (unsigned round = 0;; ++round) {
        s.distance = abs(Y - real_enclosure(c, w));
        s.separated = sgn(s.distance.lo()) > 0;
        if (s.separated && s.distance.width() <= s.distance.lo() * tight) break;
        if (round == budget) break;
        w *= pow2(-32);
        Y = F_of_xi(w);
      }
      if (s.separated && c.height >= 2) s.exponent = neg_log_ratio(s.distance, c.height);

      // Lemma 2 along the triangle route: |gamma - gamma_k| must beat the
      // separation bound for every approximant gamma_k.
      for (std::size_t j = 0; j < records.size(); ++j) {
        const auto& g = records[j].gamma;
        if (same_number(c, g)) continue;
        ++s.triangle_pairs;
        Rational bound = bombieri_bound(c.degree, c.height, g.degree, g.height);
        RationalInterval dist = abs(real_enclosure(c, gk[j].width()) - gk[j]);
        if (dist.lo() > bound) continue;
        if (!bombieri_gap_check(c, g).verified) ++s.triangle_violations;
      }
    } catch (...) {
      s.error = std::current_exception();
    }
  }

  rep.all_separated = true;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const Slot& s = slots[i];
    if (s.error) std::rethrow_exception(s.error);
    rep.triangle_pairs += s.triangle_pairs;
    rep.triangle_violations += s.triangle_violations;
    if (!s.separated) {
      rep.all_separated = false;
      continue;
    }
    if (cands[i].height < 2) continue;
    ++rep.audited;
    if (!rep.worst || s.exponent.hi() > rep.worst->exponent.hi()) rep.worst = AuditCandidate{cands[i], s.distance, s.exponent};
  }
  return rep;
}

}  // namespace lvt
