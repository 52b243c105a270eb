#include "lvt/cli/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "lvt/algebraic/lemmas.hpp"
#include "lvt/rmap/theorem.hpp"

namespace lvt::cli {

namespace {

using Json = nlohmann::ordered_json;

Json interval_json(const RationalInterval& x) { return Json::array({to_string(x.lo()), to_string(x.hi())}); }

std::string interval_approx(const RationalInterval& x) { return "[" + approx(x.lo()) + ", " + approx(x.hi()) + "]"; }

Json poly_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_string(c));
  return a;
}

Json algebraic_json(const AlgebraicNumber& a) {
  return Json{{"min_poly", poly_json(a.min_poly)}, {"degree", a.degree}, {"height", to_string(a.height)}, {"iso", interval_json(a.iso)}};
}

std::string digits(const Integer& n) {
  std::string s = to_string(n);
  return s.size() <= 12 ? s : s.substr(0, 3) + "...(" + std::to_string(s.size()) + " digits)";
}

const char* yes(bool b) { return b ? "yes" : "no"; }

// ---- options shared by subcommands ----------------------------------------

struct Options {
  std::string number = "ell";
  std::string field = "root:2:2";
  std::string map = "theta*x";
  std::string k = "2..6";
  std::string C;  // empty: measured
  std::string eps = "0";
  std::string alpha;
  std::string preset;
  int deg = 1;
  std::string height = "10";
  int lemma = 2;
  unsigned long seed = 1;
  int count = 100;
  unsigned budget = 16;
  bool json = false;
  // classify
  unsigned long strong_n = 0, strong_from = 1;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Integer parse_height(const std::string& s) {
  Integer h = parse_integer(s);
  if (h < 1) throw Error(ErrorCode::InvalidArgument, "height must be positive");
  return h;
}

// ---- construct ------------------------------------------------------------

int cmd_construct(const Options& o, std::ostream& out) {
  auto xi = parse_number(o.number);
  Json rows = Json::array();
  for (unsigned long k : parse_k_range(o.k)) {
    Convergent c = xi->convergent(k);
    rows.push_back(Json{{"k", k},
                        {"convergent", to_string(c.value)},
                        {"height", to_string(rational_height(c.value))},
                        {"gap", interval_json(c.gap)},
                        {"omega", interval_json(xi->omega(k))}});
  }
  if (o.json) {
    emit(out, Json{{"number", xi->describe()}, {"convergents", rows}});
    return 0;
  }
  out << xi->describe() << "\n";
  out << std::left << std::setw(4) << "k" << std::setw(22) << "H(p_k/q_k)" << std::setw(36) << "gap" << "omega\n";
  for (unsigned long k : parse_k_range(o.k)) {
    Convergent c = xi->convergent(k);
    out << std::setw(4) << k << std::setw(22) << digits(rational_height(c.value)) << std::setw(36) << interval_approx(c.gap)
        << interval_approx(xi->omega(k)) << "\n";
  }
  return 0;
}

// ---- cf -------------------------------------------------------------------

int print_quotients(const Options& o, std::ostream& out, const std::string& what, const std::vector<Integer>& a);

int cmd_cf(const Options& o, std::ostream& out) {
  Refiner r;
  std::string what;
  if (o.number.rfind("alg:", 0) == 0) {
    std::string spec = o.number.substr(4);
    auto at = spec.find('@');
    if (at == std::string::npos) throw Error(ErrorCode::ParseError, "alg: needs poly@[lo,hi]");
    FieldPtr K = parse_field_spec(spec);
    AlgebraicNumber a = minimal_polynomial(FieldElement::generator(K));
    r = [a](const Rational& w) { return real_enclosure(a, w); };
    what = "root of " + to_string(a.min_poly);
  } else {
    auto xi = parse_number(o.number);
    r = [xi](const Rational& w) { return xi->enclosure(w); };
    what = xi->describe();
    // quotients of a continued fraction are known exactly
    if (auto cfn = std::dynamic_pointer_cast<CFNumber>(xi)) {
      if (!cfn->extensible() && static_cast<std::size_t>(o.count) > cfn->prefix_length())
        throw Error(ErrorCode::TooFewEntries, "only " + std::to_string(cfn->prefix_length()) + " quotients given");
      std::vector<Integer> a;
      for (int k = 0; k < o.count; ++k) a.push_back(cfn->quotient(k));
      return print_quotients(o, out, what, a);
    }
  }
  return print_quotients(o, out, what, cf_expansion(r, static_cast<std::size_t>(o.count), o.budget));
}

int print_quotients(const Options& o, std::ostream& out, const std::string& what, const std::vector<Integer>& a) {
  Json q = Json::array();
  for (const auto& v : a) q.push_back(to_string(v));
  if (o.json) {
    emit(out, Json{{"number", what}, {"quotients", q}});
  } else {
    out << what << "\n[";
    for (std::size_t i = 0; i < a.size(); ++i) out << (i == 0 ? "" : i == 1 ? "; " : ", ") << a[i];
    out << "]\n";
  }
  return 0;
}

// ---- classify -------------------------------------------------------------

int cmd_classify(const Options& o, std::ostream& out) {
  auto xi = parse_number(o.number);
  ClassVerdict v;
  if (o.strong_n > 0) {
    auto cf = std::dynamic_pointer_cast<CFNumber>(xi);
    if (!cf) throw Error(ErrorCode::InvalidArgument, "--strong needs a continued fraction number");
    v = strong_prefix_check(*cf, o.strong_n, o.strong_from);
  } else {
    Rational C = o.C.empty() ? Rational(11, 10) : parse_rational(o.C);
    v = classify_witness(make_witness(*xi, parse_k_range(o.k)), C, parse_rational(o.eps));
  }
  Json j{{"number", xi->describe()}, {"class", v.class_name}, {"C", to_string(v.C)}, {"passes", v.passes}};
  j["first_failure_index"] = v.first_failure_index ? Json(*v.first_failure_index) : Json(nullptr);
  if (o.json) {
    emit(out, j);
  } else {
    out << xi->describe() << "\n" << v.class_name << " with C = " << to_string(v.C) << ": " << (v.passes ? "passes" : "fails");
    if (v.first_failure_index) out << " (first failure at k = " << *v.first_failure_index << ")";
    out << "\n";
  }
  return v.passes ? 0 : 1;
}

// ---- map-eval -------------------------------------------------------------

int cmd_map_eval(const Options& o, std::ostream& out) {
  FieldPtr K = parse_field_spec(o.field);
  RationalMap F = parse_map(o.map, K);
  if (!o.alpha.empty()) {
    Rational alpha = parse_rational(o.alpha);
    AlgebraicNumber g = eval_at_rational(F, alpha);
    Json j{{"field", K->to_spec()}, {"map", o.map}, {"alpha", to_string(alpha)}, {"gamma", algebraic_json(g)}, {"primitive", g.degree == K->degree()}};
    if (o.json)
      emit(out, j);
    else
      out << "F(" << to_string(alpha) << ") = " << to_string(g) << "\ndegree " << g.degree << " of " << K->degree() << ", height "
          << g.height << "\n";
    return 0;
  }
  PrimitivityScan s = primitivity_scan(F, parse_height(o.height));
  Json ex = Json::array(), poles = Json::array();
  for (const auto& e : s.exceptions) ex.push_back(to_string(e));
  for (const auto& p : s.poles) poles.push_back(to_string(p));
  if (o.json) {
    emit(out, Json{{"field", K->to_spec()}, {"map", o.map}, {"height_cap", o.height}, {"scanned", s.scanned}, {"exceptions", ex}, {"poles", poles}});
  } else {
    out << "scanned " << s.scanned << " rationals of height <= " << o.height << "\nexceptions (degree < " << K->degree() << "): " << ex.dump()
        << "\npoles: " << poles.dump() << "\n";
  }
  return 0;
}

// ---- verify-theorem -------------------------------------------------------

struct ChainRun {
  std::string field, map;
  Json json;
  bool pass = false;
};

ChainRun chain(const Options& o, const std::string& field, const std::string& map) {
  auto xi = parse_number(o.number);
  FieldPtr K = parse_field_spec(field);
  RationalMap F = parse_map(map, K);
  auto recs = approximant_sequence(*xi, F, parse_k_range(o.k));
  Rational C = o.C.empty() ? measure_growth_constant(recs) : parse_rational(o.C);
  TheoremReport rep = verify_theorem_chain(recs, C, K->degree());
  Json rows = Json::array();
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& r = rep.rows[i];
    Json checks{{"eq6", r.eq6}, {"eq7", r.eq7}, {"eq9", r.eq9}};
    if (r.eq12) checks["eq12"] = *r.eq12;
    Json row{{"k", r.k},
             {"h_alpha", to_string(r.h_alpha)},
             {"h_gamma", to_string(r.h_gamma)},
             {"gap", interval_json(r.gap)},
             {"e", interval_json(r.e)},
             {"checks", checks},
             {"alpha", to_string(recs[i].alpha)},
             {"gamma_degree", recs[i].gamma.degree},
             {"omega", interval_json(r.omega)},
             {"log2_ratio6", interval_json(r.log2_ratio6)},
             {"mvt_bound", to_string(r.mvt_bound)},
             {"ratio7", to_string(r.ratio7)}};
    if (r.log2_ratio12) row["log2_ratio12"] = interval_json(*r.log2_ratio12);
    rows.push_back(row);
  }
  ChainRun run;
  run.field = K->to_spec();
  run.map = map;
  run.pass = rep.all_pass();
  run.json = Json{{"number", xi->describe()}, {"field", run.field}, {"map", map}, {"m", rep.m}, {"C", to_string(rep.C)},
                  {"records", rows},      {"monotone_e", rep.monotone_e},      {"pass", run.pass}};
  return run;
}

void print_chain(std::ostream& out, const ChainRun& r) {
  const Json& j = r.json;
  out << j["number"].get<std::string>() << ", F = " << r.map << " over " << r.field << ", m = " << j["m"] << ", C = " << j["C"].get<std::string>()
      << "\n";
  out << std::left << std::setw(4) << "k" << std::setw(24) << "H(alpha_k)" << std::setw(24) << "H(gamma_k)" << std::setw(5) << "deg"
      << std::setw(34) << "gap" << std::setw(22) << "e_k" << "eq6 eq7 eq9 eq12\n";
  for (const auto& row : j["records"]) {
    auto iv = [](const Json& a) {
      return RationalInterval(parse_rational(a[0].get<std::string>()), parse_rational(a[1].get<std::string>()));
    };
    const Json& c = row["checks"];
    out << std::setw(4) << row["k"].get<unsigned long>() << std::setw(24) << digits(parse_integer(row["h_alpha"].get<std::string>()))
        << std::setw(24) << digits(parse_integer(row["h_gamma"].get<std::string>())) << std::setw(5) << row["gamma_degree"].get<int>()
        << std::setw(34) << interval_approx(iv(row["gap"])) << std::setw(22) << interval_approx(iv(row["e"])) << std::setw(4)
        << yes(c["eq6"]) << std::setw(4) << yes(c["eq7"]) << std::setw(4) << yes(c["eq9"]) << (c.contains("eq12") ? yes(c["eq12"]) : "-")
        << "\n";
  }
  out << "e_k increasing: " << yes(j["monotone_e"]) << "; all checks " << (r.pass ? "pass" : "FAIL") << "\n";
}

// Corollary presets: name:m:p (cor2i, cor2ii) or cor3:m:s.
std::vector<std::pair<std::string, std::string>> expand_preset(const std::string& preset) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t p; (p = preset.find(':', start)) != std::string::npos; start = p + 1) parts.push_back(preset.substr(start, p - start));
  parts.push_back(preset.substr(start));
  auto num = [&](std::size_t i, unsigned long dflt) {
    if (i >= parts.size()) return dflt;
    unsigned long v = std::stoul(parts[i]);
    if (v < 1 || v > 64) throw Error(ErrorCode::InvalidArgument, "preset parameter out of range");
    return v;
  };
  std::vector<std::pair<std::string, std::string>> runs;
  const std::string name = parts[0];
  if (name == "cor2i") {
    // (p^(1/m) l)^(m/d) = p^(1/d) l^(m/d) for each divisor d of m
    unsigned long m = num(1, 2), p = num(2, 2);
    for (unsigned long d = 1; d <= m; ++d)
      if (m % d == 0) runs.emplace_back("root:" + std::to_string(m) + ":" + std::to_string(p), "(theta*x)^" + std::to_string(m / d));
  } else if (name == "cor2ii") {
    // ((1 + p^(1/m)) l)^j stays of degree m
    unsigned long m = num(1, 2), p = num(2, 2), powers = num(3, 3);
    for (unsigned long j = 1; j <= powers; ++j)
      runs.emplace_back("root:" + std::to_string(m) + ":" + std::to_string(p), "((1+theta)*x)^" + std::to_string(j));
  } else if (name == "cor3") {
    // F(x) = 2^(1/s) x^m at xi = 2^(1/m) l, i.e. 2 * 2^(1/s) l^m
    unsigned long m = num(1, 2), s = num(2, 2);
    runs.emplace_back(s == 1 ? "Q" : "root:" + std::to_string(s) + ":2", (s == 1 ? "2*x^" : "2*theta*x^") + std::to_string(m));
  } else {
    throw Error(ErrorCode::ParseError, "unknown preset '" + preset + "' (cor2i, cor2ii, cor3)");
  }
  return runs;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> runs;
  if (!o.preset.empty())
    runs = expand_preset(o.preset);
  else
    runs.emplace_back(o.field, o.map);
  bool pass = true;
  Json all = Json::array();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    ChainRun r = chain(o, runs[i].first, runs[i].second);
    pass = pass && r.pass;
    if (o.json)
      all.push_back(r.json);
    else {
      if (i) out << "\n";
      print_chain(out, r);
    }
  }
  if (o.json) emit(out, runs.size() == 1 && o.preset.empty() ? all[0] : all);
  return pass ? 0 : 1;
}

// ---- audit-degree ---------------------------------------------------------

int cmd_audit(const Options& o, std::ostream& out) {
  auto xi = parse_number(o.number);
  FieldPtr K = parse_field_spec(o.field);
  RationalMap F = parse_map(o.map, K);
  auto recs = approximant_sequence(*xi, F, parse_k_range(o.k));
  Rational C = o.C.empty() ? measure_growth_constant(recs) : parse_rational(o.C);
  BoundSpec spec{o.deg, parse_height(o.height)};
  AuditReport rep = lower_degree_audit(map_of(xi, F), o.deg, spec, recs, C, K->degree(), Execution::Parallel, o.budget);
  bool pass = rep.all_separated && rep.triangle_violations == 0;
  Json worst = nullptr;
  if (rep.worst)
    worst = Json{{"candidate", algebraic_json(rep.worst->candidate)},
                 {"distance", interval_json(rep.worst->distance)},
                 {"exponent", interval_json(rep.worst->exponent)}};
  if (o.json) {
    emit(out, Json{{"number", xi->describe()},
                   {"field", K->to_spec()},
                   {"map", o.map},
                   {"n", rep.n},
                   {"m", rep.m},
                   {"spec", Json{{"max_degree", spec.max_degree}, {"max_height", to_string(spec.max_height)}}},
                   {"C", to_string(rep.C)},
                   {"candidates", rep.candidates},
                   {"audited", rep.audited},
                   {"worst", worst},
                   {"all_separated", rep.all_separated},
                   {"triangle", Json{{"pairs", rep.triangle_pairs}, {"violations", rep.triangle_violations}}},
                   {"final_bound", to_string(rep.final_bound)},
                   {"pass", pass}});
  } else {
    out << "F(xi) for " << xi->describe() << ", F = " << o.map << " over " << K->to_spec() << "\n"
        << "degree <= " << rep.n << ", height <= " << o.height << ": " << rep.candidates << " candidates, " << rep.audited << " with height >= 2\n";
    if (rep.worst)
      out << "worst: " << to_string(rep.worst->candidate) << ", exponent " << interval_approx(rep.worst->exponent) << "\n";
    out << "all separated: " << yes(rep.all_separated) << "\ntriangle route: " << rep.triangle_violations << " violations in "
        << rep.triangle_pairs << " pairs\nbound m + 16Cnm^6 = " << approx(rep.final_bound) << "\n";
  }
  return pass ? 0 : 1;
}

// ---- check-lemmas ---------------------------------------------------------

FieldElement random_element(std::mt19937_64& rng, const FieldPtr& K, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  std::vector<Rational> c;
  for (int i = 0; i < K->degree(); ++i) c.push_back(make_rational(num(rng), den(rng)));
  return FieldElement(K, std::move(c));
}

int cmd_lemmas(const Options& o, std::ostream& out) {
  Json j{{"lemma", o.lemma}};
  std::size_t instances = 0, violations = 0;
  std::mt19937_64 rng(o.seed);
  if (o.lemma == 2) {
    auto nums = enumerate_algebraics(BoundSpec{o.deg, parse_height(o.height)});
    Lemma2Sweep s = lemma2_sweep(nums);
    instances = s.pairs;
    violations = s.violations;
    j["numbers"] = s.numbers;
    if (s.first_violation) j["first_violation"] = Json::array({s.first_violation->first, s.first_violation->second});
  } else if (o.lemma == 3) {
    FieldPtr K = parse_field_spec(o.field);
    for (int i = 0; i < o.count; ++i) {
      std::vector<FieldElement> xs{random_element(rng, K, 100), random_element(rng, K, 100)};
      violations += !height_bound_sum(xs).ok;
      violations += !height_bound_product(xs).ok;
      instances += 2;
    }
    j["field"] = K->to_spec();
  } else if (o.lemma == 1) {
    // gamma Q(alpha) - P(alpha) = 0 with random P, Q over K and rational alpha
    FieldPtr K = parse_field_spec(o.field);
    std::uniform_int_distribution<int> small(-9, 9), ldeg(2, 3), rdeg(0, 2);
    while (instances < static_cast<std::size_t>(o.count)) {
      const int l = ldeg(rng), r = rdeg(rng);
      std::vector<FieldElement> a, b;
      for (int i = 0; i <= l; ++i) a.push_back(random_element(rng, K, 9));
      for (int i = 0; i <= r; ++i) b.push_back(random_element(rng, K, 9));
      Rational alpha = make_rational(small(rng), 1 + std::abs(small(rng)));
      FieldElement P = FieldElement::from_rational(K, 0), Q = P;
      for (int i = l; i >= 0; --i) P = alpha * P + a[i];
      for (int i = r; i >= 0; --i) Q = alpha * Q + b[i];
      if (a.back().is_zero() || b.back().is_zero() || P.is_zero() || Q.is_zero()) continue;
      const std::size_t vars = 3 + r + l + 1;
      IntMultiPolynomial G(vars);
      for (int i = 0; i <= r; ++i) {
        std::vector<unsigned> e(vars, 0);
        e[0] = i;
        e[1] = 1;
        e[2 + i] = 1;
        G.add_term(e, 1);
      }
      for (int i = 0; i <= l; ++i) {
        std::vector<unsigned> e(vars, 0);
        e[0] = i;
        e[3 + r + i] = 1;
        G.add_term(e, -1);
      }
      std::vector<FieldElement> xs{P / Q};
      xs.insert(xs.end(), b.begin(), b.end());
      xs.insert(xs.end(), a.begin(), a.end());
      IcenResult res = icen_check(G, xs, AlgebraicNumber::from_rational(alpha));
      violations += !(res.degree_ok && res.height_ok);
      ++instances;
    }
    j["field"] = K->to_spec();
  } else {
    throw Error(ErrorCode::InvalidArgument, "--lemma must be 1, 2 or 3");
  }
  j["instances"] = instances;
  j["violations"] = violations;
  if (o.json)
    emit(out, j);
  else
    out << "Lemma " << o.lemma << ": " << instances << " instances, " << violations << " violations\n";
  return violations == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options o;
  o.budget = default_refine_budget();
  CLI::App app{"Exact experiments with Liouville numbers under rational maps", "lvtool"};
  app.require_subcommand(1);

  auto number = [&](CLI::App* c) { c->add_option("--number", o.number, "series:10:factorial, cf:0,9,11, strongcf:k, ell, or JSON"); };
  auto json = [&](CLI::App* c) { c->add_flag("--json", o.json, "JSON report"); };
  auto krange = [&](CLI::App* c) { c->add_option("--k", o.k, "indices: 2..6 or 1,3,5"); };
  auto map = [&](CLI::App* c) {
    c->add_option("--field", o.field, "Q, root:m:p, or poly@[lo,hi]");
    c->add_option("--map", o.map, "theta*x, (theta*x+1)/(x+2), or {\"num\":..,\"den\":..}");
  };
  auto budget = [&](CLI::App* c) { c->add_option("--refine-budget", o.budget, "refinement rounds (default LVT_REFINE_BUDGET or 16)")->check(CLI::Range(1, 999)); };

  auto* construct = app.add_subcommand("construct", "convergents, tail gaps and exponents of a number");
  number(construct), krange(construct), json(construct);

  auto* cf = app.add_subcommand("cf", "partial quotients of a number (also alg:poly@[lo,hi])");
  number(cf), json(cf), budget(cf);
  cf->add_option("--count", o.count, "number of quotients")->check(CLI::Range(1, 100000));

  auto* classify = app.add_subcommand("classify", "growth-class test of a witness");
  number(classify), krange(classify), json(classify);
  classify->add_option("--C", o.C, "growth constant (default 1.1)");
  classify->add_option("--eps", o.eps, "epsilon");
  classify->add_option("--strong", o.strong_n, "strong-CF prefix check q_{k+1} > q_k^n for this n");
  classify->add_option("--from", o.strong_from, "N for --strong (checks k > N)");

  auto* meval = app.add_subcommand("map-eval", "gamma = F(alpha), or a primitivity scan with --height");
  map(meval), json(meval);
  meval->add_option("--alpha", o.alpha, "rational point");
  meval->add_option("--height", o.height, "height cap of the scan");

  auto* verify = app.add_subcommand("verify-theorem", "approximants F(alpha_k) and the inequality chain");
  number(verify), map(verify), krange(verify), json(verify);
  verify->add_option("--C", o.C, "growth constant (default measured)");
  verify->add_option("--preset", o.preset, "cor2i:m:p, cor2ii:m:p[:powers], cor3:m:s");

  auto* audit = app.add_subcommand("audit-degree", "separation of F(xi) from algebraic numbers of lower degree");
  number(audit), map(audit), krange(audit), json(audit), budget(audit);
  audit->add_option("--C", o.C, "growth constant (default measured)");
  audit->add_option("--deg", o.deg, "audited degree n < m")->check(CLI::Range(1, 16));
  audit->add_option("--height", o.height, "height cap");

  auto* lemmas = app.add_subcommand("check-lemmas", "exhaustive or randomized lemma checks");
  json(lemmas);
  lemmas->add_option("--lemma", o.lemma, "1, 2 or 3");
  lemmas->add_option("--deg", o.deg, "degree bound (Lemma 2)")->check(CLI::Range(1, 16));
  lemmas->add_option("--height", o.height, "height bound (Lemma 2)");
  lemmas->add_option("--field", o.field, "field (Lemmas 1, 3)");
  lemmas->add_option("--count", o.count, "instances (Lemmas 1, 3)")->check(CLI::Range(1, 1000000));
  lemmas->add_option("--seed", o.seed, "random seed");

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "lvtool: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*construct) return cmd_construct(o, out);
    if (*cf) return cmd_cf(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*meval) return cmd_map_eval(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*audit) return cmd_audit(o, out);
    if (*lemmas) return cmd_lemmas(o, out);
  } catch (const Error& e) {
    err << "lvtool: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "lvtool: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace lvt::cli
