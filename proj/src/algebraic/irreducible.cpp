#include "lvt/algebraic/irreducible.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lvt/exact/roots.hpp"

namespace lvt {

std::optional<Rational> find_rational_root(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "rational root of the zero polynomial");
  if (p.degree() < 1) return std::nullopt;
  IntPolynomial s = squarefree_part(p);
  const Integer lead = abs(s.leading());
  for (const auto& iso : isolate_real_roots(s)) {
    if (iso.is_point()) return iso.lo();
    // Any rational root u/v has v | lead, so lead * root is an integer.
    RationalInterval tight = refine_root(s, iso, Rational(1, 2) / Rational(lead));
    if (tight.is_point()) return tight.lo();
    Integer c = ceil(tight.lo() * lead);
    if (Rational(c) <= tight.hi() * lead) {
      Rational candidate = make_rational(c, lead);
      if (sign_at(s, candidate) == 0) return candidate;
    }
  }
  return std::nullopt;
}

namespace {

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

ModPoly poly_mod(ModPoly a, const ModPoly& m, std::uint64_t p) {
  trim(a);
  const std::uint64_t inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t f = mul_mod(a.back(), inv, p);
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p - mul_mod(f, m[i], p)) % p;
    trim(a);
  }
  return a;
}

ModPoly poly_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
  trim(r);
  return r;
}

ModPoly poly_div(ModPoly a, const ModPoly& m, std::uint64_t p) {
  trim(a);
  if (a.size() < m.size()) return {};
  const std::uint64_t inv = inv_mod(m.back(), p);
  ModPoly q(a.size() - m.size() + 1, 0);
  while (a.size() >= m.size()) {
    std::uint64_t f = mul_mod(a.back(), inv, p);
    std::size_t shift = a.size() - m.size();
    q[shift] = f;
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p - mul_mod(f, m[i], p)) % p;
    trim(a);
  }
  return q;
}

ModPoly poly_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, inv, p);
  }
  return a;
}

ModPoly poly_powmod(ModPoly base, std::uint64_t e, const ModPoly& m, std::uint64_t p) {
  ModPoly r{1};
  base = poly_mod(base, m, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

ModPoly poly_derivative(const ModPoly& a, std::uint64_t p) {
  ModPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mul_mod(a[i], i % p, p));
  trim(d);
  return d;
}

// Degrees of the irreducible factors of a squarefree f modulo p.
std::vector<int> ddf_degrees(ModPoly f, std::uint64_t p) {
  std::vector<int> degrees;
  ModPoly x{0, 1};
  ModPoly g = x;
  for (int i = 1; static_cast<int>(f.size()) - 1 >= 2 * i; ++i) {
    g = poly_powmod(g, p, f, p);
    ModPoly gx = g;
    gx.resize(std::max<std::size_t>(gx.size(), 2), 0);
    gx[1] = (gx[1] + p - 1) % p;
    trim(gx);
    ModPoly h = poly_gcd(f, gx, p);
    int dh = static_cast<int>(h.size()) - 1;
    if (dh > 0) {
      for (int k = 0; k < dh / i; ++k) degrees.push_back(i);
      f = poly_div(f, h, p);
      g = poly_mod(g, f, p);
    }
  }
  if (f.size() > 1) degrees.push_back(static_cast<int>(f.size()) - 1);
  return degrees;
}

std::set<int> subset_sums(const std::vector<int>& parts, int total) {
  std::vector<bool> reach(static_cast<std::size_t>(total) + 1, false);
  reach[0] = true;
  for (int d : parts)
    for (int s = total; s >= d; --s)
      if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = true;
  std::set<int> out;
  for (int s = 1; s < total; ++s)
    if (reach[static_cast<std::size_t>(s)]) out.insert(s);
  return out;
}

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Positive divisors of |n|, or nullopt when |n| is too large to trial-factor.
std::optional<std::vector<Integer>> divisors(const Integer& n) {
  Integer a = abs(n);
  if (a == 0 || bit_length(a) > 40) return std::nullopt;
  std::uint64_t v = a.get_ui();
  std::vector<Integer> out;
  for (std::uint64_t d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.emplace_back(static_cast<unsigned long>(d));
      if (d * d != v) out.emplace_back(static_cast<unsigned long>(v / d));
    }
  }
  return out;
}

// Lagrange interpolation through integer nodes; nullopt if not integral.
std::optional<IntPolynomial> interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  RatPolynomial acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPolynomial basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * RatPolynomial{Rational(-xs[j]), Rational(1)};
      denom *= Rational(xs[i] - xs[j]);
    }
    acc = acc + Rational(Rational(ys[i]) / denom) * basis;
  }
  std::vector<Integer> c;
  for (const auto& x : acc.coefficients()) {
    if (x.get_den() != 1) return std::nullopt;
    c.emplace_back(x.get_num());
  }
  return IntPolynomial(std::move(c));
}

// Kronecker: is there a factor of exact degree e? Undecided -> throws.
bool has_factor_of_degree(const IntPolynomial& f, int e) {
  std::vector<std::pair<Integer, Integer>> nodes;  // (x, f(x)) with small |f(x)|
  for (long t = 0; nodes.size() < 64 && t < 200; ++t) {
    for (long x : {t, -t}) {
      if (t == 0 && x != 0) continue;
      Rational v = evaluate(f, Rational(x));
      if (v != 0) nodes.emplace_back(Integer(x), Integer(v.get_num()));
      if (t == 0) break;
    }
  }
  std::sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) { return abs(a.second) < abs(b.second); });
  if (static_cast<int>(nodes.size()) < e + 1) throw Error(ErrorCode::IrreducibilityUndecided, "too few nodes");
  nodes.resize(static_cast<std::size_t>(e + 1));
  std::vector<Integer> xs;
  std::vector<std::vector<Integer>> choices;
  for (const auto& [x, v] : nodes) {
    auto d = divisors(v);
    if (!d) throw Error(ErrorCode::IrreducibilityUndecided, "values too large for a Kronecker search on " + to_string(f));
    xs.push_back(x);
    choices.push_back(*d);
  }
  // Node 0 keeps positive divisors only: g and -g are the same factor.
  for (std::size_t i = 1; i < choices.size(); ++i) {
    std::size_t k = choices[i].size();
    for (std::size_t j = 0; j < k; ++j) choices[i].push_back(-choices[i][j]);
  }
  const std::size_t n = choices.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<Integer> ys(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) ys[i] = choices[i][idx[i]];
    if (auto g = interpolate(xs, ys); g && g->degree() == e && divides(*g, f)) return true;
    std::size_t k = 0;
    while (k < n && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == n) return false;
  }
}

}  // namespace

std::set<int> possible_factor_degrees(const IntPolynomial& p, int primes_to_try) {
  const int m = p.degree();
  std::set<int> possible;
  for (int d = 1; d < m; ++d) possible.insert(d);
  int used = 0;
  for (std::uint64_t prime = 3; used < primes_to_try && prime < 2000 && !possible.empty(); prime += 2) {
    if (!is_small_prime(prime)) continue;
    Integer lead_mod;
    mpz_fdiv_r_ui(lead_mod.get_mpz_t(), p.leading().get_mpz_t(), prime);
    if (lead_mod == 0) continue;
    ModPoly f;
    for (const auto& c : p.coefficients()) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), prime);
      f.push_back(r.get_ui());
    }
    trim(f);
    if (poly_gcd(f, poly_derivative(f, prime), prime).size() != 1) continue;
    std::set<int> here = subset_sums(ddf_degrees(f, prime), m);
    std::set<int> both;
    std::set_intersection(possible.begin(), possible.end(), here.begin(), here.end(), std::inserter(both, both.begin()));
    possible = std::move(both);
    ++used;
  }
  return possible;
}

bool is_irreducible(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "irreducibility of the zero polynomial");
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  if (!is_squarefree(p)) return false;
  if (find_rational_root(p)) return false;
  if (p.degree() <= 3) return true;
  IntPolynomial f = primitive_part(p);
  std::set<int> degrees = possible_factor_degrees(f);
  for (int e : degrees) {
    if (e == 1 || e > f.degree() / 2) continue;  // linear factors excluded above; pairs (e, m-e)
    if (has_factor_of_degree(f, e)) return false;
  }
  return true;
}

}  // namespace lvt
