#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "json.hpp"
#include "lvt/cli/cli.hpp"

namespace lvt::cli {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t p = s.find(sep, start);
    out.emplace_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
    if (p == std::string_view::npos) return out;
    start = p + 1;
  }
}

Error bad(std::string_view what, std::string_view text) {
  return Error(ErrorCode::ParseError, std::string(what) + " '" + std::string(text) + "'");
}

std::shared_ptr<ApproximableReal> strong_cf(const std::string& n) {
  constexpr std::size_t kMaterialized = 4;
  if (n == "k") return build_strong_cf([](unsigned long k) { return k; }, kMaterialized);
  char* end = nullptr;
  unsigned long c = std::strtoul(n.c_str(), &end, 10);
  if (n.empty() || *end || c < 1) throw bad("strong CF exponent must be 'k' or a positive integer, got", n);
  return build_strong_cf([c](unsigned long) { return c; }, kMaterialized);
}

std::vector<Integer> integer_list(std::string_view text) {
  std::vector<Integer> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_integer(s));
  return out;
}

std::shared_ptr<ApproximableReal> number_from_json(const nlohmann::json& j, std::string_view text) {
  if (!j.is_object() || j.size() != 1) throw bad("number JSON needs exactly one of series/cf/strongcf in", text);
  if (j.contains("series")) {
    const auto& s = j["series"];
    Integer base = s.at("base").is_string() ? parse_integer(s["base"].get<std::string>()) : Integer(s["base"].get<long>());
    return std::make_shared<SeriesNumber>(base, ExponentSchedule::parse(s.at("schedule").get<std::string>()));
  }
  if (j.contains("cf")) {
    std::vector<Integer> a;
    for (const auto& v : j["cf"]) a.push_back(v.is_string() ? parse_integer(v.get<std::string>()) : Integer(v.get<long>()));
    return std::make_shared<CFNumber>(std::move(a));
  }
  if (j.contains("strongcf")) {
    const auto& v = j["strongcf"];
    return strong_cf(v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>()));
  }
  throw bad("unknown number kind in", text);
}

}  // namespace

std::shared_ptr<ApproximableReal> parse_number(std::string_view text) {
  if (!text.empty() && text.front() == '{') {
    try {
      return number_from_json(nlohmann::json::parse(text), text);
    } catch (const nlohmann::json::exception& e) {
      throw bad(std::string("bad number JSON (") + e.what() + ")", text);
    }
  }
  if (text == "ell") return std::make_shared<SeriesNumber>(10, ExponentSchedule::factorial());
  auto colon = text.find(':');
  std::string_view kind = text.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (kind == "series") {
    auto c = rest.find(':');
    if (c == std::string_view::npos) throw bad("series needs base:schedule, got", text);
    Integer base = parse_integer(rest.substr(0, c));
    if (base < 2) throw Error(ErrorCode::InvalidArgument, "series base must be at least 2");
    return std::make_shared<SeriesNumber>(base, ExponentSchedule::parse(rest.substr(c + 1)));
  }
  if (kind == "cf") return std::make_shared<CFNumber>(integer_list(rest));
  if (kind == "strongcf") return strong_cf(std::string(rest));
  throw bad("unknown number spec", text);
}

RationalMap parse_map(std::string_view text, const FieldPtr& K) {
  if (text.empty() || text.front() != '{') return compile_map(text, K);
  auto coords = [&](const nlohmann::json& j) {
    std::vector<std::vector<Rational>> out;
    for (const auto& c : j) {
      std::vector<Rational> v;
      for (const auto& x : c) v.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
      out.push_back(std::move(v));
    }
    return out;
  };
  try {
    auto j = nlohmann::json::parse(text);
    return map_from_coordinates(coords(j.at("num")), coords(j.at("den")), K);
  } catch (const nlohmann::json::exception& e) {
    throw bad(std::string("bad map JSON (") + e.what() + ")", text);
  }
}

std::vector<unsigned long> parse_k_range(std::string_view text) {
  auto index = [&](const std::string& s) {
    char* end = nullptr;
    unsigned long v = std::strtoul(s.c_str(), &end, 10);
    if (s.empty() || *end || s.front() == '-') throw bad("bad index", text);
    return v;
  };
  std::vector<unsigned long> out;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    unsigned long a = index(std::string(text.substr(0, dots))), b = index(std::string(text.substr(dots + 2)));
    if (a > b) throw bad("empty range", text);
    for (unsigned long k = a; k <= b; ++k) out.push_back(k);
    return out;
  }
  for (const auto& s : split(text, ',')) out.push_back(index(s));
  return out;
}

unsigned default_refine_budget() {
  if (const char* env = std::getenv("LVT_REFINE_BUDGET")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*env && !*end && v > 0 && v < 1000) return static_cast<unsigned>(v);
  }
  return 16;
}

std::string approx(const Rational& x) {
  if (x == 0) return "0";
  mpf_class f(x, 64);
  long e = 0;
  double m = mpf_get_d_2exp(&e, f.get_mpf_t());  // x = m 2^e, 0.5 <= |m| < 1
  if (e > -1000 && e < 1000) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x.get_d());
    return buf;
  }
  // Scientific form without going through double's exponent range.
  double l10 = std::log10(std::fabs(m)) + static_cast<double>(e) * std::log10(2.0);
  long ex = static_cast<long>(std::floor(l10));
  double mant = std::pow(10.0, l10 - static_cast<double>(ex));
  if (mant >= 9.999995) {
    mant /= 10;
    ++ex;
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%.6ge%+03ld", m < 0 ? "-" : "", mant, ex);
  return buf;
}

}  // namespace lvt::cli
