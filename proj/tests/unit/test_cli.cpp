#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lvt/cli/cli.hpp"

using namespace lvt;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result lvtool(std::vector<std::string> args) {
  args.insert(args.begin(), "lvtool");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes: passing runs") {
  CHECK(lvtool({"classify", "--number", "series:10:factorial", "--k", "1..6", "--C", "1.1", "--eps", "0"}).code == 0);
  Result v = lvtool({"verify-theorem", "--number", "series:10:factorial", "--field", "[-2,0,1]@[1,2]", "--map", "theta*x", "--k", "2..4", "--json"});
  CHECK(v.code == 0);
  auto j = json::parse(v.out);
  for (const auto& r : j["records"]) {
    CHECK(r["checks"]["eq6"] == true);
    CHECK(r["checks"]["eq7"] == true);
    CHECK(r["checks"]["eq9"] == true);
  }
  CHECK(lvtool({"check-lemmas", "--lemma", "2", "--deg", "2", "--height", "3"}).code == 0);
  CHECK(lvtool({"check-lemmas", "--lemma", "3", "--field", "root:3:2", "--count", "20"}).code == 0);
  CHECK(lvtool({"check-lemmas", "--lemma", "1", "--count", "10"}).code == 0);
  CHECK(lvtool({"map-eval", "--field", "root:2:2", "--map", "theta*x", "--alpha", "11/100"}).code == 0);
  CHECK(lvtool({"audit-degree", "--k", "2..3", "--deg", "1", "--height", "10"}).code == 0);
  CHECK(lvtool({"construct", "--number", "cf:0,9,11,99", "--k", "1..2"}).code == 0);
  CHECK(lvtool({"cf", "--number", "ell", "--count", "5"}).code == 0);
  CHECK(lvtool({"classify", "--number", "strongcf:k", "--strong", "2", "--from", "1"}).code == 0);
}

TEST_CASE("exit codes: certified failures") {
  Result f = lvtool({"classify", "--number", "ell", "--k", "2,4,6", "--C", "1.4", "--eps", "0", "--json"});
  CHECK(f.code == 1);
  CHECK(json::parse(f.out)["first_failure_index"] == 2);
  CHECK(lvtool({"classify", "--number", "ell", "--k", "2,4,6", "--C", "1.4", "--eps", "1"}).code == 0);
  CHECK(lvtool({"classify", "--number", "cf:1,2,2,2,2,2,2,2", "--strong", "2", "--from", "0"}).code == 1);
  // a C too small to cover the growth of l makes Eq. (12) fail
  CHECK(lvtool({"verify-theorem", "--k", "2..4", "--C", "1.000001", "--map", "theta*x^8"}).code == 1);
}

TEST_CASE("exit codes: usage errors") {
  CHECK(lvtool({}).code == 2);
  CHECK(lvtool({"bogus"}).code == 2);
  CHECK(lvtool({"classify", "--nope"}).code == 2);
  CHECK(lvtool({"classify", "--number", "series:1:factorial"}).code == 2);
  CHECK(lvtool({"classify", "--number", "nonsense"}).code == 2);
  CHECK(lvtool({"classify", "--k", "5..2"}).code == 2);
  CHECK(lvtool({"map-eval", "--field", "[-4,0,1]@[1,3]", "--alpha", "1"}).code == 2);  // x^2 - 4 reducible
  CHECK(lvtool({"map-eval", "--map", "2", "--alpha", "1"}).code == 2);
  CHECK(lvtool({"map-eval", "--map", "1/(x-1)", "--alpha", "1"}).code == 2);
  CHECK(lvtool({"audit-degree", "--deg", "2", "--height", "3", "--k", "2..3"}).code == 2);
  CHECK(lvtool({"check-lemmas", "--lemma", "7"}).code == 2);
  Result r = lvtool({"verify-theorem", "--preset", "cor9"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown preset") != std::string::npos);
  CHECK(lvtool({"--help"}).code == 0);
}

TEST_CASE("determinism: identical argv gives byte-identical JSON") {
  std::vector<std::string> a{"verify-theorem", "--k", "2..5", "--json"};
  CHECK(lvtool(a).out == lvtool(a).out);
  std::vector<std::string> b{"audit-degree", "--k", "2..3", "--deg", "1", "--height", "25", "--json"};
  CHECK(lvtool(b).out == lvtool(b).out);
  std::vector<std::string> c{"check-lemmas", "--lemma", "3", "--count", "30", "--seed", "4", "--json"};
  CHECK(lvtool(c).out == lvtool(c).out);
}

TEST_CASE("JSON schema of verify-theorem records") {
  auto j = nlohmann::ordered_json::parse(lvtool({"verify-theorem", "--k", "2..3", "--json"}).out);
  const auto& r = j["records"][0];
  std::vector<std::string> keys;
  for (auto it = r.begin(); it != r.end(); ++it) keys.push_back(it.key());
  REQUIRE(keys.size() >= 6);
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 6) == std::vector<std::string>{"k", "h_alpha", "h_gamma", "gap", "e", "checks"});
  CHECK(r["k"] == 2);
  CHECK(r["h_alpha"] == "100");
  CHECK(r["h_gamma"] == "5000");
  CHECK(r["gap"].size() == 2);
  CHECK(r["gap"][0].get<std::string>().find('/') != std::string::npos);
  CHECK(r["alpha"] == "11/100");
  CHECK(j["records"][0]["checks"].contains("eq12"));
  CHECK_FALSE(j["records"][1]["checks"].contains("eq12"));
}

TEST_CASE("map DSL and coordinate JSON give the same report") {
  auto a = lvtool({"verify-theorem", "--k", "2..3", "--json", "--map", "theta*x"});
  auto b = lvtool({"verify-theorem", "--k", "2..3", "--json", "--map", R"({"num":[[0,0],[0,1]],"den":[[1,0]]})"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  auto ja = json::parse(a.out), jb = json::parse(b.out);
  CHECK(ja["records"] == jb["records"]);
  auto c = lvtool({"verify-theorem", "--k", "2..3", "--json", "--number", R"({"series":{"base":10,"schedule":"factorial"}})"});
  CHECK(json::parse(c.out)["records"] == ja["records"]);
}

TEST_CASE("presets") {
  Result r = lvtool({"verify-theorem", "--preset", "cor2i:4:3", "--k", "2..3", "--json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j.size() == 3);  // divisors 1, 2, 4 of m = 4
  // (3^(1/4) x)^(4/d) has approximants of degree d
  CHECK(j[0]["records"][0]["gamma_degree"] == 1);
  CHECK(j[1]["records"][0]["gamma_degree"] == 2);
  CHECK(j[2]["records"][0]["gamma_degree"] == 4);
  auto k = json::parse(lvtool({"verify-theorem", "--preset", "cor2ii:3:2:3", "--k", "2..3", "--json"}).out);
  REQUIRE(k.size() == 3);
  for (const auto& run : k) CHECK(run["records"][0]["gamma_degree"] == 3);
  auto c3 = json::parse(lvtool({"verify-theorem", "--preset", "cor3:2:3", "--k", "2..3", "--json"}).out);
  CHECK(c3[0]["records"][0]["gamma_degree"] == 3);
}

TEST_CASE("spec parsers") {
  CHECK(cli::parse_k_range("2..6") == std::vector<unsigned long>{2, 3, 4, 5, 6});
  CHECK(cli::parse_k_range("1,3,5") == std::vector<unsigned long>{1, 3, 5});
  CHECK(cli::parse_k_range("4") == std::vector<unsigned long>{4});
  CHECK_THROWS_AS(cli::parse_k_range("a..b"), Error);
  CHECK(cli::parse_number("series:2:list:1,2,3")->convergent(2).value == Rational(3, 4));
  CHECK(cli::parse_number("cf:0,9,11")->convergent(1).value == Rational(1, 9));
  CHECK(cli::parse_number("strongcf:2")->describe().size() > 0);
  CHECK(cli::approx(Rational(1, 1000)) == "0.001");
  CHECK(cli::approx(pow(Rational(10), -5040) * 3 / 2) == "1.5e-5040");
  CHECK(cli::approx(-pow(Rational(10), 2000)) == "-1e+2000");
}

TEST_CASE("refinement budget from the environment") {
  setenv("LVT_REFINE_BUDGET", "3", 1);
  CHECK(cli::default_refine_budget() == 3);
  setenv("LVT_REFINE_BUDGET", "junk", 1);
  CHECK(cli::default_refine_budget() == 16);
  unsetenv("LVT_REFINE_BUDGET");
  CHECK(cli::default_refine_budget() == 16);
}
