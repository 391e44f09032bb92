#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "coxkit/cli.hpp"
#include "json.hpp"

using namespace coxkit;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify matches the documented example") {
  CliRun r = cli({"classify", "--inline", "nodes a b c; edge a b 3; edge b c 3"});
  CHECK(r.code == 0);
  CHECK(r.out == "A3, finite, order 24\n");
  CHECK(r.err.empty());
}

TEST_CASE("pi matches the documented example") {
  CliRun r = cli({"pi", "--inline", "nodes a b; edge a b 3", "--roots", "a; a+b"});
  CHECK(r.code == 0);
  CHECK(r.out == "a, b\n");
}

TEST_CASE("verify g2 passes with five assertions in json") {
  CliRun r = cli({"verify", "--scenario", "g2", "--json"});
  REQUIRE(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["verb"] == "verify");
  CHECK(doc["result"]["passed"] == true);
  CHECK(doc["result"]["assertions"].size() == 5);
  CHECK(doc["timings"] == nlohmann::json::object());
  // The envelope keys appear in schema order.
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  std::size_t pos = 0;
  for (const char* want : {"verb", "input", "params", "result", "certificates", "timings"}) {
    CHECK(r.out.find('"' + std::string(want) + '"', pos) != std::string::npos);
    pos = r.out.find('"' + std::string(want) + '"', pos);
  }
}

TEST_CASE("identical invocations produce identical bytes") {
  std::vector<std::string> args = {"verify", "--scenario", "ex45", "--param", "oo",
                                   "--max-i", "3", "--json"};
  CliRun a = cli(args);
  CliRun b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  // Round trip through the parser is loss-free.
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(a.out);
  CHECK(doc.dump(2) + "\n" == a.out);
}

TEST_CASE("timings appear only on request") {
  CliRun plain = cli({"classify", "--inline", "nodes a b", "--json"});
  nlohmann::json p = nlohmann::json::parse(plain.out);
  CHECK(p["timings"] == nlohmann::json::object());
  CliRun timed = cli({"classify", "--inline", "nodes a b", "--json", "--timings"});
  nlohmann::json t = nlohmann::json::parse(timed.out);
  CHECK(t["timings"].contains("elapsed_us"));
}

TEST_CASE("roots verb lists in reading order") {
  CliRun r = cli({"roots", "--inline", "nodes a b; edge a b 4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("a  (depth 1)") == 0);
  CHECK(r.out.find("4 roots, complete") != std::string::npos);
  CliRun capped = cli({"roots", "--inline", "nodes a b; edge a b oo", "--max", "6"});
  CHECK(capped.out.find("truncated") != std::string::npos);
  CliRun depth = cli({"roots", "--inline", "nodes a b; edge a b oo", "--depth", "2"});
  CHECK(depth.code == 0);
}

TEST_CASE("coset-min splits the element") {
  CliRun r = cli({"coset-min", "--inline", "nodes a b c; edge a b 3; edge b c 3",
                  "--element", "a b a c", "--subset", "a,b"});
  CHECK(r.code == 0);
  CHECK(r.out == "w^I = a*b*c\nw_I = a\n");
  CliRun e = cli({"coset-min", "--inline", "nodes a b", "--element", "e", "--subset", "a"});
  CHECK(e.code == 0);
  CHECK(e.out == "w^I = e\nw_I = e\n");
}

TEST_CASE("odd components verb") {
  CliRun r = cli({"odd-components", "--inline", "nodes a b c; edge a b 4; edge b c 3"});
  CHECK(r.code == 0);
  CHECK(r.out == "{a}\n{b, c}\n");
}

TEST_CASE("is-parabolic gives verdicts with certificates") {
  CliRun yes = cli({"is-parabolic", "--inline", "nodes a b; edge a b 3",
                    "--roots", "a+b", "--json"});
  REQUIRE(yes.code == 0);
  nlohmann::json dy = nlohmann::json::parse(yes.out);
  CHECK(dy["result"]["verdict"] == "yes");
  CHECK(dy["certificates"].contains("conjugator"));
  CliRun no = cli({"is-parabolic", "--inline", "nodes a b; edge a b 4",
                   "--roots", "a; a + r2*b"});
  CHECK(no.code == 0);
  CHECK(no.out.find("no") == 0);
}

TEST_CASE("intersect verb on standard parabolics") {
  CliRun r = cli({"intersect", "--inline", "nodes a b c; edge a b 3; edge b c 3",
                  "--left-i", "a,b", "--right-i", "b,c"});
  CHECK(r.code == 0);
  CHECK(r.out == "(e, {b}), rank 1\n");
  CliRun conj = cli({"intersect", "--inline", "nodes a b c; edge a b 3; edge b c 3",
                     "--left-w", "b", "--left-i", "a", "--right-w", "b", "--right-i", "a",
                     "--json"});
  REQUIRE(conj.code == 0);
  nlohmann::json d = nlohmann::json::parse(conj.out);
  CHECK(d["result"]["rank"] == 1);
}

TEST_CASE("family input resolves truncations") {
  CliRun r = cli({"classify", "--family", "binf", "--rank", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "B4, finite, order 384\n");
  CliRun ex = cli({"classify", "--family", "ex45", "--rank", "3", "--param", "6"});
  CHECK(ex.code == 0);
  CliRun bad = cli({"classify", "--family", "ex45", "--rank", "3", "--param", "5"});
  CHECK(bad.code == 2);
  CliRun unknown = cli({"classify", "--family", "zinf", "--rank", "3"});
  CHECK(unknown.code == 2);
}

TEST_CASE("families verb reports tower stabilization") {
  CliRun r = cli({"families", "--family", "dinf", "--ranks", "2..6",
                  "--property", "locally_parabolic"});
  CHECK(r.code == 0);
  CHECK(r.out.find("stable: yes") != std::string::npos);
  CliRun listed = cli({"families", "--family", "a2inf", "--ranks", "3,5,7",
                       "--property", "union_subgroup", "--json"});
  REQUIRE(listed.code == 0);
  nlohmann::json d = nlohmann::json::parse(listed.out);
  CHECK(d["result"]["outcomes"].size() == 3);
  CHECK(d["result"]["stable"] == true);
  CliRun badprop = cli({"families", "--family", "binf", "--ranks", "2..4",
                        "--property", "bogus"});
  CHECK(badprop.code == 2);
}

TEST_CASE("file input works like inline input") {
  const char* path = "cli_test_system.txt";
  {
    std::ofstream f(path);
    f << "# comment line\nnodes a b c;\nedge a b 3; edge b c 4;\n";
  }
  CliRun r = cli({"classify", "--file", path});
  CHECK(r.code == 0);
  CHECK(r.out == "B3, finite, order 48\n");
  std::remove(path);
  CliRun missing = cli({"classify", "--file", "no_such_file.txt"});
  CHECK(missing.code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({"classify"}).code == 2);
  CHECK(cli({"classify", "--inline", "nodes a b", "--family", "binf", "--rank", "3"}).code == 2);
  CHECK(cli({"classify", "--inline", "nodes a b; edge a b 1"}).code == 2);
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({"classify", "--bogus-flag"}).code == 2);
  CHECK(cli({"pi", "--inline", "nodes a b; edge a b 3", "--roots", "r2*a"}).code == 2);
  CHECK(cli({"pi", "--inline", "nodes a b; edge a b 3", "--roots", "zz"}).code == 2);
  CHECK(cli({"verify", "--scenario", "unknown"}).code == 2);
  CHECK(cli({"verify", "--scenario", "ex45", "--param", "7"}).code == 2);
  CHECK(cli({"coset-min", "--inline", "nodes a b", "--element", "a q", "--subset", "a"}).code == 2);
  CHECK(cli({"families", "--family", "binf", "--ranks", "5..2",
             "--property", "locally_finite"}).code == 2);
  CliRun parse_err = cli({"classify", "--inline", "nodes a b; edge a q 3"});
  CHECK(parse_err.code == 2);
  CHECK(parse_err.err.find("parse error at line 1") != std::string::npos);
}

TEST_CASE("computation failures exit 1") {
  CliRun r = cli({"intersect", "--inline", "nodes a b; edge a b oo",
                  "--left-i", "a", "--right-i", "b"});
  CHECK(r.code == 1);
  CHECK(r.err.find("computation failed") != std::string::npos);
}

TEST_CASE("help exits zero") {
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"classify", "--help"}).code == 0);
  CliRun top = cli({"--help"});
  CHECK(top.out.find("classify") != std::string::npos);
}

TEST_CASE("verify text mode prints one line per assertion") {
  CliRun r = cli({"verify", "--scenario", "g2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("5 of 5 assertions passed") != std::string::npos);
  CliRun quick = cli({"verify", "--scenario", "ex33", "--max-i", "2"});
  CHECK(quick.code == 0);
  CHECK(quick.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("root literals accept rational coefficients and signs") {
  CliRun r = cli({"pi", "--inline", "nodes a b; edge a b 3",
                  "--roots", "1/1*a + 1*b; b"});
  CHECK(r.code == 0);
  CHECK(r.out == "a, b\n");
  // The negative of a root names the same reflection and is canonicalized.
  CliRun neg = cli({"pi", "--inline", "nodes a b; edge a b 3", "--roots", "-a - b"});
  CHECK(neg.code == 0);
  CHECK(neg.out == "a + b\n");
  // A non-root vector is a usage error.
  CliRun bad = cli({"pi", "--inline", "nodes a b; edge a b 3", "--roots", "2*a"});
  CHECK(bad.code == 2);
  CliRun r3 = cli({"pi", "--inline", "nodes a b; edge a b 6", "--roots", "r3*a + b; b"});
  CHECK(r3.code == 0);
}
