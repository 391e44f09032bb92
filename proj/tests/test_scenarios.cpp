#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "coxkit/scenarios.hpp"

using namespace coxkit;

namespace {

void check_all_pass(const ScenarioResult& r) {
  for (const Assertion& a : r.assertions) {
    CAPTURE(a.description);
    CAPTURE(a.expected);
    CAPTURE(a.computed);
    CHECK(a.pass);
    CHECK(a.pass == (a.expected == a.computed));
    CHECK_FALSE(a.description.empty());
  }
  CHECK(r.passed());
}

}  // namespace

TEST_CASE("scenario ex33 verifies at full depth") {
  ScenarioResult r = verify_scenario_ex33();
  CHECK(r.name == "ex33");
  CHECK(r.ranks_used == std::vector<int>{12});
  CHECK(r.assertions.size() == 33);
  check_all_pass(r);
}

TEST_CASE("scenario ex33 at smaller depths") {
  ScenarioResult r1 = verify_scenario_ex33(1);
  CHECK(r1.ranks_used == std::vector<int>{4});
  check_all_pass(r1);
  ScenarioResult r3 = verify_scenario_ex33(3);
  CHECK(r3.ranks_used == std::vector<int>{8});
  check_all_pass(r3);
}

TEST_CASE("scenario ex33 rejects out-of-range depth") {
  CHECK_THROWS_AS(verify_scenario_ex33(0), std::invalid_argument);
  CHECK_THROWS_AS(verify_scenario_ex33(6), std::invalid_argument);
  CHECK_THROWS_AS(verify_scenario_ex33(-1), std::invalid_argument);
}

TEST_CASE("scenario ex45 verifies for even and infinite labels") {
  for (unsigned m : {4u, 6u, 8u, infinite_label}) {
    CAPTURE(m);
    ScenarioResult r = verify_scenario_ex45(m);
    CHECK(r.name == "ex45");
    CHECK(r.ranks_used == std::vector<int>{7});
    check_all_pass(r);
  }
  ScenarioResult small = verify_scenario_ex45(4, 2);
  CHECK(small.ranks_used == std::vector<int>{4});
  check_all_pass(small);
}

TEST_CASE("scenario ex45 rejects bad labels and depths") {
  CHECK_THROWS_AS(verify_scenario_ex45(5), std::invalid_argument);
  CHECK_THROWS_AS(verify_scenario_ex45(3), std::invalid_argument);
  CHECK_THROWS_AS(verify_scenario_ex45(2), std::invalid_argument);
  CHECK_THROWS_AS(verify_scenario_ex45(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_scenario_ex45(4, 6), std::invalid_argument);
}

TEST_CASE("scenario g2 has exactly five assertions") {
  ScenarioResult r = verify_scenario_g2();
  CHECK(r.name == "g2");
  CHECK(r.assertions.size() == 5);
  CHECK(r.ranks_used == std::vector<int>{2});
  check_all_pass(r);
}

TEST_CASE("passed is a conjunction") {
  ScenarioResult r = verify_scenario_g2();
  REQUIRE(r.passed());
  r.assertions[2].pass = false;
  CHECK_FALSE(r.passed());
}
