#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <stdexcept>

#include "coxkit/parallel.hpp"

using namespace coxkit;

TEST_CASE("run_indexed covers the range under both policies") {
  for (Exec exec : {Exec::serial, Exec::parallel}) {
    std::vector<std::atomic<int>> hits(37);
    run_indexed(37, exec, [&](std::size_t i) { hits[i].fetch_add(1); });
    for (auto& h : hits) CHECK(h.load() == 1);
  }
}

TEST_CASE("run_indexed propagates the first error") {
  for (Exec exec : {Exec::serial, Exec::parallel}) {
    CHECK_THROWS_AS(
        run_indexed(10, exec,
                    [](std::size_t i) {
                      if (i == 3) throw std::runtime_error("boom");
                    }),
        std::runtime_error);
  }
}

TEST_CASE("pi_batch agrees across policies and with the direct call") {
  SystemPtr sys = parse_system("nodes a b c; edge a b 4; edge b c 3");
  RootEnumeration R = enumerate_positive_roots(sys, 0, 100);
  REQUIRE(R.saturated);
  std::vector<std::vector<RootVector>> subsets;
  for (std::size_t i = 0; i < R.roots.size(); ++i)
    for (std::size_t j = i; j < R.roots.size(); ++j)
      subsets.push_back({R.roots[i], R.roots[j]});
  auto serial = pi_batch(sys, subsets, Exec::serial);
  auto parallel = pi_batch(sys, subsets, Exec::parallel);
  REQUIRE(serial.size() == subsets.size());
  CHECK(serial == parallel);
  for (std::size_t k = 0; k < subsets.size(); ++k)
    CHECK(serial[k] == canonical_generators(sys, subsets[k]));
}

TEST_CASE("classification sweep agrees with enumeration") {
  auto outcomes = classification_sweep(2, {2, 3, 0}, Exec::serial);
  REQUIRE(outcomes.size() == 3);
  // Upper triangles in lexicographic label order: 2, 3, oo.
  CHECK(outcomes[0].finite);
  CHECK(outcomes[0].order == 4);
  CHECK(outcomes[1].finite);
  CHECK(outcomes[1].order == 6);
  CHECK_FALSE(outcomes[2].finite);
  for (const auto& o : outcomes) {
    CHECK(o.agree);
    CHECK(o.finite == o.oracle_finite);
  }
}

TEST_CASE("classification sweep is policy independent") {
  auto a = classification_sweep(3, {2, 3, 4, 6, 0}, Exec::serial);
  auto b = classification_sweep(3, {2, 3, 4, 6, 0}, Exec::parallel);
  REQUIRE(a.size() == 125);
  REQUIRE(b.size() == 125);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CAPTURE(i);
    CHECK(a[i].finite == b[i].finite);
    CHECK(a[i].order == b[i].order);
    CHECK(a[i].oracle_finite == b[i].oracle_finite);
    CHECK(a[i].agree == b[i].agree);
    CHECK(a[i].agree);
  }
}
