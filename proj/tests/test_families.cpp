#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "coxkit/families.hpp"

using namespace coxkit;

TEST_CASE("family names round trip") {
  for (FamilyKind kind : {FamilyKind::a1inf, FamilyKind::a2inf, FamilyKind::binf,
                          FamilyKind::dinf, FamilyKind::ex33, FamilyKind::ex45}) {
    auto back = family_from_name(family_name(kind));
    REQUIRE(back.has_value());
    CHECK(*back == kind);
  }
  CHECK_FALSE(family_from_name("nope").has_value());
}

TEST_CASE("truncations realize the family graphs") {
  SystemPtr a = truncate({FamilyKind::a1inf, 0}, 4);
  CHECK(a->rank() == 4);
  CHECK(a->names() == std::vector<std::string>{"s1", "s2", "s3", "s4"});
  CHECK(a->label(0, 1) == 3);
  CHECK(a->label(0, 2) == 2);
  CHECK(finite_type_recognize(a).str() == "A4");

  SystemPtr b = truncate({FamilyKind::binf, 0}, 4);
  CHECK(b->names() == std::vector<std::string>{"s0", "s1", "s2", "s3"});
  CHECK(b->label(0, 1) == 4);
  CHECK(b->label(1, 2) == 3);
  CHECK(finite_type_recognize(b).str() == "B4");

  SystemPtr z = truncate({FamilyKind::a2inf, 0}, 5);
  CHECK(z->names() == std::vector<std::string>{"sm2", "sm1", "s0", "s1", "s2"});
  CHECK(finite_type_recognize(z).str() == "A5");
  SystemPtr z4 = truncate({FamilyKind::a2inf, 0}, 4);
  CHECK(z4->names() == std::vector<std::string>{"sm1", "s0", "s1", "s2"});

  SystemPtr d = truncate({FamilyKind::dinf, 0}, 4);
  CHECK(d->names() == std::vector<std::string>{"s0p", "s0", "s1", "s2"});
  CHECK(d->label(0, 1) == 2);  // the fork pair is not adjacent
  CHECK(d->label(0, 2) == 3);
  CHECK(d->label(1, 2) == 3);
  CHECK(finite_type_recognize(d).str() == "D4");
  CHECK(finite_type_recognize(truncate({FamilyKind::dinf, 0}, 6)).order == 23040);

  SystemPtr x = truncate({FamilyKind::ex33, 0}, 12);
  CHECK(x->rank() == 12);
  CHECK(finite_type_recognize(x).str() == "A12");

  SystemPtr q = truncate({FamilyKind::ex45, 4}, 3);
  CHECK(q->label(0, 1) == 4);
  CHECK(q->label(1, 2) == 4);
  CHECK(q->label(0, 2) == 2);
  SystemPtr qi = truncate({FamilyKind::ex45, infinite_label}, 3);
  CHECK(qi->label(0, 1) == infinite_label);
}

TEST_CASE("family label rule is symmetric with unit diagonal") {
  FamilyDescriptor dinf{FamilyKind::dinf, 0};
  for (int i = -1; i < 5; ++i) {
    CHECK(family_label(dinf, i, i) == 1);
    for (int j = -1; j < 5; ++j) CHECK(family_label(dinf, i, j) == family_label(dinf, j, i));
  }
  FamilyDescriptor a2{FamilyKind::a2inf, 0};
  CHECK(family_label(a2, -3, -2) == 3);
  CHECK(family_label(a2, -3, -1) == 2);
}

TEST_CASE("truncation is validated and memoized") {
  CHECK_THROWS_AS(truncate({FamilyKind::a1inf, 0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(truncate({FamilyKind::dinf, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(truncate({FamilyKind::ex45, 5}, 3), std::invalid_argument);
  CHECK_THROWS_AS(truncate({FamilyKind::ex45, 3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(truncate({FamilyKind::ex45, 2}, 3), std::invalid_argument);
  CHECK(truncate({FamilyKind::ex45, 6}, 3)->label(0, 1) == 6);

  CHECK(truncate({FamilyKind::binf, 0}, 5) == truncate({FamilyKind::binf, 0}, 5));
  CHECK(truncate({FamilyKind::ex45, 4}, 3) != truncate({FamilyKind::ex45, 6}, 3));
}

TEST_CASE("towers validate their rank lists") {
  CHECK_THROWS_AS(make_tower({FamilyKind::a1inf, 0}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_tower({FamilyKind::a1inf, 0}, {3, 2}), std::invalid_argument);
  TruncationTower t = make_tower({FamilyKind::a1inf, 0}, {2, 4, 6});
  CHECK(t.systems.size() == 3);
  CHECK(t.systems[2]->rank() == 6);
  TruncationTower flat = make_tower({FamilyKind::binf, 0}, {3, 3, 3});
  CHECK(flat.systems[0] == flat.systems[1]);  // memoized repeats share systems
}

TEST_CASE("named tower properties stabilize on the growing families") {
  for (FamilyKind kind : {FamilyKind::a1inf, FamilyKind::a2inf, FamilyKind::binf,
                          FamilyKind::dinf}) {
    TruncationTower t = make_tower({kind, 0}, {2, 3, 4, 5, 6, 7, 8});
    for (TowerPropertyKind p : {TowerPropertyKind::union_subgroup,
                                TowerPropertyKind::union_reflection,
                                TowerPropertyKind::locally_finite,
                                TowerPropertyKind::locally_parabolic}) {
      TowerReport r = tower_check(t, p);
      CAPTURE(family_name(kind));
      CAPTURE(tower_property_name(p));
      CHECK(r.stable);
      CHECK(r.outcomes.size() == t.ranks.size());
      CHECK(r.window.size() == 2);
      for (std::size_t i = 1; i < r.outcomes.size(); ++i)
        CHECK(r.outcomes[i].rank >= r.outcomes[i - 1].rank);
    }
  }
}

TEST_CASE("locally finite tower reports the window type") {
  TruncationTower t = make_tower({FamilyKind::binf, 0}, {2, 4, 6});
  TowerReport r = tower_check(t, TowerPropertyKind::locally_finite);
  REQUIRE(r.stable);
  CHECK(r.outcomes.back().value.find("locally finite") == 0);
  CHECK(r.outcomes.back().value.find("B2") != std::string::npos);

  // ex45 with the infinite label is not locally finite and says so.
  TruncationTower bad = make_tower({FamilyKind::ex45, infinite_label}, {2, 3, 4});
  TowerReport rb = tower_check(bad, TowerPropertyKind::locally_finite);
  CHECK(rb.outcomes.back().value.find("not locally finite") == 0);
}

TEST_CASE("custom tower properties and instability") {
  TruncationTower t = make_tower({FamilyKind::a1inf, 0}, {2, 3, 4, 5});
  TowerReport parity = tower_check(
      t, TowerProperty([](const SystemPtr&, int rank) { return rank % 2 ? "odd" : "even"; }));
  CHECK_FALSE(parity.stable);
  REQUIRE(parity.outcomes.size() == 4);
  CHECK(parity.outcomes[0].value == "even");
  CHECK(parity.outcomes[1].value == "odd");

  TowerReport constant = tower_check(
      t, TowerProperty([](const SystemPtr&, int) { return "same"; }));
  CHECK(constant.stable);
}

TEST_CASE("tower property names round trip") {
  for (TowerPropertyKind p : {TowerPropertyKind::union_subgroup,
                              TowerPropertyKind::union_reflection,
                              TowerPropertyKind::locally_finite,
                              TowerPropertyKind::locally_parabolic}) {
    auto back = tower_property_from_name(tower_property_name(p));
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
  CHECK_FALSE(tower_property_from_name("bogus").has_value());
}
