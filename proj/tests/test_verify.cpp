#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsdist/budget.hpp"
#include "bsdist/verify.hpp"

using namespace bsdist;

TEST_CASE("sweep shapes and outcomes for small ranks") {
  SweepReport r3 = verify_longest(3);
  CHECK(r3.reduced_words == 2);
  CHECK(r3.classes == 2);
  CHECK(r3.braid_edges == 1);
  CHECK(r3.all_pass());

  SweepReport r4 = verify_longest(4);
  CHECK(r4.reduced_words == 16);
  CHECK(r4.classes == 8);
  CHECK(r4.braid_edges == 8);
  CHECK(r4.all_pass());
  CHECK(r4.checks.size() == 7);
  for (const auto& c : r4.checks) CHECK_FALSE(c.detail.empty());

  CHECK(verify_longest(2).all_pass());
  CHECK_THROWS_AS(verify_longest(6), BudgetExceeded);
  CHECK_THROWS_AS(verify_longest(0), std::invalid_argument);
}

TEST_CASE("collision search groups classes together and finds no splits at q = 1") {
  CollisionReport r3 = search_collisions(3, Rational(1));
  CHECK(r3.reduced_words == 2);
  CHECK(r3.classes == 2);
  CHECK(r3.value_groups == 2);
  CHECK_FALSE(r3.collision_found());
  CHECK(r3.q0 == "1");

  CollisionReport r4 = search_collisions(4, Rational(1));
  CHECK(r4.value_groups == 8);
  CHECK_FALSE(r4.collision_found());

  // words in one commutation class always share a value vector
  for (const Rational& q : {Rational(1), Rational(-2), Rational(2, 3)}) {
    CollisionReport r = search_collisions(4, q);
    CHECK(r.value_groups <= r.classes);
  }

  CHECK_THROWS_AS(search_collisions(3, Rational(-1)), std::invalid_argument);
  CHECK_THROWS_AS(search_collisions(6, Rational(1)), BudgetExceeded);
}
