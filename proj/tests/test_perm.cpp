#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsdist/perm.hpp"
#include "test_oracles.hpp"

using namespace bsdist;

TEST_CASE("longest element") {
  CHECK(Perm::longest(4) == Perm::parse("4321"));
  CHECK(Perm::longest(1) == Perm::parse("1"));
  CHECK(Perm::longest(5).length() == 10);
  CHECK(Perm::longest(4).length() == 6);
  CHECK_THROWS_AS(Perm::longest(0), std::invalid_argument);
}

TEST_CASE("composition convention") {
  Perm s1 = Perm::transposition(3, 1);
  CHECK(Perm::parse("213").compose(s1) == Perm::identity(3));
  CHECK(Perm::identity(3).compose(Perm::transposition(3, 2)) == Perm::parse("132"));
  CHECK(Perm::parse("4321").compose(Perm::parse("4321")) == Perm::identity(4));
  // compose(w, s_i) swaps positions i, i+1 of the one-line word
  Perm w = Perm::parse("3142");
  CHECK(w.compose(Perm::transposition(4, 2)) == w.right_mul(2));
  CHECK_THROWS_AS(Perm::parse("12").compose(Perm::parse("123")), std::invalid_argument);
}

TEST_CASE("length and inversions") {
  CHECK(Perm::parse("1234").length() == 0);
  CHECK(Perm::parse("4321").length() == 6);
  // brute-force count for 2314: pairs (i<j) with w(i) > w(j)
  int inv = 0;
  Perm w = Perm::parse("2314");
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      if (w(i) > w(j)) ++inv;
  CHECK(inv == 2);
  CHECK(w.length() == 2);
}

TEST_CASE("length changes by one under right multiplication") {
  for (int n = 2; n <= 6; ++n) {
    for (const Perm& w : all_perms(n)) {
      for (int i = 1; i <= n - 1; ++i) {
        int before = w.length(), after = w.right_mul(i).length();
        if (w.right_ascent(i))
          CHECK(after == before + 1);
        else
          CHECK(after == before - 1);
      }
    }
  }
}

TEST_CASE("positions") {
  CHECK(Perm::parse("321").pos(1) == 3);
  CHECK(Perm::parse("312").pos(3) == 1);
  for (int t = 1; t <= 5; ++t) CHECK(Perm::identity(5).pos(t) == t);
  Perm x = Perm::parse("25314");
  for (int t = 1; t <= 5; ++t) CHECK(x(x.pos(t)) == t);
  CHECK_THROWS_AS(Perm::parse("321").pos(4), std::invalid_argument);
}

TEST_CASE("bruhat order examples") {
  Perm e = Perm::identity(4);
  for (const Perm& v : all_perms(4)) CHECK(bruhat_leq(e, v));
  CHECK(bruhat_leq(Perm::parse("1324"), Perm::parse("2314")));
  CHECK_FALSE(bruhat_leq(Perm::parse("2143"), Perm::parse("2314")));
}

TEST_CASE("bruhat order agrees with the subword oracle on S4") {
  auto perms = all_perms(4);
  for (const Perm& u : perms)
    for (const Perm& v : perms)
      CHECK(bruhat_leq(u, v) == testref::bruhat_by_subwords(u, v));
}

TEST_CASE("robinson-schensted insertion") {
  auto [p, q] = rs_pair(Perm::parse("31524"));
  CHECK(p.rows == std::vector<std::vector<int>>{{1, 2, 4}, {3, 5}});
  CHECK(q.rows == std::vector<std::vector<int>>{{1, 3, 5}, {2, 4}});
  CHECK(is_standard(p, 5));
  CHECK(is_standard(q, 5));

  auto [pe, qe] = rs_pair(Perm::identity(4));
  CHECK(pe.rows == std::vector<std::vector<int>>{{1, 2, 3, 4}});
  CHECK(pe == qe);

  auto [pc, qc] = rs_pair(Perm::parse("321"));
  CHECK(pc.rows == std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(pc == qc);
}

TEST_CASE("rs shapes agree and inverse swaps the tableaux") {
  for (const Perm& w : all_perms(5)) {
    auto [p, q] = rs_pair(w);
    CHECK(is_standard(p, 5));
    CHECK(is_standard(q, 5));
    REQUIRE(p.rows.size() == q.rows.size());
    for (size_t r = 0; r < p.rows.size(); ++r) CHECK(p.rows[r].size() == q.rows[r].size());
    auto [pi, qi] = rs_pair(w.inverse());
    CHECK(pi == q);
    CHECK(qi == p);
  }
}

TEST_CASE("knuth equivalence examples") {
  Perm w = Perm::parse("31524");
  CHECK(knuth_equivalent(w, w));
  // one elementary move yxz <-> yzx inside 31524 -> 35124
  CHECK(knuth_equivalent(w, Perm::parse("35124")));
  CHECK(testref::knuth_by_bfs(w, Perm::parse("35124")));
  CHECK_FALSE(knuth_equivalent(Perm::parse("123"), Perm::parse("321")));
}

TEST_CASE("knuth equivalence matches the BFS oracle on S4") {
  auto perms = all_perms(4);
  for (const Perm& u : perms)
    for (const Perm& v : perms)
      CHECK(knuth_equivalent(u, v) == testref::knuth_by_bfs(u, v));
}

TEST_CASE("parsing and text forms") {
  CHECK(Perm::parse("2314").str() == "2314");
  CHECK(Perm::parse("2,3,1,4") == Perm::parse("2314"));
  std::vector<int> big{10, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(Perm(big).str() == "10,1,2,3,4,5,6,7,8,9");
  CHECK(Perm::parse("10,1,2,3,4,5,6,7,8,9") == Perm(big));
  CHECK_THROWS_AS(Perm::parse("122"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse("130"), std::invalid_argument);
}
