#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bsdist/demazure.hpp"
#include "bsdist/hecke.hpp"
#include "bsdist/oracle.hpp"
#include "test_oracles.hpp"

using namespace bsdist;

namespace {

Flag random_flag(std::mt19937& rng, int n, int p) {
  std::uniform_int_distribution<int> entry(0, p - 1);
  for (;;) {
    std::vector<std::vector<int>> basis(static_cast<size_t>(n),
                                        std::vector<int>(static_cast<size_t>(n)));
    for (auto& v : basis)
      for (int& x : v) x = entry(rng);
    try {
      return Flag(p, std::move(basis));
    } catch (const std::invalid_argument&) {
      // singular draw, try again
    }
  }
}

}  // namespace

TEST_CASE("flag validation") {
  CHECK_THROWS_AS(Flag(2, {{1, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Flag(1, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(Flag(4, {{1, 0}, {0, 1}}), std::invalid_argument);  // composite modulus
  // singular mod 3 even though the rows look generic
  CHECK_THROWS_AS(Flag(3, {{1, 2, 0}, {0, 1, 1}, {1, 0, 1}}), std::invalid_argument);
  Flag f(3, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  CHECK(f.n() == 3);
}

TEST_CASE("fiber choices") {
  Flag f = Flag::standard(3, 2);
  std::vector<Flag> fibers = fiber_choices(f, 1);
  REQUIRE(fibers.size() == 3);  // p + 1
  // one of them is the original flag
  int same = 0, distinct_lines = 0;
  std::set<std::vector<int>> lines;
  for (const Flag& g : fibers) {
    if (g.basis() == f.basis()) ++same;
    // normalize the spanned line of the first vector over F_2: the vector itself
    lines.insert(g.vec(1));
  }
  CHECK(same == 1);
  distinct_lines = static_cast<int>(lines.size());
  CHECK(distinct_lines == 3);
  CHECK_THROWS_AS(fiber_choices(f, 3), std::invalid_argument);

  for (int p : {2, 3, 5}) {
    Flag base = Flag::standard(4, p);
    CHECK(fiber_choices(base, 2).size() == static_cast<size_t>(p) + 1);
  }
}

TEST_CASE("schubert labels of coordinate flags") {
  CHECK(schubert_label(Flag::standard(4, 2)) == Perm::identity(4));
  for (const Perm& w : all_perms(4)) {
    CHECK(schubert_label(Flag::coordinate(w, 2)) == w);
    CHECK(schubert_label(Flag::coordinate(w, 3)) == w);
  }
}

TEST_CASE("the three flags of F_2^2") {
  // two flags land in the open cell, one is the closed point
  Flag e = Flag::standard(2, 2);
  std::map<Perm, int> labels;
  for (const Flag& g : fiber_choices(e, 1)) ++labels[schubert_label(g)];
  CHECK(labels.at(Perm::identity(2)) == 1);
  CHECK(labels.at(Perm::transposition(2, 1)) == 2);
}

TEST_CASE("labels agree with the rank-matrix oracle on random flags") {
  std::mt19937 rng(31415);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 4;
    int p = trial % 2 == 0 ? 2 : 3;
    Flag f = random_flag(rng, n, p);
    CHECK(schubert_label(f) == testref::label_by_rank_matrix(f));
  }
}

TEST_CASE("rank-one fiber fact: one short label, p long labels") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + trial % 3;
    int p = trial % 2 == 0 ? 2 : 3;
    Flag f = random_flag(rng, n, p);
    std::uniform_int_distribution<int> i_dist(1, n - 1);
    int i = i_dist(rng);
    Perm y = schubert_label(f);
    Perm ys = y.right_mul(i);
    Perm shorter = y.length() < ys.length() ? y : ys;
    Perm longer = y.length() < ys.length() ? ys : y;
    std::map<Perm, int> labels;
    for (const Flag& g : fiber_choices(f, i)) ++labels[schubert_label(g)];
    REQUIRE(labels.size() == 2);
    CHECK(labels.at(shorter) == 1);
    CHECK(labels.at(longer) == p);
  }
}

TEST_CASE("point counts for small words") {
  BSCount empty = count_bs(Word(3, {}), 2);
  CHECK(empty.counts == std::map<Perm, long long>{{Perm::identity(3), 1}});

  BSCount one = count_bs(Word(3, {1}), 2);
  CHECK(one.counts == std::map<Perm, long long>{{Perm::identity(3), 1},
                                                {Perm::transposition(3, 1), 2}});

  BSCount staircase = count_bs(Word::parse("123", 4), 2);
  CHECK(staircase.counts.at(Perm::parse("2341")) == 8);  // q^3 at q = 2
  CHECK(staircase.total() == 27);
}

TEST_CASE("frozen counts for 121 at p = 2") {
  BSCount bs = count_bs(Word(3, {1, 2, 1}), 2);
  std::map<Perm, long long> expected{
      {Perm::parse("123"), 3}, {Perm::parse("213"), 6}, {Perm::parse("132"), 2},
      {Perm::parse("312"), 4}, {Perm::parse("231"), 4}, {Perm::parse("321"), 8}};
  CHECK(bs.counts == expected);
  CHECK(bs.total() == 27);
  CHECK(verify_counts(Word(3, {1, 2, 1}), 2));
}

TEST_CASE("frozen counts for the repeated letter at p = 3") {
  // wt_11 = (1+q, q+q^2): at q = 3 that is (4, 12), total 16
  BSCount bs = count_bs(Word(2, {1, 1}), 3);
  CHECK(bs.counts == std::map<Perm, long long>{{Perm::identity(2), 4},
                                               {Perm::transposition(2, 1), 12}});
  CHECK(bs.total() == 16);
  CHECK(verify_counts(Word(2, {1, 1}), 3));
}

TEST_CASE("verify_counts for every word of length <= 4 over n = 3, p in {2, 3}") {
  for (int p : {2, 3}) {
    for (int len = 0; len <= 4; ++len) {
      for (const Word& r : testref::all_words(3, len)) CHECK(verify_counts(r, p));
    }
  }
}

TEST_CASE("verify_counts for the staircase word of S4 at p = 2") {
  Word r0 = r0_word(4);
  BSCount bs = count_bs(r0, 2);
  CHECK(bs.total() == 729);  // 3^6
  CHECK(verify_counts(r0, 2));
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(count_bs(Word(3, {1, 2, 1}), 2, 10), BudgetExceeded);
  CHECK_THROWS_AS(count_bs(Word::parse("121212121212121", 3), 97, kDefaultBudget),
                  BudgetExceeded);
}
