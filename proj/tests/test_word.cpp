#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <queue>

#include "bsdist/demazure.hpp"
#include "bsdist/word.hpp"
#include "test_oracles.hpp"

using namespace bsdist;

TEST_CASE("products and reducedness") {
  CHECK(product(Word(3, {})) == Perm::identity(3));
  CHECK(product(Word(3, {1, 2, 1})) == Perm::parse("321"));
  CHECK(product(Word(2, {1, 1})) == Perm::identity(2));
  CHECK(is_reduced(Word(3, {1, 2, 1})));
  CHECK_FALSE(is_reduced(Word(2, {1, 1})));
  CHECK(is_reduced(Word::parse("1213214321", 5)));
  CHECK(product(Word::parse("1213214321", 5)) == Perm::longest(5));
  CHECK_THROWS_AS(Word(3, {3}), std::invalid_argument);
}

TEST_CASE("class keys") {
  CHECK(class_key(Word(4, {1, 3})) == class_key(Word(4, {3, 1})));
  // the {1,2} restrictions of 121321 and 212321 differ: 121 vs 212
  Word r = Word::parse("121321", 4), rp = Word::parse("212321", 4);
  CHECK(class_key(r) != class_key(rp));
  CHECK(class_key(r)[0] == std::vector<int>{1, 2, 1, 2, 1});
  CHECK(class_key(rp)[0] == std::vector<int>{2, 1, 2, 2, 1});
  ClassKey empty_key = class_key(Word(4, {}));
  for (const auto& part : empty_key) CHECK(part.empty());
  // n = 2 degenerates to word identity
  CHECK(class_key(Word(2, {1})) != class_key(Word(2, {1, 1})));
}

TEST_CASE("move neighbors support a known rewriting chain") {
  // 1213214321 ~C 1231214321 ~B 1232124321 ~C 1232142321 ~B 1232143231
  Word a = Word::parse("1213214321", 5);
  Word b = Word::parse("1231214321", 5);
  Word c = Word::parse("1232124321", 5);
  auto has = [](const std::vector<Word>& list, const Word& w) {
    for (const auto& x : list)
      if (x == w) return true;
    return false;
  };
  CHECK(has(neighbors(a).commutation, b));
  CHECK(has(neighbors(b).braid, c));
  CHECK(has(neighbors(c).braid, b));
  MoveNeighbors none = neighbors(Word(3, {1, 2}));
  CHECK(none.commutation.empty());
  CHECK(none.braid.empty());
}

TEST_CASE("reduced word enumeration") {
  std::vector<Word> red3 = reduced_words(Perm::longest(3));
  REQUIRE(red3.size() == 2);
  CHECK(red3[0] == Word(3, {1, 2, 1}));
  CHECK(red3[1] == Word(3, {2, 1, 2}));

  CHECK(reduced_words(Perm::identity(4)) == std::vector<Word>{Word(4, {})});

  // brute-force oracle: all 3^6 words of length 6 with reduced product 4321
  int count = 0;
  for (const Word& w : testref::all_words(4, 6))
    if (is_reduced(w) && product(w) == Perm::longest(4)) ++count;
  CHECK(count == 16);
  std::vector<Word> red4 = reduced_words(Perm::longest(4));
  CHECK(red4.size() == 16);
  CHECK(std::is_sorted(red4.begin(), red4.end()));
  for (const Word& w : red4) {
    CHECK(is_reduced(w));
    CHECK(product(w) == Perm::longest(4));
  }
}

TEST_CASE("red(w0) sizes for n = 5") {
  CHECK(reduced_words(Perm::longest(5)).size() == 768);
}

TEST_CASE("triple statistics of 121321 and 212321") {
  TripleStat st = triple_stats(Word::parse("121321", 4));
  std::vector<int> taus;
  for (const auto& pr : pair_order(4)) taus.push_back(st.tau.at(pr));
  CHECK(taus == std::vector<int>{1, 2, 3, 4, 5, 6});
  for (const auto& tr : triple_order(4)) CHECK(st.tvals.at(tr) == 1);

  TripleStat sp = triple_stats(Word::parse("212321", 4));
  std::vector<int> taus2;
  for (const auto& pr : pair_order(4)) taus2.push_back(sp.tau.at(pr));
  CHECK(taus2 == std::vector<int>{3, 2, 1, 4, 5, 6});
  CHECK(sp.tvals.at({1, 2, 3}) == -1);
  CHECK(sp.tvals.at({1, 2, 4}) == 1);
  CHECK(sp.tvals.at({1, 3, 4}) == 1);
  CHECK(sp.tvals.at({2, 3, 4}) == 1);

  CHECK(triple_stats(Word(3, {1, 2, 1})).tvals.at({1, 2, 3}) == 1);
  CHECK_THROWS_AS(triple_stats(Word(3, {1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(triple_stats(Word(3, {1, 1, 1})), std::invalid_argument);
}

TEST_CASE("digit sums, complement, reverse") {
  CHECK(digit_sum(Word(3, {1, 2, 1})) == 4);
  CHECK(digit_sum(Word(3, {2, 1, 2})) == 5);
  CHECK(digit_sum(Word(3, {})) == 0);
  CHECK(complement(Word(3, {1, 2, 1})) == Word(3, {2, 1, 2}));
  CHECK(reversed(Word(3, {1, 2, 1})) == Word(3, {1, 2, 1}));
  Word r = Word::parse("121321", 4);
  CHECK(reversed(complement(r)) == complement(reversed(r)));
  CHECK(complement(complement(r)) == r);
  CHECK(reversed(reversed(r)) == r);
  auto cr = complement(Word(3, {}));
  CHECK(cr == Word(3, {}));
}

TEST_CASE("standard word by reverse bubble sort") {
  CHECK(std_word(Perm::longest(4)) == Word(4, {}));
  CHECK(std_word(Perm::parse("12")) == Word(2, {1}));
  CHECK(std_word(Perm::parse("123")) == Word(3, {1, 2, 1}));
  for (const Perm& w : all_perms(4)) {
    Word s = std_word(w);
    // every recorded step increases length and the result lands on w0
    Perm u = w;
    for (int k = 1; k <= s.size(); ++k) {
      CHECK(u.right_ascent(s.letter(k)));
      u = u.right_mul(s.letter(k));
    }
    CHECK(u == Perm::longest(4));
    CHECK(s.size() == Perm::longest(4).length() - w.length());
  }
}

TEST_CASE("standard extension") {
  Word in_red = Word::parse("121321", 4);
  CHECK(ext(in_red) == in_red);
  CHECK(ext(Word(2, {})) == Word(2, {1}));
  Word r12 = Word(3, {1, 2});
  Word e = ext(r12);
  CHECK(e.prefix(2) == r12);
  CHECK(is_reduced(e));
  CHECK(product(e) == Perm::longest(3));
  CHECK_THROWS_AS(ext(Word(2, {1, 1})), std::invalid_argument);
}

TEST_CASE("standard extension is reduced to w0 for every reduced word, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    long checked = 0;
    for (const Perm& w : all_perms(n)) {
      for (const Word& r : reduced_words(w)) {
        Word e = ext(r);
        CHECK(is_reduced(e));
        CHECK(product(e) == Perm::longest(n));
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("k_set first-occurrence rule") {
  CHECK(k_set(Word::parse("121321", 4)) == std::set<int>{1});
  CHECK(k_set(Word(4, {1, 3, 2})) == std::set<int>{1, 3});
  CHECK(k_set(Word(4, {})) == std::set<int>{});
  CHECK(k_set(Word(4, {3})) == std::set<int>{3});
}

TEST_CASE("k_set equals the commutation-class oracle on 500 random words") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<int> n_dist(2, 6);
  for (int trial = 0; trial < 500; ++trial) {
    Word r = testref::random_word(rng, n_dist(rng), 10);
    CHECK(k_set(r) == testref::k_set_by_class(r));
  }
}

TEST_CASE("class keys are commutation-class invariants flipped only by braids") {
  for (int n = 3; n <= 5; ++n) {
    for (const Word& r : reduced_words(Perm::longest(n))) {
      MoveNeighbors mv = neighbors(r);
      for (const Word& c : mv.commutation) CHECK(class_key(c) == class_key(r));
      for (const Word& b : mv.braid) CHECK(class_key(b) != class_key(r));
    }
  }
}

TEST_CASE("class key equality matches the commutation-class oracle, n = 4") {
  std::vector<Word> words = reduced_words(Perm::longest(4));
  for (const Word& r : words) {
    auto cls = testref::commutation_class(r);
    for (const Word& s : words)
      CHECK((class_key(r) == class_key(s)) == (cls.count(s.letters()) > 0));
  }
}

TEST_CASE("move graph on Red(w0) is connected, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Word> words = reduced_words(Perm::longest(n));
    std::map<std::vector<int>, int> index;
    for (size_t k = 0; k < words.size(); ++k) index[words[k].letters()] = static_cast<int>(k);
    std::vector<char> seen(words.size(), 0);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = 1;
    size_t reached = 1;
    while (!todo.empty()) {
      int k = todo.front();
      todo.pop();
      MoveNeighbors mv = neighbors(words[static_cast<size_t>(k)]);
      for (const auto& list : {mv.commutation, mv.braid}) {
        for (const Word& next : list) {
          int j = index.at(next.letters());
          if (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            ++reached;
            todo.push(j);
          }
        }
      }
    }
    CHECK(reached == words.size());
  }
}

TEST_CASE("T-vector characterizes commutation classes, n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    std::vector<Word> words = reduced_words(Perm::longest(n));
    std::map<std::string, std::set<std::map<std::array<int, 3>, int>>> per_class;
    for (const Word& r : words) per_class[class_key_str(r)].insert(triple_stats(r).tvals);
    std::set<std::map<std::array<int, 3>, int>> all_vectors;
    for (const auto& [key, vecs] : per_class) {
      CHECK(vecs.size() == 1);  // constant on each class
      all_vectors.insert(*vecs.begin());
    }
    CHECK(all_vectors.size() == per_class.size());  // injective across classes
  }
}

TEST_CASE("braid moves flip exactly one triple and shift the digit sum by one, n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    for (const Word& r : reduced_words(Perm::longest(n))) {
      TripleStat st = triple_stats(r);
      MoveNeighbors mv = neighbors(r);
      for (const Word& b : mv.braid) {
        CHECK(std::abs(digit_sum(r) - digit_sum(b)) == 1);
        TripleStat sb = triple_stats(b);
        int flips = 0;
        for (const auto& tr : triple_order(n))
          if (st.tvals.at(tr) != sb.tvals.at(tr)) ++flips;
        CHECK(flips == 1);
      }
    }
  }
}

TEST_CASE("class graph shapes") {
  ClassGraph g3 = class_graph(Perm::longest(3));
  REQUIRE(g3.vertices.size() == 2);
  CHECK(g3.edges == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(g3.vertices[0].canonical == Word(3, {1, 2, 1}));
  CHECK(g3.vertices[1].canonical == Word(3, {2, 1, 2}));

  ClassGraph g4 = class_graph(Perm::longest(4));
  CHECK(g4.vertices.size() == 8);
  long words = 0;
  for (const auto& v : g4.vertices) words += v.size;
  CHECK(words == 16);
  for (const auto& e : g4.edges) {
    int ds1 = g4.vertices[static_cast<size_t>(e.first)].digit_sum;
    int ds2 = g4.vertices[static_cast<size_t>(e.second)].digit_sum;
    CHECK(std::abs(ds1 - ds2) == 1);
  }
  for (const auto& v : g4.vertices) CHECK(v.t_vector.size() == 4);

  ClassGraph g5 = class_graph(Perm::longest(5));
  CHECK(g5.vertices.size() == 62);
}

TEST_CASE("word parsing") {
  CHECK(Word::parse("121321", 4) == Word(4, {1, 2, 1, 3, 2, 1}));
  CHECK(Word::parse("1,2,1", 3) == Word(3, {1, 2, 1}));
  CHECK(Word::parse("", 3) == Word(3, {}));
  CHECK_THROWS_AS(Word::parse("12", 11), std::invalid_argument);
  CHECK(Word::parse("1,2", 11) == Word(11, {1, 2}));
  CHECK_THROWS_AS(Word::parse("103", 4), std::invalid_argument);
  std::vector<int> big{10, 1};
  CHECK(Word(12, big).str() == "10,1");
}
