#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bsdist/perm.hpp"

namespace bsdist {

/// A word over the alphabet {1, ..., n-1}, carrying its ambient rank n.
/// L(R) is the sequence length; the empty word is allowed.
class Word {
 public:
  Word(int n, std::vector<int> letters);
  /// Parse "121321" (digits, n <= 10) or "1,2,1,3,2,1".
  static Word parse(const std::string& text, int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  /// 1-based letter access.
  int letter(int j) const { return letters_[static_cast<size_t>(j - 1)]; }
  const std::vector<int>& letters() const { return letters_; }

  Word concat(const Word& other) const;
  /// The word with letter j (1-based) deleted.
  Word erased(int j) const;
  /// Letters 1..j and letters j+1..L.
  Word prefix(int j) const;
  Word suffix_from(int j) const;
  /// Letters replaced on the window [j, j+2] (used for braid rewrites).
  Word with_window(int j, int a, int b, int c) const;

  std::string str() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  int n_;
  std::vector<int> letters_;
};

/// Ordinary product w(R) = s_{i_1} ... s_{i_L}; the empty word gives e.
Perm product(const Word& r);
/// Coxeter length of the product.
int coxeter_length(const Word& r);
bool is_reduced(const Word& r);

/// Restriction of R to each two-letter alphabet {i, i+1}, i = 1..n-2.
/// Two words are commutation-equivalent iff their keys are equal. For n <= 2
/// no alphabet pair exists and the key degenerates to the word itself, which
/// is the correct equivalence there (no commutation move applies).
using ClassKey = std::vector<std::vector<int>>;
ClassKey class_key(const Word& r);
std::string class_key_str(const Word& r);

struct MoveNeighbors {
  std::vector<Word> commutation;
  std::vector<Word> braid;
};
/// All words one commutation move away, and all words one braid move away.
MoveNeighbors neighbors(const Word& r);

/// Red(w), generated by right-descent recursion, sorted lexicographically.
std::vector<Word> reduced_words(const Perm& w);

/// The time statistics of a reduced word of w0: tau(a,b) is the step at which
/// the value pair (a,b) becomes an inversion, and tvals(a,b,c) = +1 iff
/// tau(a,b) < tau(b,c).
struct TripleStat {
  int n = 0;
  std::map<std::pair<int, int>, int> tau;
  std::map<std::array<int, 3>, int> tvals;
};
TripleStat triple_stats(const Word& r);

/// Value pairs (a,b), a<b, in the order (1,2),(1,3),(2,3),(1,4),... (sorted
/// by larger entry, then smaller).
std::vector<std::pair<int, int>> pair_order(int n);
/// Triples (a,b,c), a<b<c, in lexicographic order.
std::vector<std::array<int, 3>> triple_order(int n);

int digit_sum(const Word& r);
/// Complement: each letter i replaced by n-i.
Word complement(const Word& r);
Word reversed(const Word& r);

/// Reverse-bubble-sort word carrying w to w0: scan i = 1..n-1, swap whenever
/// w(i) < w(i+1), restart after each full pass, stop when a pass is clean.
Word std_word(const Perm& w);
/// Standard extension R . Std(w(R)); requires R reduced. A reduced word of w0.
Word ext(const Word& r);

/// Indices t that can be brought to the front of R by commutation moves:
/// t occurs in R and its first occurrence precedes every occurrence of t-1
/// and t+1.
std::set<int> k_set(const Word& r);

/// The graph of commutation classes of Red(w): one vertex per class with a
/// canonical (lexicographically least) representative; an edge joins two
/// classes when some representatives differ by a single braid move.
struct ClassGraph {
  int n = 0;
  Perm w = Perm::identity(1);
  struct Vertex {
    Word canonical;
    int size = 0;
    int digit_sum = 0;
    std::vector<int> t_vector;  // over lexicographic triples; empty unless w = w0
  };
  std::vector<Vertex> vertices;            // sorted by canonical word
  std::vector<std::pair<int, int>> edges;  // vertex index pairs, i < j, sorted
};
ClassGraph class_graph(const Perm& w);

}  // namespace bsdist
