#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bsdist {

/// A permutation of [n] in one-line notation. Immutable value type; all
/// binary operations require matching n.
class Perm {
 public:
  /// Construct from one-line notation w(1)..w(n); validates bijectivity.
  explicit Perm(std::vector<int> one_line);

  static Perm identity(int n);
  /// The longest element w0 = n(n-1)...21.
  static Perm longest(int n);
  /// The simple transposition s_i in S_n.
  static Perm transposition(int n, int i);
  /// Parse "2314" (n <= 9) or "2,3,1,4".
  static Perm parse(const std::string& text);

  int n() const { return static_cast<int>(line_.size()); }
  /// Value at position i (1-based): w(i).
  int operator()(int i) const { return line_[static_cast<size_t>(i - 1)]; }
  /// Position of value t (1-based): pos_w(t) = w^{-1}(t).
  int pos(int t) const;
  const std::vector<int>& one_line() const { return line_; }

  Perm inverse() const;
  /// Coxeter length = number of inversion pairs.
  int length() const;
  /// True iff w(i) < w(i+1), i.e. right multiplication by s_i increases length.
  bool right_ascent(int i) const;
  /// w * s_i: swaps the entries at positions i and i+1.
  Perm right_mul(int i) const;
  /// Composition (u.compose(v))(k) = u(v(k)).
  Perm compose(const Perm& v) const;

  bool is_identity() const;

  /// "2314" for n <= 9, comma-separated otherwise.
  std::string str() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> line_;
};

struct PermHash {
  size_t operator()(const Perm& w) const {
    size_t h = 1469598103934665603ull;
    for (int x : w.one_line()) {
      h ^= static_cast<size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Bruhat order via the rank-matrix dominance criterion:
/// u <= v iff for all i,j: #{k <= i : u(k) >= j} <= #{k <= i : v(k) >= j}.
bool bruhat_leq(const Perm& u, const Perm& v);

/// All n! permutations of [n] in lexicographic order.
std::vector<Perm> all_perms(int n);

/// A standard Young tableau, stored as its rows.
struct Tableau {
  std::vector<std::vector<int>> rows;
  bool operator==(const Tableau&) const = default;
};

/// True iff t is standard with entries exactly 1..m.
bool is_standard(const Tableau& t, int m);

/// Robinson-Schensted row insertion: returns (P(w), Q(w)).
std::pair<Tableau, Tableau> rs_pair(const Perm& w);

/// True iff P(u) = P(v).
bool knuth_equivalent(const Perm& u, const Perm& v);

}  // namespace bsdist
