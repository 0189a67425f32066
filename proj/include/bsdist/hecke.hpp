#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>

#include "bsdist/laurent.hpp"
#include "bsdist/perm.hpp"
#include "bsdist/word.hpp"

namespace bsdist {

/// An element of the Hecke algebra H_n(q), stored by its coordinates in the
/// normalized basis Ttilde_x = q^{-l(x)} T_x. Immutable value type.
class HeckeElt {
 public:
  explicit HeckeElt(int n) : n_(n) {}
  static HeckeElt unit(int n) { return basis(Perm::identity(n)); }
  static HeckeElt basis(const Perm& x);

  int n() const { return n_; }
  const std::unordered_map<Perm, Laurent, PermHash>& terms() const { return terms_; }
  Laurent coeff(const Perm& x) const;
  bool is_zero() const { return terms_.empty(); }

  /// Right multiplication by the generator T_i:
  ///   Ttilde_x T_i = q Ttilde_{x s_i}              if l(x s_i) > l(x),
  ///   Ttilde_x T_i = (q-1) Ttilde_x + Ttilde_{x s_i}  otherwise.
  HeckeElt times_gen(int i) const;
  /// Right multiplication by (1 + T_i):
  ///   Ttilde_x (1+T_i) = Ttilde_x + q Ttilde_{x s_i}  if l(x s_i) > l(x),
  ///   Ttilde_x (1+T_i) = q Ttilde_x + Ttilde_{x s_i}  otherwise.
  HeckeElt times_one_plus_gen(int i) const;

  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  HeckeElt scaled(const Laurent& s) const;

  bool operator==(const HeckeElt& o) const;
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

  /// Deterministic serialization (terms sorted by permutation), for grouping.
  std::string canonical_key() const;

 private:
  void add_term(const Perm& x, const Laurent& c);

  int n_;
  std::unordered_map<Perm, Laurent, PermHash> terms_;
};

/// F(R) = (1+T_{i_1})(1+T_{i_2})...(1+T_{i_L}); the empty word gives Ttilde_e.
/// The coordinates of F(R) are the subword weights wt_R(x).
HeckeElt f_of_word(const Word& r);

/// The weight table of a word: numerators of the distribution over the common
/// denominator (1+q)^L. Every numerator is a polynomial in q with nonnegative
/// coefficients and the numerators sum to (1+q)^L.
struct Distribution {
  int n = 0;
  int L = 0;
  std::map<Perm, Laurent> numerators;
};
Distribution wt_table(const Word& r);

/// Equality of the two distributions as rational functions of q. For words
/// of equal generalized length this is exactly F(R1) = F(R2).
bool distributions_equal(const Word& r1, const Word& r2);
/// A permutation where the distributions differ, if any (smallest in one-line
/// lexicographic order).
std::optional<Perm> distribution_witness(const Word& r1, const Word& r2);

/// Permutations with nonzero weight; for reduced R this is the Bruhat
/// interval [e, w(R)].
std::set<Perm> support(const Word& r);

/// D_R(x) = [q^{N-1}] wt_R(x), for R a reduced word of w0 (N = n(n-1)/2).
/// Counts the one-letter Demazure shortenings of R landing on x.
long d_coeff(const Word& r, const Perm& x);
/// All nonzero D_R values at once.
std::map<Perm, long> d_table(const Word& r);
/// Same, from an already computed F(R) of a reduced word of w0.
std::map<Perm, long> d_table_from(const HeckeElt& f);

/// Theta_R(a,b,c): signed sum of D_R(x) over x whose displaced-value support
/// is exactly [a,c], signed by sigma_b(x). Requires R in Red(w0) and a<b<c.
long theta(const Word& r, int a, int b, int c);
/// Theta over all triples, computed from a single Hecke product.
std::map<std::array<int, 3>, long> theta_all(const Word& r);
/// Same, from an already computed F(R) of a reduced word of w0.
std::map<std::array<int, 3>, long> theta_from(const HeckeElt& f);

}  // namespace bsdist
