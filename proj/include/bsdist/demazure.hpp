#pragma once

#include <set>
#include <vector>

#include "bsdist/perm.hpp"
#include "bsdist/word.hpp"

namespace bsdist {

/// Elementary Demazure product: w*s_i = w s_i if length increases, else w.
Perm dem_step(const Perm& w, int i);

/// Word Demazure product e * s_{i_1} * ... * s_{i_L}.
Perm dem_word(const Word& r);

/// Demazure product of two permutations; b is expanded through a
/// descent-generated reduced word (the result does not depend on the choice).
Perm dem_product(const Perm& a, const Perm& b);

/// One reduced word for w, built by repeatedly peeling the first right descent.
Word descent_word(const Perm& w);

/// Entry j is Dem(R with letter j deleted), for j = 1..L(R).
std::vector<Perm> shortenings(const Word& r);

/// Displacement of x relative to w0: supp = values whose position differs
/// from their w0 position, split into forward (strictly smaller position)
/// and backward (strictly larger position).
struct FwdBwd {
  std::set<int> supp;
  std::set<int> fwd;
  std::set<int> bwd;
  /// -1 if b is forward, +1 if backward, 0 if not displaced.
  int sigma(int b) const {
    if (fwd.count(b)) return -1;
    if (bwd.count(b)) return 1;
    return 0;
  }
  /// True iff supp equals the integer interval [a, c].
  bool supp_is_interval(int a, int c) const;
};
FwdBwd fwd_bwd(const Perm& x);

/// For a reduced word t1 . i(i+1)i . t2 of w0, the cycle sigma built from the
/// prefix product u = w(t1) (values a = u(i) < b = u(i+1) < c = u(i+2); A the
/// values of [a,c] at positions <= i+1, B those at positions >= i+2;
/// sigma = (g_1 ... g_r h_s ... h_1) fixing everything outside [a,c]) and the
/// predicted shortening v1 = sigma^{-1} w0, which equals Dem(t1 . i . t2).
struct BraidShortening {
  Perm sigma;
  Perm v1;
};
BraidShortening predict_braid_shortening(const Word& t1, int i, const Word& t2);

/// Closed form for the one-letter Demazure shortenings of the staircase word:
/// v_{a,c} = n(n-1)...(c+1) (c-1)...a c (a-1)...1, with w0 = (a a+1 ... c) v_{a,c}.
Perm r0_value(int n, int a, int c);

/// The staircase word R0 = 1 (21) (321) ... ((n-1)...21).
Word r0_word(int n);

}  // namespace bsdist
