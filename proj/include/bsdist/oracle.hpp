#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsdist/budget.hpp"
#include "bsdist/perm.hpp"
#include "bsdist/word.hpp"

namespace bsdist {

/// A complete flag over F_p, stored as a basis v_1, ..., v_n with
/// F_i = span(v_1, ..., v_i). Validated to be linearly independent mod p.
class Flag {
 public:
  Flag(int p, std::vector<std::vector<int>> basis);
  /// The standard flag E_i = <e_1, ..., e_i>.
  static Flag standard(int n, int p);
  /// The coordinate flag E^w_i = <e_{w(1)}, ..., e_{w(i)}>.
  static Flag coordinate(const Perm& w, int p);

  int n() const { return static_cast<int>(basis_.size()); }
  int p() const { return p_; }
  /// 1-based basis vector access.
  const std::vector<int>& vec(int i) const { return basis_[static_cast<size_t>(i - 1)]; }
  const std::vector<std::vector<int>>& basis() const { return basis_; }

 private:
  friend std::vector<Flag> fiber_choices(const Flag& f, int i);
  struct Unchecked {};
  Flag(int p, std::vector<std::vector<int>> basis, Unchecked)
      : p_(p), basis_(std::move(basis)) {}

  int p_;
  std::vector<std::vector<int>> basis_;
};

/// The p+1 flags agreeing with f in every dimension except i: the i-th
/// subspaces run over the lines of F_{i+1}/F_{i-1} lifted over F_{i-1},
/// parametrized as F_{i-1} + span(u + c w) for c in F_p plus F_{i-1} + span(w),
/// where u = v_i and w = v_{i+1}. The flag f itself is among the choices.
std::vector<Flag> fiber_choices(const Flag& f, int i);

/// The permutation w with f in the Schubert cell X_w: w(i) is the unique j
/// where the rank r(i,j) = dim(F_i cap E_j) jumps, i.e. r(i,j) - r(i-1,j) = 1
/// and r(i,j-1) - r(i-1,j-1) = 0.
Perm schubert_label(const Flag& f);

/// Point count of the length-L flag walk over F_p, tallied by the Schubert
/// cell of the final flag. Sum of counts is (p+1)^L.
struct BSCount {
  Word r;
  int p;
  std::map<Perm, long long> counts;
  long long total() const;
};
/// Throws BudgetExceeded when (p+1)^L would exceed the leaf budget.
BSCount count_bs(const Word& r, int p, long long budget = kDefaultBudget);

/// True iff the point counts match the weight table evaluated at q = p.
bool verify_counts(const Word& r, int p, long long budget = kDefaultBudget);

}  // namespace bsdist
