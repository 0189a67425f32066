#pragma once

#include <utility>
#include <vector>

#include "bsdist/word.hpp"

namespace bsdist {

/// A planar perfect matching on 2n boundary points: top 1..n (indices 0..n-1,
/// left to right) and bottom 1..n (indices n..2n-1, left to right).
class TLDiagram {
 public:
  /// All-vertical pairing (the unit diagram).
  static TLDiagram identity(int n);
  /// Generator U_i: top i -- top i+1, bottom i -- bottom i+1, vertical elsewhere.
  static TLDiagram generator(int n, int i);

  int n() const { return static_cast<int>(partner_.size()) / 2; }
  int partner(int point) const { return partner_[static_cast<size_t>(point)]; }
  /// Canonical form: matched point pairs (a, b) with a < b, sorted.
  std::vector<std::pair<int, int>> pairs() const;
  bool is_planar() const;

  /// Diagram composition, this factor stacked atop the other; returns the
  /// spliced diagram and the number of closed loops formed in the middle.
  std::pair<TLDiagram, int> stack(const TLDiagram& below) const;

  bool operator==(const TLDiagram&) const = default;

 private:
  explicit TLDiagram(std::vector<int> partner) : partner_(std::move(partner)) {}
  std::vector<int> partner_;  // involution on [0, 2n) without fixed points
};

/// delta^loops times a single diagram; products of generators never leave
/// this set (delta = q+1).
struct TLMonomial {
  TLDiagram diagram;
  long loops = 0;
  bool operator==(const TLMonomial&) const = default;
};

/// U_{i_1} U_{i_2} ... U_{i_L}; the empty word gives the unit diagram with no loops.
TLMonomial tl_product(const Word& r);

/// True iff the two products have identical pairing and loop exponent.
bool tl_equal(const Word& r1, const Word& r2);

}  // namespace bsdist
