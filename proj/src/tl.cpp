#include "bsdist/tl.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsdist {

TLDiagram TLDiagram::identity(int n) {
  if (n < 1) throw std::invalid_argument("TLDiagram: rank must be positive");
  std::vector<int> partner(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    partner[static_cast<size_t>(i)] = n + i;
    partner[static_cast<size_t>(n + i)] = i;
  }
  return TLDiagram(std::move(partner));
}

TLDiagram TLDiagram::generator(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("TLDiagram::generator: index out of range");
  TLDiagram d = identity(n);
  int t = i - 1;  // top i, 0-based
  d.partner_[static_cast<size_t>(t)] = t + 1;
  d.partner_[static_cast<size_t>(t + 1)] = t;
  d.partner_[static_cast<size_t>(n + t)] = n + t + 1;
  d.partner_[static_cast<size_t>(n + t + 1)] = n + t;
  return d;
}

std::vector<std::pair<int, int>> TLDiagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < 2 * n(); ++a) {
    int b = partner(a);
    if (a < b) out.emplace_back(a, b);
  }
  return out;  // already sorted by first coordinate
}

bool TLDiagram::is_planar() const {
  // Boundary circle: top 1..n then bottom n..1; an arc (a, b) is a chord.
  int nn = n();
  auto circle = [&](int point) { return point < nn ? point : 2 * nn - 1 - (point - nn); };
  std::vector<int> stack;
  std::vector<int> open(static_cast<size_t>(2 * nn), -1);
  std::vector<int> at(static_cast<size_t>(2 * nn));
  for (int p = 0; p < 2 * nn; ++p) at[static_cast<size_t>(circle(p))] = p;
  for (int c = 0; c < 2 * nn; ++c) {
    int p = at[static_cast<size_t>(c)];
    int q = partner(p);
    if (open[static_cast<size_t>(q)] >= 0) {
      if (stack.empty() || stack.back() != q) return false;
      stack.pop_back();
    } else {
      open[static_cast<size_t>(p)] = c;
      stack.push_back(p);
    }
  }
  return stack.empty();
}

std::pair<TLDiagram, int> TLDiagram::stack(const TLDiagram& below) const {
  int nn = n();
  if (below.n() != nn) throw std::invalid_argument("TLDiagram::stack: mismatched rank");
  // Points of the composite: outer top = this top (0..n-1); outer bottom =
  // below bottom (n..2n-1). Middle nodes m in [0, n): this bottom m glued to
  // below top m.
  std::vector<int> partner(static_cast<size_t>(2 * nn), -1);
  std::vector<char> mid_seen(static_cast<size_t>(nn), 0);

  auto walk = [&](bool start_in_top, int start) {
    // Returns the outer endpoint reached from an outer point, marking the
    // middle nodes crossed along the way. In the upper diagram pt is a point
    // of *this; in the lower diagram pt is a point of below (its top points
    // are the middle nodes).
    bool in_top = start_in_top;
    int pt = start;
    for (;;) {
      if (in_top) {
        int q = partner_[static_cast<size_t>(pt)];
        if (q < nn) return q;  // outer top
        int m = q - nn;
        mid_seen[static_cast<size_t>(m)] = 1;
        in_top = false;
        pt = m;  // continue at below's top point m
      } else {
        int q = below.partner_[static_cast<size_t>(pt)];
        if (q >= nn) return q;  // outer bottom
        mid_seen[static_cast<size_t>(q)] = 1;
        in_top = true;
        pt = nn + q;  // continue at this diagram's bottom point q
      }
    }
  };

  for (int a = 0; a < 2 * nn; ++a) {
    if (partner[static_cast<size_t>(a)] >= 0) continue;
    int b = a < nn ? walk(true, a) : walk(false, a);
    partner[static_cast<size_t>(a)] = b;
    partner[static_cast<size_t>(b)] = a;
  }

  int loops = 0;
  for (int m = 0; m < nn; ++m) {
    if (mid_seen[static_cast<size_t>(m)]) continue;
    // Trace the closed cycle through middle node m.
    ++loops;
    int cur = m;
    bool in_top = true;  // about to use this diagram's pairing from bottom point cur
    do {
      if (in_top) {
        int q = partner_[static_cast<size_t>(nn + cur)];
        cur = q - nn;  // stays in the middle: outer points were all consumed
        mid_seen[static_cast<size_t>(cur)] = 1;
        in_top = false;
      } else {
        int q = below.partner_[static_cast<size_t>(cur)];
        cur = q;
        mid_seen[static_cast<size_t>(cur)] = 1;
        in_top = true;
      }
    } while (cur != m || !in_top);
  }

  return {TLDiagram(std::move(partner)), loops};
}

TLMonomial tl_product(const Word& r) {
  TLMonomial out{TLDiagram::identity(r.n()), 0};
  for (int x : r.letters()) {
    auto [d, loops] = out.diagram.stack(TLDiagram::generator(r.n(), x));
    out.diagram = d;
    out.loops += loops;
  }
  return out;
}

bool tl_equal(const Word& r1, const Word& r2) {
  if (r1.n() != r2.n()) throw std::invalid_argument("tl_equal: mismatched n");
  return tl_product(r1) == tl_product(r2);
}

}  // namespace bsdist
