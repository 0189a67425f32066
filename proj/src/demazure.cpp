#include "bsdist/demazure.hpp"

#include <stdexcept>

namespace bsdist {

Perm dem_step(const Perm& w, int i) {
  if (i < 1 || i > w.n() - 1) throw std::invalid_argument("dem_step: index out of range");
  return w.right_ascent(i) ? w.right_mul(i) : w;
}

Perm dem_word(const Word& r) {
  Perm w = Perm::identity(r.n());
  for (int x : r.letters()) w = dem_step(w, x);
  return w;
}

Word descent_word(const Perm& w) {
  std::vector<int> tail;
  Perm u = w;
  while (!u.is_identity()) {
    for (int i = 1; i <= u.n() - 1; ++i) {
      if (!u.right_ascent(i)) {
        tail.push_back(i);
        u = u.right_mul(i);
        break;
      }
    }
  }
  return Word(w.n(), std::vector<int>(tail.rbegin(), tail.rend()));
}

Perm dem_product(const Perm& a, const Perm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dem_product: mismatched n");
  Perm w = a;
  Word expansion = descent_word(b);
  for (int x : expansion.letters()) w = dem_step(w, x);
  return w;
}

std::vector<Perm> shortenings(const Word& r) {
  std::vector<Perm> out;
  out.reserve(static_cast<size_t>(r.size()));
  for (int j = 1; j <= r.size(); ++j) out.push_back(dem_word(r.erased(j)));
  return out;
}

bool FwdBwd::supp_is_interval(int a, int c) const {
  if (static_cast<int>(supp.size()) != c - a + 1) return false;
  for (int t = a; t <= c; ++t)
    if (!supp.count(t)) return false;
  return true;
}

FwdBwd fwd_bwd(const Perm& x) {
  FwdBwd out;
  int n = x.n();
  for (int t = 1; t <= n; ++t) {
    int px = x.pos(t);
    int pw0 = n + 1 - t;
    if (px == pw0) continue;
    out.supp.insert(t);
    if (px < pw0)
      out.fwd.insert(t);
    else
      out.bwd.insert(t);
  }
  return out;
}

BraidShortening predict_braid_shortening(const Word& t1, int i, const Word& t2) {
  int n = t1.n();
  if (t2.n() != n) throw std::invalid_argument("predict_braid_shortening: mismatched n");
  Word braid(n, {i, i + 1, i});
  Word full = t1.concat(braid).concat(t2);
  if (!is_reduced(full) || product(full) != Perm::longest(n))
    throw std::invalid_argument("predict_braid_shortening: word is not a reduced word of w0");

  Perm u = product(t1);
  int a = u(i), b = u(i + 1), c = u(i + 2);
  (void)b;  // a < b < c is forced by reducedness of the braid block
  std::set<int> aset, bset;
  for (int j = 1; j <= i + 1; ++j)
    if (u(j) >= a && u(j) <= c) aset.insert(u(j));
  for (int j = i + 2; j <= n; ++j)
    if (u(j) >= a && u(j) <= c) bset.insert(u(j));

  // Cycle order: g_1 < ... < g_r ascending, then h_s > ... > h_1 descending.
  std::vector<int> cyc(aset.begin(), aset.end());
  cyc.insert(cyc.end(), bset.rbegin(), bset.rend());
  std::vector<int> line(static_cast<size_t>(n));
  for (int t = 1; t <= n; ++t) line[static_cast<size_t>(t - 1)] = t;
  for (size_t k = 0; k < cyc.size(); ++k)
    line[static_cast<size_t>(cyc[k] - 1)] = cyc[(k + 1) % cyc.size()];
  Perm sigma{std::move(line)};

  return {sigma, sigma.inverse().compose(Perm::longest(n))};
}

Perm r0_value(int n, int a, int c) {
  if (!(1 <= a && a < c && c <= n)) throw std::invalid_argument("r0_value: need 1 <= a < c <= n");
  std::vector<int> line;
  line.reserve(static_cast<size_t>(n));
  for (int t = n; t >= c + 1; --t) line.push_back(t);
  for (int t = c - 1; t >= a; --t) line.push_back(t);
  line.push_back(c);
  for (int t = a - 1; t >= 1; --t) line.push_back(t);
  return Perm(std::move(line));
}

Word r0_word(int n) {
  std::vector<int> letters;
  for (int c = 2; c <= n; ++c)
    for (int x = c - 1; x >= 1; --x) letters.push_back(x);
  return Word(n, std::move(letters));
}

}  // namespace bsdist
