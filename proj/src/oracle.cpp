#include "bsdist/oracle.hpp"

#include "bsdist/hecke.hpp"

namespace bsdist {

namespace {

bool small_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int mod_inverse(int a, int p) {
  // p prime, a != 0 mod p; long long intermediates keep p^2 in range.
  long long result = 1, base = a % p;
  int e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

// Rank of the row span of m over F_p (destructive).
int rank_mod_p(std::vector<std::vector<int>> m, int p) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    long long inv = mod_inverse(m[r][c], p);
    for (size_t k = r + 1; k < rows; ++k) {
      if (m[k][c] == 0) continue;
      long long factor = m[k][c] * inv % p;
      for (size_t j = c; j < cols; ++j)
        m[k][j] = static_cast<int>(((m[k][j] - factor * m[r][j]) % p + p) % p);
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

Flag::Flag(int p, std::vector<std::vector<int>> basis) : p_(p), basis_(std::move(basis)) {
  if (!small_prime(p_)) throw std::invalid_argument("Flag: modulus must be prime");
  size_t n = basis_.size();
  if (n == 0) throw std::invalid_argument("Flag: empty basis");
  for (auto& v : basis_) {
    if (v.size() != n) throw std::invalid_argument("Flag: basis vector of wrong dimension");
    for (int& x : v) x = (x % p_ + p_) % p_;
  }
  if (rank_mod_p(basis_, p_) != static_cast<int>(n))
    throw std::invalid_argument("Flag: basis vectors are linearly dependent");
}

Flag Flag::standard(int n, int p) { return coordinate(Perm::identity(n), p); }

Flag Flag::coordinate(const Perm& w, int p) {
  int n = w.n();
  std::vector<std::vector<int>> basis(static_cast<size_t>(n),
                                      std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 1; i <= n; ++i) basis[static_cast<size_t>(i - 1)][static_cast<size_t>(w(i) - 1)] = 1;
  return Flag(p, std::move(basis), Unchecked{});
}

std::vector<Flag> fiber_choices(const Flag& f, int i) {
  int n = f.n(), p = f.p();
  if (i < 1 || i > n - 1) throw std::invalid_argument("fiber_choices: index out of range");
  const std::vector<int>& u = f.vec(i);
  const std::vector<int>& w = f.vec(i + 1);
  std::vector<Flag> out;
  out.reserve(static_cast<size_t>(p) + 1);
  for (int c = 0; c <= p; ++c) {
    std::vector<std::vector<int>> basis = f.basis();
    if (c < p) {
      // v_i <- u + c w; the line F_{i-1} + span(u + c w).
      for (size_t k = 0; k < u.size(); ++k)
        basis[static_cast<size_t>(i - 1)][k] =
            static_cast<int>((u[k] + static_cast<long long>(c) * w[k]) % p);
    } else {
      // v_i <- w; then u completes F_{i+1}.
      basis[static_cast<size_t>(i - 1)] = w;
      basis[static_cast<size_t>(i)] = u;
    }
    out.emplace_back(Flag(p, std::move(basis), Flag::Unchecked{}));
  }
  return out;
}

Perm schubert_label(const Flag& f) {
  // Gaussian elimination from the right: reduce each basis vector by the
  // previously placed ones until its last nonzero coordinate is fresh. The
  // rank matrix is then r(i,j) = #{k <= i : pivot_k <= j}, so the jump recipe
  // gives w(i) = pivot_i.
  int n = f.n(), p = f.p();
  std::vector<std::vector<int>> placed(static_cast<size_t>(n));  // by pivot position (0-based)
  std::vector<int> line(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> v = f.vec(i);
    for (;;) {
      int t = n - 1;
      while (t >= 0 && v[static_cast<size_t>(t)] == 0) --t;
      // t >= 0 always: v is independent of the previously placed vectors.
      std::vector<int>& other = placed[static_cast<size_t>(t)];
      if (other.empty()) {
        long long inv = mod_inverse(v[static_cast<size_t>(t)], p);
        for (int& x : v) x = static_cast<int>(x * inv % p);
        other = std::move(v);
        line[static_cast<size_t>(i - 1)] = t + 1;
        break;
      }
      long long factor = v[static_cast<size_t>(t)];  // other has pivot value 1
      for (int k = 0; k <= t; ++k)
        v[static_cast<size_t>(k)] = static_cast<int>(
            ((v[static_cast<size_t>(k)] - factor * other[static_cast<size_t>(k)]) % p + p) % p);
    }
  }
  return Perm(std::move(line));
}

long long BSCount::total() const {
  long long t = 0;
  for (const auto& [w, c] : counts) t += c;
  return t;
}

namespace {

void count_rec(const Flag& f, const Word& r, int depth, std::map<Perm, long long>& counts) {
  if (depth > r.size()) {
    ++counts[schubert_label(f)];
    return;
  }
  for (const Flag& g : fiber_choices(f, r.letter(depth))) count_rec(g, r, depth + 1, counts);
}

}  // namespace

BSCount count_bs(const Word& r, int p, long long budget) {
  if (!small_prime(p)) throw std::invalid_argument("count_bs: p must be prime");
  long long leaves = 1;
  for (int k = 0; k < r.size(); ++k) {
    leaves *= p + 1;
    if (leaves > budget)
      throw BudgetExceeded("count_bs: (p+1)^" + std::to_string(r.size()) +
                           " exceeds the leaf budget " + std::to_string(budget));
  }
  BSCount out{r, p, {}};
  count_rec(Flag::standard(r.n(), p), r, 1, out.counts);
  return out;
}

bool verify_counts(const Word& r, int p, long long budget) {
  BSCount bs = count_bs(r, p, budget);
  Distribution dist = wt_table(r);
  Int expected_total = 1;
  for (int k = 0; k < r.size(); ++k) expected_total *= p + 1;
  if (Int(bs.total()) != expected_total) return false;
  std::map<Perm, Int> expected;
  for (const auto& [x, numerator] : dist.numerators) expected[x] = numerator.eval_q_int(Int(p));
  for (const auto& [x, c] : bs.counts)
    if (c != 0 && !expected.count(x)) return false;
  for (const auto& [x, e] : expected) {
    auto it = bs.counts.find(x);
    Int got = it == bs.counts.end() ? Int(0) : Int(it->second);
    if (got != e) return false;
  }
  return true;
}

}  // namespace bsdist
