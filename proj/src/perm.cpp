#include "bsdist/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bsdist {

Perm::Perm(std::vector<int> one_line) : line_(std::move(one_line)) {
  int n = static_cast<int>(line_.size());
  if (n == 0) throw std::invalid_argument("Perm: empty one-line notation");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int x : line_) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x)])
      throw std::invalid_argument("Perm: not a bijection on [n]");
    seen[static_cast<size_t>(x)] = 1;
  }
}

Perm Perm::identity(int n) {
  if (n < 1) throw std::invalid_argument("Perm::identity: n must be positive");
  std::vector<int> line(static_cast<size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  return Perm(std::move(line));
}

Perm Perm::longest(int n) {
  if (n < 1) throw std::invalid_argument("Perm::longest: n must be positive");
  std::vector<int> line(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) line[static_cast<size_t>(i)] = n - i;
  return Perm(std::move(line));
}

Perm Perm::transposition(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("Perm::transposition: index out of range");
  Perm w = identity(n);
  std::swap(w.line_[static_cast<size_t>(i - 1)], w.line_[static_cast<size_t>(i)]);
  return w;
}

Perm Perm::parse(const std::string& text) {
  std::vector<int> line;
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      size_t used = 0;
      int x = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("Perm::parse: bad entry '" + tok + "'");
      line.push_back(x);
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument("Perm::parse: digit string must use digits 1-9");
      line.push_back(ch - '0');
    }
    if (line.size() > 9)
      throw std::invalid_argument("Perm::parse: digit form only valid for n <= 9; use commas");
  }
  return Perm(std::move(line));
}

int Perm::pos(int t) const {
  if (t < 1 || t > n()) throw std::invalid_argument("Perm::pos: value out of range");
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) == t) return i;
  return 0;  // unreachable for a valid permutation
}

Perm Perm::inverse() const {
  std::vector<int> line(static_cast<size_t>(n()));
  for (int i = 1; i <= n(); ++i) line[static_cast<size_t>((*this)(i)-1)] = i;
  return Perm(std::move(line));
}

int Perm::length() const {
  int count = 0;
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 1; j <= n(); ++j)
      if ((*this)(i) > (*this)(j)) ++count;
  return count;
}

bool Perm::right_ascent(int i) const {
  if (i < 1 || i > n() - 1) throw std::invalid_argument("Perm::right_ascent: index out of range");
  return (*this)(i) < (*this)(i + 1);
}

Perm Perm::right_mul(int i) const {
  if (i < 1 || i > n() - 1) throw std::invalid_argument("Perm::right_mul: index out of range");
  Perm w(*this);
  std::swap(w.line_[static_cast<size_t>(i - 1)], w.line_[static_cast<size_t>(i)]);
  return w;
}

Perm Perm::compose(const Perm& v) const {
  if (n() != v.n()) throw std::invalid_argument("Perm::compose: mismatched n");
  std::vector<int> line(static_cast<size_t>(n()));
  for (int k = 1; k <= n(); ++k) line[static_cast<size_t>(k - 1)] = (*this)(v(k));
  return Perm(std::move(line));
}

bool Perm::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Perm::str() const {
  std::string out;
  if (n() <= 9) {
    for (int x : line_) out += static_cast<char>('0' + x);
  } else {
    for (size_t k = 0; k < line_.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(line_[k]);
    }
  }
  return out;
}

bool bruhat_leq(const Perm& u, const Perm& v) {
  if (u.n() != v.n()) throw std::invalid_argument("bruhat_leq: mismatched n");
  int n = u.n();
  // cu[j] tracks #{k <= i : u(k) >= j} while i sweeps 1..n.
  std::vector<int> cu(static_cast<size_t>(n) + 2, 0), cv(static_cast<size_t>(n) + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= u(i); ++j) ++cu[static_cast<size_t>(j)];
    for (int j = 1; j <= v(i); ++j) ++cv[static_cast<size_t>(j)];
    for (int j = 1; j <= n; ++j)
      if (cu[static_cast<size_t>(j)] > cv[static_cast<size_t>(j)]) return false;
  }
  return true;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> line(static_cast<size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

bool is_standard(const Tableau& t, int m) {
  std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
  int count = 0;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row.empty()) return false;
    if (r > 0 && row.size() > t.rows[r - 1].size()) return false;
    for (size_t c = 0; c < row.size(); ++c) {
      int x = row[c];
      if (x < 1 || x > m || seen[static_cast<size_t>(x)]) return false;
      seen[static_cast<size_t>(x)] = 1;
      ++count;
      if (c > 0 && row[c - 1] >= x) return false;
      if (r > 0 && t.rows[r - 1][c] >= x) return false;
    }
  }
  return count == m;
}

std::pair<Tableau, Tableau> rs_pair(const Perm& w) {
  Tableau p, q;
  for (int k = 1; k <= w.n(); ++k) {
    int x = w(k);
    size_t r = 0;
    for (;;) {
      if (r == p.rows.size()) {
        p.rows.push_back({x});
        q.rows.push_back({k});
        break;
      }
      auto& row = p.rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q.rows[r].push_back(k);
        break;
      }
      std::swap(*it, x);  // bump
      ++r;
    }
  }
  return {p, q};
}

bool knuth_equivalent(const Perm& u, const Perm& v) {
  if (u.n() != v.n()) throw std::invalid_argument("knuth_equivalent: mismatched n");
  return rs_pair(u).first == rs_pair(v).first;
}

}  // namespace bsdist
