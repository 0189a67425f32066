#include "bsdist/cellrep.hpp"

#include <stdexcept>

namespace bsdist {

CellMatrix::CellMatrix(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("CellMatrix: rank must be at least 3");
  entries_.assign(static_cast<size_t>(dim()) * static_cast<size_t>(dim()), Laurent());
}

Laurent& CellMatrix::at(int r, int c) {
  return entries_[static_cast<size_t>(r - 1) * static_cast<size_t>(dim()) +
                  static_cast<size_t>(c - 1)];
}

const Laurent& CellMatrix::entry(int r, int c) const {
  if (r < 1 || r > dim() || c < 1 || c > dim())
    throw std::invalid_argument("CellMatrix::entry: index out of range");
  return entries_[static_cast<size_t>(r - 1) * static_cast<size_t>(dim()) +
                  static_cast<size_t>(c - 1)];
}

CellMatrix CellMatrix::identity(int n) {
  CellMatrix m(n);
  for (int r = 1; r <= m.dim(); ++r) m.at(r, r) = Laurent::one();
  return m;
}

CellMatrix CellMatrix::a_matrix(int n, int j) {
  if (n < 3) throw std::invalid_argument("a_matrix: rank must be at least 3");
  if (j < 1 || j > n - 1) throw std::invalid_argument("a_matrix: index out of range");
  CellMatrix m(n);
  Laurent delta = Laurent::one_plus_q();
  Laurent root = Laurent::v_power(1);  // q^{1/2}
  for (int r = 1; r <= m.dim(); ++r) {
    if (r == j) continue;  // column j is zero
    m.at(r, r) = delta;
    if (r == j - 1) m.at(j, r) = root;
    if (r == j + 1) m.at(j, r) = root;
  }
  return m;
}

CellMatrix CellMatrix::operator*(const CellMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("CellMatrix: mismatched rank");
  CellMatrix m(n_);
  for (int r = 1; r <= dim(); ++r)
    for (int k = 1; k <= dim(); ++k) {
      const Laurent& a = entry(r, k);
      if (a.is_zero()) continue;
      for (int c = 1; c <= dim(); ++c) {
        const Laurent& b = o.entry(k, c);
        if (!b.is_zero()) m.at(r, c) += a * b;
      }
    }
  return m;
}

bool CellMatrix::column_is_zero(int t) const {
  for (int r = 1; r <= dim(); ++r)
    if (!entry(r, t).is_zero()) return false;
  return true;
}

bool CellMatrix::nonnegative() const {
  for (const Laurent& e : entries_)
    if (!e.nonnegative()) return false;
  return true;
}

CellMatrix m_of_word(const Word& r) {
  if (r.n() < 3) throw std::invalid_argument("m_of_word: rank must be at least 3");
  CellMatrix m = CellMatrix::identity(r.n());
  for (int x : r.letters()) m = CellMatrix::a_matrix(r.n(), x) * m;
  return m;
}

std::set<int> kernel_indices(const Word& r) {
  CellMatrix m = m_of_word(r);
  std::set<int> out;
  for (int t = 1; t <= m.dim(); ++t)
    if (m.column_is_zero(t)) out.insert(t);
  return out;
}

}  // namespace bsdist
