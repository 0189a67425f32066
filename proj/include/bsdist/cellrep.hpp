#pragma once

#include <set>
#include <vector>

#include "bsdist/laurent.hpp"
#include "bsdist/word.hpp"

namespace bsdist {

/// Square matrix of size (n-1) with exact Laurent entries, acting on the
/// right-cell basis C_{w_1}, ..., C_{w_{n-1}} (w_r = s_1 s_2 ... s_r).
/// Columns record the images of basis vectors.
class CellMatrix {
 public:
  static CellMatrix identity(int n);
  /// The matrix of right multiplication by (1+T_j) on the cell basis:
  ///   C_{w_r}(1+T_j) = 0                                  if r = j,
  ///                  = (q+1) C_{w_r} + q^{1/2} C_{w_{r+1}} if r = j-1,
  ///                  = q^{1/2} C_{w_{r-1}} + (q+1) C_{w_r} if r = j+1,
  ///                  = (q+1) C_{w_r}                       otherwise.
  static CellMatrix a_matrix(int n, int j);

  int n() const { return n_; }
  int dim() const { return n_ - 1; }
  /// 1-based entry access, row r, column c.
  const Laurent& entry(int r, int c) const;

  CellMatrix operator*(const CellMatrix& o) const;
  bool operator==(const CellMatrix&) const = default;

  /// True iff column t is identically zero, i.e. M e_t = 0.
  bool column_is_zero(int t) const;
  /// True iff every entry has nonnegative coefficients.
  bool nonnegative() const;

 private:
  explicit CellMatrix(int n);
  Laurent& at(int r, int c);

  int n_;
  std::vector<Laurent> entries_;  // row-major, dim x dim
};

/// M(R) = A_{i_m} A_{i_{m-1}} ... A_{i_1}; the empty word gives the identity.
CellMatrix m_of_word(const Word& r);

/// Indices t with M(R) e_t = 0; equals k_set(R).
std::set<int> kernel_indices(const Word& r);

}  // namespace bsdist
