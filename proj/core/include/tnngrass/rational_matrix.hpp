#pragma once

#include <string>
#include <vector>

#include "tnngrass/index_set.hpp"
#include "tnngrass/rational.hpp"

namespace tnn {

/// Dense matrix of exact rationals, row major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);  // zero filled
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return entries_[index(r, c)]; }
  const Rational& at(int r, int c) const { return entries_[index(r, c)]; }

  /// Rows and columns picked by 1-based index sets.
  RationalMatrix submatrix(const IndexSet& row_set, const IndexSet& col_set) const;

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  bool operator==(const RationalMatrix& o) const;

  std::string to_string() const;

 private:
  std::size_t index(int r, int c) const;
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant via fraction-free elimination: per-row denominators are
/// cleared, integer Bareiss with row pivoting runs on the cleared matrix and
/// the scale is divided back out. Throws on non-square input; the 0x0
/// determinant is 1.
Rational determinant(const RationalMatrix& a);

/// Exact rank via Gaussian elimination with pivoting.
int rank(const RationalMatrix& a);

}  // namespace tnn
