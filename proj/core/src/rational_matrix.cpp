#include "tnngrass/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace tnn {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("RationalMatrix: negative dimension");
  entries_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
  return m;
}

std::size_t RationalMatrix::index(int r, int c) const {
  if (r < 1 || r > rows_ || c < 1 || c > cols_)
    throw std::out_of_range("RationalMatrix: index (" + std::to_string(r) + "," +
                            std::to_string(c) + ") outside " + std::to_string(rows_) + "x" +
                            std::to_string(cols_));
  return static_cast<std::size_t>(r - 1) * cols_ + (c - 1);
}

RationalMatrix RationalMatrix::submatrix(const IndexSet& row_set, const IndexSet& col_set) const {
  RationalMatrix out(row_set.size(), col_set.size());
  for (int r = 1; r <= row_set.size(); ++r)
    for (int c = 1; c <= col_set.size(); ++c)
      out.at(r, c) = at(row_set.elements()[r - 1], col_set.elements()[c - 1]);
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("RationalMatrix: dimension mismatch in product");
  RationalMatrix out(rows_, rhs.cols_);
  for (int i = 1; i <= rows_; ++i)
    for (int k = 1; k <= cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 1; j <= rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

std::string RationalMatrix::to_string() const {
  std::string out;
  for (int r = 1; r <= rows_; ++r) {
    out += "[";
    for (int c = 1; c <= cols_; ++c) {
      if (c > 1) out += " ";
      out += rat::to_string(at(r, c));
    }
    out += "]";
  }
  return out;
}

Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant: matrix not square");
  const int n = a.rows();
  if (n == 0) return Rational(1);

  // clear denominators row by row
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  Rational scale(1);
  for (int r = 0; r < n; ++r) {
    Integer l(1);
    for (int c = 0; c < n; ++c) l = lcm(l, a.at(r + 1, c + 1).get_den());
    for (int c = 0; c < n; ++c) {
      Rational scaled = a.at(r + 1, c + 1) * Rational(l);
      m[r][c] = scaled.get_num();  // exact, denominator is 1
    }
    scale *= Rational(l);
  }

  // Bareiss with row pivoting; divisions are exact.
  int sign = 1;
  Integer prev(1);
  for (int k = 0; k < n - 1; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (m[r][k] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }

  Rational det(m[n - 1][n - 1] * sign);
  det /= scale;
  return det;
}

int rank(const RationalMatrix& a) {
  const int rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m[r][c] = a.at(r + 1, c + 1);

  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int pivot = -1;
    for (int r = rk; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rk]);
    for (int r = rk + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rk][c];
      for (int j = c; j < cols; ++j) m[r][j] -= f * m[rk][j];
    }
    ++rk;
  }
  return rk;
}

}  // namespace tnn
