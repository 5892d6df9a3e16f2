#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace crit {

using Int = mpz_class;

/// Dense matrix of arbitrary-precision integers.  All arithmetic in this
/// project is exact; there is no floating point anywhere.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  std::vector<Int> row(int i) const {
    return std::vector<Int>(a_.begin() + size_t(i) * cols_, a_.begin() + size_t(i + 1) * cols_);
  }
  void set_row(int i, const std::vector<Int>& r) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void negate_row(int i) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }
  // row i -= q * row j
  void addmul_row(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < cols_; ++c) (*this)(i, c) -= q * (*this)(j, c);
  }

  bool row_is_zero(int i) const {
    for (int c = 0; c < cols_; ++c)
      if ((*this)(i, c) != 0) return false;
    return true;
  }

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  // Vertically stack rows of two matrices with the same column count.
  static IntMat vstack(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    IntMat m(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
  }

  IntMat transposed() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

struct HnfResult {
  IntMat h;  // row Hermite normal form, zero rows at the bottom
  IntMat u;  // unimodular, h = u * input
  int rank = 0;
  std::vector<int> pivot_cols;  // one per nonzero row, strictly increasing
};

/// Row-style HNF: pivots positive, entries above a pivot reduced into
/// [0, pivot).  Row space is preserved exactly.
HnfResult hnf(const IntMat& m);

/// Nonzero diagonal of the Smith normal form, as a divisibility chain
/// d1 | d2 | ... (1s included, zeros dropped).
std::vector<Int> snf(IntMat m);

/// Exact determinant by fraction-free (Bareiss) elimination.  Independent
/// of the SNF path, which makes it usable as a cross-check.
Int det(IntMat m);

/// Basis (as rows) of the left kernel { x : x * m = 0 }.  The returned
/// lattice is saturated since it comes from a unimodular transform.
IntMat left_kernel(const IntMat& m);

IntMat matmul(const IntMat& a, const IntMat& b);

}  // namespace crit
