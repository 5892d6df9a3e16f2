#include "crit/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace crit {

std::string IntMat::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

IntMat matmul(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  IntMat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

HnfResult hnf(const IntMat& m) {
  HnfResult res;
  res.h = m;
  res.u = IntMat::identity(m.rows());
  IntMat& h = res.h;
  IntMat& u = res.u;
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    // eliminate below row r in this column using gcd-style row ops
    for (;;) {
      int piv = -1;
      for (int i = r; i < m.rows(); ++i) {
        if (h(i, col) == 0) continue;
        if (piv < 0 || mpz_cmpabs(h(i, col).get_mpz_t(), h(piv, col).get_mpz_t()) < 0) piv = i;
      }
      if (piv < 0) break;  // column is zero from row r down
      h.swap_rows(r, piv);
      u.swap_rows(r, piv);
      bool cleared = true;
      for (int i = r + 1; i < m.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
        h.addmul_row(i, r, q);
        u.addmul_row(i, r, q);
        if (h(i, col) != 0) cleared = false;
      }
      if (cleared) {
        if (h(r, col) < 0) {
          h.negate_row(r);
          u.negate_row(r);
        }
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
          h.addmul_row(i, r, q);
          u.addmul_row(i, r, q);
        }
        res.pivot_cols.push_back(col);
        ++r;
        break;
      }
    }
  }
  res.rank = r;
  return res;
}

namespace {

// Clear row and column of the pivot at (t,t) using gcd row/column ops;
// returns once h(t,t) is the only nonzero in its row and column.
void clear_cross(IntMat& h, int t) {
  for (;;) {
    // pick minimal-abs nonzero pivot in the trailing block, move to (t,t)
    int pi = -1, pj = -1;
    for (int i = t; i < h.rows(); ++i)
      for (int j = t; j < h.cols(); ++j) {
        if (h(i, j) == 0) continue;
        if (pi < 0 || mpz_cmpabs(h(i, j).get_mpz_t(), h(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) return;  // block is zero
    h.swap_rows(t, pi);
    for (int i = 0; i < h.rows(); ++i) std::swap(h(i, t), h(i, pj));
    bool clean = true;
    for (int i = t + 1; i < h.rows(); ++i) {
      if (h(i, t) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, t).get_mpz_t(), h(t, t).get_mpz_t());
      h.addmul_row(i, t, q);
      if (h(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < h.cols(); ++j) {
      if (h(t, j) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(t, j).get_mpz_t(), h(t, t).get_mpz_t());
      for (int i = 0; i < h.rows(); ++i) h(i, j) -= q * h(i, t);
      if (h(t, j) != 0) clean = false;
    }
    if (clean) return;
  }
}

}  // namespace

std::vector<Int> snf(IntMat m) {
  int t = 0;
  int lim = std::min(m.rows(), m.cols());
  for (; t < lim; ++t) {
    clear_cross(m, t);
    if (m(t, t) == 0) break;
    // enforce divisibility: if some trailing entry is not divisible by the
    // pivot, fold its row in and redo the cross-clearing at this position
    bool redo = false;
    for (int i = t + 1; i < m.rows() && !redo; ++i)
      for (int j = t + 1; j < m.cols(); ++j)
        if (m(i, j) % m(t, t) != 0) {
          m.addmul_row(t, i, Int(-1));
          redo = true;
          break;
        }
    if (redo) --t;
  }
  std::vector<Int> d;
  for (int i = 0; i < lim; ++i) {
    if (m(i, i) == 0) break;
    d.push_back(abs(m(i, i)));
  }
  return d;
}

Int det(IntMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  int n = m.rows();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMat left_kernel(const IntMat& m) {
  HnfResult r = hnf(m);
  int k = m.rows() - r.rank;
  IntMat ker(k, m.rows());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m.rows(); ++j) ker(i, j) = r.u(r.rank + i, j);
  return ker;
}

}  // namespace crit
