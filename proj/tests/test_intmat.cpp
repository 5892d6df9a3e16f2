#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crit/intmat.hpp"

using namespace crit;

namespace {

// Independent determinant oracle: cofactor expansion, no elimination.
Int cofactor_det(const IntMat& m) {
  int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (int c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMat sub(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int jj = 0;
      for (int j = 0; j < n; ++j) {
        if (j == c) continue;
        sub(i - 1, jj++) = m(i, j);
      }
    }
    Int term = m(0, c) * cofactor_det(sub);
    if (c % 2) term = -term;
    total += term;
  }
  return total;
}

// gcd of all k x k minors, 0 when all vanish
Int minor_gcd(const IntMat& m, int k) {
  
  Int g = 0;
  // enumerate k-subsets of rows and of columns
  std::vector<std::vector<int>> rsets, csets;
  auto subsets = [](int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
      if (int(cur.size()) == k) {
        out.push_back(cur);
        return;
      }
      for (int i = start; i <= n - (k - int(cur.size())); ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };
  rsets = subsets(m.rows(), k);
  csets = subsets(m.cols(), k);
  for (const auto& rs : rsets)
    for (const auto& cs : csets) {
      IntMat sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = m(rs[size_t(i)], cs[size_t(j)]);
      Int d = cofactor_det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

IntMat random_matrix(std::mt19937_64& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("hnf structure and row-space preservation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int r = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
    IntMat m = random_matrix(rng, r, c, -9, 9);
    HnfResult res = hnf(m);
    CHECK(matmul(res.u, m) == res.h);
    Int du = cofactor_det(res.u);
    CHECK((du == 1 || du == -1));
    CHECK(int(res.pivot_cols.size()) == res.rank);
    for (int i = 0; i < res.rank; ++i) {
      int p = res.pivot_cols[size_t(i)];
      CHECK(res.h(i, p) > 0);
      if (i > 0) CHECK(res.pivot_cols[size_t(i - 1)] < p);
      for (int above = 0; above < i; ++above) {
        CHECK(res.h(above, p) >= 0);
        CHECK(res.h(above, p) < res.h(i, p));
      }
    }
    for (int i = res.rank; i < r; ++i) CHECK(res.h.row_is_zero(i));
  }
}

TEST_CASE("snf matches the minor-gcd oracle on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + int(rng() % 4), c = 1 + int(rng() % 4);
    IntMat m = random_matrix(rng, r, c, -9, 9);
    std::vector<Int> d = snf(m);
    for (size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);
    Int prod = 1;
    for (size_t k = 1; k <= d.size(); ++k) {
      prod *= d[k - 1];
      CHECK(minor_gcd(m, int(k)) == prod);
    }
    if (int(d.size()) < std::min(r, c)) CHECK(minor_gcd(m, int(d.size()) + 1) == 0);
  }
}

TEST_CASE("bareiss determinant matches cofactor expansion") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + int(rng() % 5);
    IntMat m = random_matrix(rng, n, n, -9, 9);
    CHECK(det(m) == cofactor_det(m));
  }
}

TEST_CASE("left kernel annihilates and has full expected rank") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int r = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
    IntMat m = random_matrix(rng, r, c, -4, 4);
    IntMat k = left_kernel(m);
    if (k.rows() > 0) {
      IntMat prod = matmul(k, m);
      for (int i = 0; i < prod.rows(); ++i) CHECK(prod.row_is_zero(i));
    }
    CHECK(k.rows() == r - hnf(m).rank);
    // kernel basis rows are independent
    CHECK(hnf(k).rank == k.rows());
  }
}

TEST_CASE("snf of a known matrix") {
  // diag-like example with nontrivial factors: [[2,4,4],[-6,6,12],[10,4,16]]
  IntMat m(3, 3);
  m(0, 0) = 2; m(0, 1) = 4; m(0, 2) = 4;
  m(1, 0) = -6; m(1, 1) = 6; m(1, 2) = 12;
  m(2, 0) = 10; m(2, 1) = -4; m(2, 2) = -16;
  std::vector<Int> d = snf(m);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 2);
  CHECK(d[1] == 6);
  CHECK(d[2] == 12);
}
