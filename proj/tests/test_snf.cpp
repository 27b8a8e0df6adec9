#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "h2a/snf.hpp"

using namespace h2a;

namespace {

IMat mat(std::vector<std::vector<long>> rows, index_t cols_hint = -1) {
  index_t r = static_cast<index_t>(rows.size());
  index_t c = r ? static_cast<index_t>(rows[0].size()) : (cols_hint < 0 ? 0 : cols_hint);
  IMat m(r, c);
  for (index_t i = 0; i < r; ++i)
    for (index_t j = 0; j < c; ++j) m(i, j) = Int(rows[i][j]);
  return m;
}

IMat random_mat(std::mt19937& gen, index_t max_dim, long max_abs) {
  std::uniform_int_distribution<int> dim(0, static_cast<int>(max_dim));
  std::uniform_int_distribution<long> entry(-max_abs, max_abs);
  IMat m(dim(gen), dim(gen));
  for (index_t i = 0; i < m.rows(); ++i)
    for (index_t j = 0; j < m.cols(); ++j) m(i, j) = Int(entry(gen));
  return m;
}

// Check every structural property of a Smith normal form over the given ring.
void check_snf(const IMat& m, const Ring& ring) {
  SmithResult s = smith_normal_form(m, ring);
  CHECK(imat_equal(ring.reduce(s.u * ring.reduce(m) * s.v), s.d));
  CHECK(imat_equal(ring.reduce(s.u * s.u_inv), imat_identity(m.rows())));
  CHECK(imat_equal(ring.reduce(s.u_inv * s.u), imat_identity(m.rows())));
  CHECK(imat_equal(ring.reduce(s.v * s.v_inv), imat_identity(m.cols())));
  CHECK(imat_equal(ring.reduce(s.v_inv * s.v), imat_identity(m.cols())));
  // Diagonal shape, nonnegative entries, divisibility chain, rank position.
  for (index_t i = 0; i < s.d.rows(); ++i)
    for (index_t j = 0; j < s.d.cols(); ++j)
      if (i != j) CHECK(s.d(i, j) == 0);
  auto diag = s.diagonal();
  for (size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (!ring.is_integers() && diag[i] != 0) CHECK(ring.n % diag[i] == 0);
  }
  for (size_t i = 0; i + 1 < diag.size(); ++i) {
    if (diag[i] == 0) CHECK(diag[i + 1] == 0);  // zeros trail
    if (diag[i] != 0 && diag[i + 1] != 0) CHECK(diag[i + 1] % diag[i] == 0);
  }
  index_t nonzero = 0;
  for (auto& d : diag)
    if (d != 0) ++nonzero;
  CHECK(nonzero == s.rank);
}

// All mod-n solutions of m·x = b by exhaustive search (independent oracle).
std::set<std::vector<long>> enumerate_solutions(const IMat& m, const IMat& b, long n) {
  std::set<std::vector<long>> out;
  index_t k = m.cols();
  std::vector<long> x(k, 0);
  for (;;) {
    IVec xv(k);
    for (index_t i = 0; i < k; ++i) xv(i) = Int(x[i]);
    if (imat_is_zero(imat_mod(m * xv - b, Int(n)))) out.insert(x);
    index_t pos = 0;
    while (pos < k && ++x[pos] == n) x[pos++] = 0;
    if (pos == k) break;
    if (k == 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("smith normal form of diag(2,3) is diag(1,6)") {
  auto s = smith_normal_form(mat({{2, 0}, {0, 3}}), Ring::integers());
  CHECK(s.rank == 2);
  CHECK(s.d(0, 0) == 1);
  CHECK(s.d(1, 1) == 6);
  check_snf(mat({{2, 0}, {0, 3}}), Ring::integers());
}

TEST_CASE("smith normal form handles values far beyond 64-bit") {
  Int big = Int(1) << 40;
  IMat m(2, 2);
  m << big, Int(1), Int(1), big;
  auto s = smith_normal_form(m, Ring::integers());
  CHECK(s.d(0, 0) == 1);
  CHECK(s.d(1, 1) == (Int(1) << 80) - 1);
  check_snf(m, Ring::integers());
}

TEST_CASE("smith normal form edge shapes") {
  check_snf(IMat(0, 0), Ring::integers());
  check_snf(IMat(0, 3), Ring::integers());
  check_snf(IMat(3, 0), Ring::integers());
  check_snf(imat_zero(2, 3), Ring::integers());
  check_snf(imat_identity(3), Ring::integers());
  check_snf(imat_zero(2, 2), Ring::integers_mod(Int(4)));
}

TEST_CASE("smith normal form over Z/n reduces diagonals to divisors of n") {
  // [6] over Z/4: gcd(6,4) = 2.
  auto s = smith_normal_form(mat({{6}}), Ring::integers_mod(Int(4)));
  CHECK(s.d(0, 0) == 2);
  // [4] over Z/4 is the zero map.
  auto z = smith_normal_form(mat({{4}}), Ring::integers_mod(Int(4)));
  CHECK(z.d(0, 0) == 0);
  CHECK(z.rank == 0);
}

TEST_CASE("canonical solve: 2x = 2 over Z/4 picks x = 1") {
  IMat m = mat({{2}});
  IMat b = mat({{2}});
  Ring r4 = Ring::integers_mod(Int(4));
  auto x = solve_linear(m, b, r4);
  REQUIRE(x.has_value());
  CHECK(x->rows() == 1);
  CHECK((*x)(0, 0) == 1);
  // Independent oracle: the full solution set mod 4 is {1, 3}.
  auto sols = enumerate_solutions(m, b, 4);
  CHECK(sols == std::set<std::vector<long>>{{1}, {3}});
  CHECK(sols.count({1}) == 1);
}

TEST_CASE("solve over Z detects unsolvable and divisibility obstructions") {
  CHECK_FALSE(solve_linear(mat({{2}}), mat({{3}}), Ring::integers()).has_value());
  CHECK_FALSE(solve_linear(imat_zero(1, 1), mat({{1}}), Ring::integers()).has_value());
  auto x = solve_linear(mat({{2, 0}, {0, 3}}), mat({{4}, {9}}), Ring::integers());
  REQUIRE(x.has_value());
  CHECK((*x)(0, 0) == 2);
  CHECK((*x)(1, 0) == 3);
}

TEST_CASE("solve and kernel agree with exhaustive enumeration over Z/n") {
  std::mt19937 gen(20240817);
  int checked = 0;
  for (long n : {2L, 3L, 4L, 6L}) {
    Ring ring = Ring::integers_mod(Int(n));
    for (int iter = 0; iter < 40; ++iter) {
      IMat m = random_mat(gen, 3, 9);
      if (m.cols() > 3) continue;
      IMat b(m.rows(), 1);
      std::uniform_int_distribution<long> entry(-9, 9);
      for (index_t i = 0; i < b.rows(); ++i) b(i, 0) = Int(entry(gen));
      auto sols = enumerate_solutions(ring.reduce(m), ring.reduce(b), n);
      auto x = solve_linear(m, b, ring);
      if (x.has_value()) {
        std::vector<long> xv;
        for (index_t i = 0; i < x->rows(); ++i) xv.push_back((*x)(i, 0).get_si());
        CHECK(sols.count(xv) == 1);
      } else {
        CHECK(sols.empty());
      }
      // Kernel generates exactly the solution set of m·x = 0.
      IMat k = kernel_basis(m, ring);
      auto hom = enumerate_solutions(ring.reduce(m), imat_zero(m.rows(), 1), n);
      std::set<std::vector<long>> spanned;
      std::vector<long> y(k.cols(), 0);
      for (;;) {
        IVec yv(k.cols());
        for (index_t i = 0; i < k.cols(); ++i) yv(i) = Int(y[i]);
        IMat z = ring.reduce(k * yv);
        std::vector<long> zv;
        for (index_t i = 0; i < z.rows(); ++i) zv.push_back(z(i, 0).get_si());
        spanned.insert(zv);
        index_t pos = 0;
        while (pos < k.cols() && ++y[pos] == n) y[pos++] = 0;
        if (pos == k.cols()) break;
        if (k.cols() == 0) break;
      }
      if (m.cols() == 0) continue;
      CHECK(spanned == hom);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("property suite: 500 random matrices over Z and Z/n") {
  std::mt19937 gen(987654321);
  std::uniform_int_distribution<long> mods(2, 12);
  for (int iter = 0; iter < 500; ++iter) {
    IMat m = random_mat(gen, 6, 9);
    check_snf(m, Ring::integers());
    check_snf(m, Ring::integers_mod(Int(mods(gen))));
    // Solvable system built from a known solution must solve and verify.
    if (m.cols() > 0) {
      std::uniform_int_distribution<long> entry(-9, 9);
      IVec x0(m.cols());
      for (index_t i = 0; i < m.cols(); ++i) x0(i) = Int(entry(gen));
      IMat b = m * x0;
      auto x = solve_linear(m, b, Ring::integers());
      REQUIRE(x.has_value());
      CHECK(imat_equal(m * (*x), b));
      Ring rn = Ring::integers_mod(Int(mods(gen)));
      auto xm = solve_linear(m, b, rn);
      REQUIRE(xm.has_value());
      CHECK(imat_equal(rn.reduce(m * (*xm)), rn.reduce(b)));
    }
    // Kernel columns really solve m·x = 0.
    IMat k = kernel_basis(m, Ring::integers());
    CHECK(imat_is_zero(m * k));
  }
}
