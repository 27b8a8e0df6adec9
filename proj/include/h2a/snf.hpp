#pragma once

// Smith normal form over Z and Z/n, and the linear-system primitives built on
// it: canonical solutions of m·x = b and generators of solution modules.
//
// Everything is exact and ring-native (no lifting through Z; see LinearSolver).
// Determinism: pivot = nonzero entry of minimal absolute value, ties broken by
// lexicographically smallest (row, col); canonical solutions set every free
// coordinate (in SNF coordinates) to zero; over Z/n results are reduced into
// [0, n).

#include <optional>
#include <vector>

#include "h2a/intmat.hpp"
#include "h2a/ring.hpp"

namespace h2a {

struct SmithResult {
  IMat u, d, v;       // u·m·v = d over the ring, d diagonal with d_1 | d_2 | ...
  IMat u_inv, v_inv;  // exact inverses of u, v over the ring
  index_t rank = 0;   // number of nonzero diagonal entries

  std::vector<Int> diagonal() const {
    std::vector<Int> out;
    index_t k = std::min(d.rows(), d.cols());
    for (index_t i = 0; i < k; ++i) out.push_back(d(i, i));
    return out;
  }
};

// Over Z: d_i >= 0. Over Z/n: entries reduced into [0, n); each nonzero d_i
// divides n (a multiple of n shows up as 0).
SmithResult smith_normal_form(const IMat& m, const Ring& ring);

// Factor m once, then answer many systems m·x = b over the ring.
class LinearSolver {
 public:
  LinearSolver(const IMat& m, const Ring& ring);

  // Canonical solution of m·x = b, columnwise for matrix right-hand sides;
  // nullopt if any column is unsolvable.
  std::optional<IMat> solve(const IMat& b) const;

  bool solvable(const IMat& b) const { return solve(b).has_value(); }

  // Columns generate {x : m·x = 0} (over Z/n: the full solution module).
  const IMat& kernel() const { return kernel_; }

 private:
  Ring ring_;
  index_t cols_;   // columns of the original m
  SmithResult s_;  // ring-native Smith form of m
  IMat kernel_;
};

inline std::optional<IMat> solve_linear(const IMat& m, const IMat& b, const Ring& ring) {
  return LinearSolver(m, ring).solve(b);
}

inline IMat kernel_basis(const IMat& m, const Ring& ring) {
  return LinearSolver(m, ring).kernel();
}

}  // namespace h2a
