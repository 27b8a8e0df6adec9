#pragma once

// Affine systems of matrix equations over the base ring.
//
// Unknowns are matrices of fixed shapes. A constraint states
//     sum_i  L_i · X_{u_i} · R_i  +  C  ≡  0   (columnwise modulo span(rel))
// for a given constant C and relation matrix rel (the relations of the module
// the equation lives in). Everything is vectorized — vec(L·X·R) =
// (Rᵀ ⊗ L)·vec(X) — with slack columns for the relation span, and solved
// canonically by Smith normal form. A seed permutes the variable columns to
// produce alternative canonical solutions of underdetermined systems
// deterministically (seed 0 = the canonical order).

#include <cstdint>
#include <optional>
#include <vector>

#include "h2a/ring.hpp"
#include "h2a/snf.hpp"

namespace h2a {

class LinearProblem {
 public:
  explicit LinearProblem(Ring ring) : ring_(ring) {}

  // Declares a matrix unknown of the given shape; returns its handle.
  int add_unknown(index_t rows, index_t cols);

  // Declares a constraint of the given shape that must vanish modulo the
  // column span of rel (pass a 0-column matrix for equality on the nose);
  // returns its handle. The constraint reads sum(terms) + constant ≡ 0.
  int add_constraint(const IMat& constant, const IMat& rel);

  // Adds the term left · X_unknown · right to a constraint.
  void add_term(int constraint, int unknown, const IMat& left, const IMat& right);

  // Canonical solution (seed 0) or a deterministic alternative; nullopt when
  // the system has no solution.
  std::optional<std::vector<IMat>> solve(std::uint64_t seed = 0) const;

  bool solvable() const { return solve().has_value(); }

 private:
  struct Unknown {
    index_t rows, cols;
  };
  struct Term {
    int unknown;
    IMat left, right;
  };
  struct Constraint {
    IMat constant;
    IMat rel;
    std::vector<Term> terms;
  };

  Ring ring_;
  std::vector<Unknown> unknowns_;
  std::vector<Constraint> constraints_;
};

}  // namespace h2a
