#include "h2a/linprob.hpp"

#include <numeric>

#include "h2a/error.hpp"

namespace h2a {

int LinearProblem::add_unknown(index_t rows, index_t cols) {
  require_input(rows >= 0 && cols >= 0, "unknown with negative shape");
  unknowns_.push_back(Unknown{rows, cols});
  return static_cast<int>(unknowns_.size()) - 1;
}

int LinearProblem::add_constraint(const IMat& constant, const IMat& rel) {
  require_input(rel.cols() == 0 || rel.rows() == constant.rows(),
                "constraint relations have wrong height");
  constraints_.push_back(Constraint{ring_.reduce(constant), ring_.reduce(rel), {}});
  return static_cast<int>(constraints_.size()) - 1;
}

void LinearProblem::add_term(int constraint, int unknown, const IMat& left, const IMat& right) {
  require_input(constraint >= 0 && constraint < static_cast<int>(constraints_.size()),
                "unknown constraint handle");
  require_input(unknown >= 0 && unknown < static_cast<int>(unknowns_.size()),
                "unknown unknown handle");
  Constraint& c = constraints_[static_cast<size_t>(constraint)];
  const Unknown& u = unknowns_[static_cast<size_t>(unknown)];
  require_input(left.cols() == u.rows && right.rows() == u.cols,
                "term shapes do not match the unknown");
  require_input(left.rows() == c.constant.rows() && right.cols() == c.constant.cols(),
                "term shapes do not match the constraint");
  c.terms.push_back(Term{unknown, ring_.reduce(left), ring_.reduce(right)});
}

std::optional<std::vector<IMat>> LinearProblem::solve(std::uint64_t seed) const {
  // Column layout: one block per unknown (vec'd), then one slack block per
  // constraint (relation span, one copy per constraint column).
  std::vector<index_t> offset(unknowns_.size() + 1, 0);
  for (size_t i = 0; i < unknowns_.size(); ++i)
    offset[i + 1] = offset[i] + unknowns_[i].rows * unknowns_[i].cols;
  index_t var_cols = offset.back();

  index_t rows_total = 0, slack_cols = 0;
  for (auto& c : constraints_) {
    rows_total += c.constant.rows() * c.constant.cols();
    slack_cols += c.rel.cols() * c.constant.cols();
  }

  IMat m = imat_zero(rows_total, var_cols + slack_cols);
  IMat rhs = imat_zero(rows_total, 1);
  index_t row = 0, slack = var_cols;
  for (auto& c : constraints_) {
    index_t block = c.constant.rows() * c.constant.cols();
    for (auto& t : c.terms) {
      IMat coeff = kron(t.right.transpose(), t.left);
      m.block(row, offset[static_cast<size_t>(t.unknown)], block, coeff.cols()) += coeff;
    }
    if (c.rel.cols() > 0) {
      IMat srel = kron(imat_identity(c.constant.cols()), c.rel);
      m.block(row, slack, block, srel.cols()) = srel;
      slack += srel.cols();
    }
    rhs.block(row, 0, block, 1) = -vec_of(c.constant);
    row += block;
  }
  m = ring_.reduce(m);
  rhs = ring_.reduce(rhs);

  // A seeded deterministic column shuffle selects different canonical
  // solutions of underdetermined systems.
  std::vector<index_t> perm(static_cast<size_t>(m.cols()));
  std::iota(perm.begin(), perm.end(), 0);
  if (seed != 0) {
    std::uint64_t state = seed;
    auto next = [&state]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    for (size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1], perm[static_cast<size_t>(next() % i)]);
  }
  IMat mp(m.rows(), m.cols());
  for (index_t j = 0; j < m.cols(); ++j) mp.col(j) = m.col(perm[static_cast<size_t>(j)]);

  auto sol = LinearSolver(mp, ring_).solve(rhs);
  if (!sol) return std::nullopt;
  IVec x = IVec(imat_zero(m.cols(), 1));
  for (index_t j = 0; j < m.cols(); ++j) x(perm[static_cast<size_t>(j)]) = (*sol)(j, 0);

  std::vector<IMat> out;
  for (size_t i = 0; i < unknowns_.size(); ++i) {
    IVec v = x.segment(offset[i], unknowns_[i].rows * unknowns_[i].cols);
    out.push_back(ring_.reduce(unvec(v, unknowns_[i].rows, unknowns_[i].cols)));
  }
  return out;
}

}  // namespace h2a
