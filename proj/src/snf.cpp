#include "h2a/snf.hpp"

#include "h2a/error.hpp"

namespace h2a {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Inverse of a mod n (n >= 1); requires gcd(a, n) = 1.
Int inverse_mod(const Int& a, const Int& n) {
  if (n == 1) return Int(0);
  Int r;
  int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  require_internal(ok != 0, "inverse_mod: not invertible");
  return r;
}

// A unit u mod n with u·d ≡ gcd(d, n) (mod n). Since gcd(d/g, n/g) = 1, the
// inverse of d/g mod n/g lifts to a unit mod n along u0 + t·(n/g).
Int unit_scaling_to_gcd(const Int& d, const Int& n) {
  Int g = gcd_int(d, n);
  Int ng = n / g;
  Int u = inverse_mod(mod_floor(d / g, ng), ng);
  while (gcd_int(u, n) != 1) u += ng;
  return u;
}

// Row/column operations applied simultaneously to the working matrix and the
// accumulated transforms, keeping u·m·v = a and u·u_inv = v·v_inv = id over
// the ring. In the modular case every touched row/column is reduced into
// [0, n) immediately, so entries never grow beyond n — this is what keeps the
// algorithm's intermediate values bounded (the integer case can swell, the
// modular case cannot).
struct Work {
  IMat a, u, u_inv, v, v_inv;
  Int n;  // 0 = integer case

  void reduce_rows(index_t i) {
    if (n == 0) return;
    for (index_t j = 0; j < a.cols(); ++j) a(i, j) = mod_floor(a(i, j), n);
    for (index_t j = 0; j < u.cols(); ++j) u(i, j) = mod_floor(u(i, j), n);
  }
  void reduce_ucol(index_t j) {
    if (n == 0) return;
    for (index_t i = 0; i < u_inv.rows(); ++i) u_inv(i, j) = mod_floor(u_inv(i, j), n);
  }
  void reduce_cols(index_t j) {
    if (n == 0) return;
    for (index_t i = 0; i < a.rows(); ++i) a(i, j) = mod_floor(a(i, j), n);
    for (index_t i = 0; i < v.rows(); ++i) v(i, j) = mod_floor(v(i, j), n);
  }
  void reduce_vrow(index_t i) {
    if (n == 0) return;
    for (index_t j = 0; j < v_inv.cols(); ++j) v_inv(i, j) = mod_floor(v_inv(i, j), n);
  }

  void row_swap(index_t i, index_t j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    u.row(i).swap(u.row(j));
    u_inv.col(i).swap(u_inv.col(j));
  }
  void col_swap(index_t i, index_t j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    v.col(i).swap(v.col(j));
    v_inv.row(i).swap(v_inv.row(j));
  }
  void row_negate(index_t i) {
    a.row(i) = -a.row(i);
    u.row(i) = -u.row(i);
    u_inv.col(i) = -u_inv.col(i);
    reduce_rows(i);
    reduce_ucol(i);
  }
  void row_axpy(index_t i, index_t j, const Int& c) {  // row i += c · row j
    a.row(i) += a.row(j) * c;
    u.row(i) += u.row(j) * c;
    u_inv.col(j) -= u_inv.col(i) * c;
    reduce_rows(i);
    reduce_ucol(j);
  }
  void col_axpy(index_t i, index_t j, const Int& c) {  // col i += c · col j
    a.col(i) += a.col(j) * c;
    v.col(i) += v.col(j) * c;
    v_inv.row(j) -= v_inv.row(i) * c;
    reduce_cols(i);
    reduce_vrow(j);
  }
  // Multiply row i by the unit s (modular case only), col i of u_inv by s^-1.
  void row_scale_unit(index_t i, const Int& s) {
    Int s_back = inverse_mod(s, n);
    a.row(i) *= s;
    u.row(i) *= s;
    u_inv.col(i) *= s_back;
    reduce_rows(i);
    reduce_ucol(i);
  }
};

}  // namespace

SmithResult smith_normal_form(const IMat& m_in, const Ring& ring) {
  IMat m = ring.reduce(m_in);
  const index_t rows = m.rows(), cols = m.cols();
  const bool modular = !ring.is_integers();
  Work w{m,
         imat_identity(rows),
         imat_identity(rows),
         imat_identity(cols),
         imat_identity(cols),
         modular ? ring.n : Int(0)};

  for (index_t t = 0; t < rows && t < cols; ++t) {
    // Deterministic pivot: minimal |entry|, then smallest (row, col).
    index_t pi = -1, pj = -1;
    Int best;
    for (index_t i = t; i < rows; ++i)
      for (index_t j = t; j < cols; ++j) {
        if (w.a(i, j) == 0) continue;
        Int val = abs(w.a(i, j));
        if (pi < 0 || val < best) {
          best = val;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // submatrix is zero
    w.row_swap(t, pi);
    w.col_swap(t, pj);
    if (w.a(t, t) < 0) w.row_negate(t);

    for (;;) {
      // Modular case: make the pivot the divisor gcd(pivot, n) of n first.
      // Afterwards every later value in the submatrix — always a combination
      // of entries plus multiples of n — stays divisible by a final pivot
      // that divides n, which is what makes the divisor chain survive
      // reduction mod n.
      if (modular) {
        const Int& p = w.a(t, t);
        if (p != 0 && gcd_int(p, w.n) != p)
          w.row_scale_unit(t, unit_scaling_to_gcd(p, w.n));
      }
      // Clear row t and column t; floor division keeps remainders in
      // [0, pivot), and a nonzero remainder becomes the new, smaller pivot.
      bool swapped = false;
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (index_t i = t + 1; i < rows; ++i) {
          if (w.a(i, t) == 0) continue;
          w.row_axpy(i, t, -floor_div(w.a(i, t), w.a(t, t)));
          if (w.a(i, t) != 0) {
            w.row_swap(t, i);
            dirty = swapped = true;
          }
        }
        for (index_t j = t + 1; j < cols; ++j) {
          if (w.a(t, j) == 0) continue;
          w.col_axpy(j, t, -floor_div(w.a(t, j), w.a(t, t)));
          if (w.a(t, j) != 0) {
            w.col_swap(t, j);
            dirty = swapped = true;
          }
        }
      }
      if (modular && swapped) continue;  // pivot shrank: renormalize first
      // Divisibility: the pivot must divide the remaining submatrix.
      bool fixed = false;
      for (index_t i = t + 1; i < rows && !fixed; ++i)
        for (index_t j = t + 1; j < cols && !fixed; ++j)
          if (w.a(i, j) % w.a(t, t) != 0) {
            w.row_axpy(t, i, Int(1));
            fixed = true;
          }
      if (!fixed) break;
    }
  }

  SmithResult r;
  r.u = w.u;
  r.d = w.a;
  r.v = w.v;
  r.u_inv = w.u_inv;
  r.v_inv = w.v_inv;
  r.rank = 0;
  for (index_t i = 0; i < rows && i < cols; ++i)
    if (r.d(i, i) != 0) ++r.rank;
  return r;
}

LinearSolver::LinearSolver(const IMat& m, const Ring& ring)
    : ring_(ring), cols_(m.cols()) {
  s_ = smith_normal_form(m, ring);

  // Solution module of m·x = 0 in SNF coordinates y: over Z, y_i free past
  // the rank; over Z/n, d_i·y_i ≡ 0 (mod n) forces y_i into (n/d_i)·Z/n.
  std::vector<IVec> gens;
  const index_t k = s_.v.cols();
  const index_t dmin = std::min(s_.d.rows(), s_.d.cols());
  for (index_t i = 0; i < k; ++i) {
    if (i < dmin && s_.d(i, i) != 0) {
      if (ring.is_integers()) continue;  // no torsion solutions over Z
      Int step = ring.n / s_.d(i, i);    // d_i divides n by construction
      if (mod_floor(step, ring.n) == 0) continue;
      gens.push_back(IVec(s_.v.col(i) * step));
    } else {
      gens.push_back(IVec(s_.v.col(i)));
    }
  }
  kernel_ = IMat(cols_, static_cast<index_t>(gens.size()));
  for (size_t j = 0; j < gens.size(); ++j) kernel_.col(j) = gens[j];
  kernel_ = ring.reduce(kernel_);
}

std::optional<IMat> LinearSolver::solve(const IMat& b) const {
  require_input(b.rows() == s_.u.cols(), "solve: right-hand side has wrong height");
  IMat c = ring_.reduce(s_.u * ring_.reduce(b));
  IMat y = imat_zero(s_.v.rows(), b.cols());
  const index_t dmin = std::min(s_.d.rows(), s_.d.cols());
  for (index_t k = 0; k < b.cols(); ++k) {
    for (index_t i = 0; i < c.rows(); ++i) {
      const Int d = i < dmin ? s_.d(i, i) : Int(0);
      if (d != 0) {
        // Canonical coordinate: over Z the exact quotient; over Z/n the
        // minimal nonnegative solution of d·y ≡ c (mod n), namely
        // (c/d) mod (n/d), using that d divides n.
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c(i, k).get_mpz_t(),
                    d.get_mpz_t());
        if (r != 0) return std::nullopt;
        y(i, k) = ring_.is_integers() ? q : mod_floor(q, ring_.n / d);
      } else if (c(i, k) != 0) {
        return std::nullopt;
      }
    }
  }
  return ring_.reduce(s_.v * y);
}

}  // namespace h2a
