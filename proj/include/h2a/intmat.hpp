#pragma once

// Exact integer matrices: Eigen dense storage over GMP arbitrary-precision
// integers. All arithmetic in this project is exact; no floating point.
//
// Style rule: never mix raw int literals into matrix expressions
// (`m * 2` does not compile); wrap scalars as Int(2).

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

}  // namespace Eigen

namespace h2a {

using Int = mpz_class;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using index_t = Eigen::Index;

inline IMat imat_zero(index_t rows, index_t cols) { return IMat::Zero(rows, cols); }

inline IMat imat_identity(index_t n) { return IMat::Identity(n, n); }

// Representative of a mod n in [0, n); requires n > 0.
inline Int mod_floor(const Int& a, const Int& n) {
  Int r = a % n;  // sign follows the dividend for mpz_class
  if (r < 0) r += n;
  return r;
}

inline IMat imat_mod(IMat a, const Int& n) {
  for (index_t i = 0; i < a.rows(); ++i)
    for (index_t j = 0; j < a.cols(); ++j) a(i, j) = mod_floor(a(i, j), n);
  return a;
}

// Horizontal concatenation [a | b]; either side may have zero columns.
inline IMat hcat(const IMat& a, const IMat& b) {
  IMat r(a.rows(), a.cols() + b.cols());
  r.leftCols(a.cols()) = a;
  r.rightCols(b.cols()) = b;
  return r;
}

// Vertical concatenation [a ; b].
inline IMat vcat(const IMat& a, const IMat& b) {
  IMat r(a.rows() + b.rows(), a.cols());
  r.topRows(a.rows()) = a;
  r.bottomRows(b.rows()) = b;
  return r;
}

// 2x2 block matrix [[a, b], [c, d]].
inline IMat block2x2(const IMat& a, const IMat& b, const IMat& c, const IMat& d) {
  return vcat(hcat(a, b), hcat(c, d));
}

// Kronecker product (b^T ⊗ a appears when vectorizing a·X·b column-major).
inline IMat kron(const IMat& a, const IMat& b) {
  IMat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (index_t i = 0; i < a.rows(); ++i)
    for (index_t j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = b * a(i, j);
  return r;
}

// Column-major vectorization.
inline IVec vec_of(const IMat& a) {
  IVec v(a.rows() * a.cols());
  index_t k = 0;
  for (index_t j = 0; j < a.cols(); ++j)
    for (index_t i = 0; i < a.rows(); ++i) v(k++) = a(i, j);
  return v;
}

inline IMat unvec(const IVec& v, index_t rows, index_t cols) {
  IMat a(rows, cols);
  index_t k = 0;
  for (index_t j = 0; j < cols; ++j)
    for (index_t i = 0; i < rows; ++i) a(i, j) = v(k++);
  return a;
}

inline bool imat_equal(const IMat& a, const IMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (index_t i = 0; i < a.rows(); ++i)
    for (index_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool imat_is_zero(const IMat& a) {
  for (index_t i = 0; i < a.rows(); ++i)
    for (index_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

inline std::string imat_to_string(const IMat& a) {
  std::string s = "[";
  for (index_t i = 0; i < a.rows(); ++i) {
    s += "[";
    for (index_t j = 0; j < a.cols(); ++j) {
      s += a(i, j).get_str();
      if (j + 1 < a.cols()) s += ",";
    }
    s += "]";
    if (i + 1 < a.rows()) s += ",";
  }
  s += "]";
  return s;
}

}  // namespace h2a
