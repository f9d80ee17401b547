#pragma once
// Dense exact linear algebra at desk scale: rational elimination, kernels,
// and integer Smith normal form. Matrices are row-major vectors of rows.

#include "tb/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>

namespace tb {

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<Z>;
using ZMat = std::vector<ZVec>;

inline QMat q_identity(size_t n) {
  QMat m(n, QVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline QVec q_mat_vec(const QMat& m, const QVec& v) {
  QVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

// row vector times matrix
inline QVec q_vec_mat(const QVec& v, const QMat& m) {
  if (m.empty()) return {};
  QVec r(m[0].size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < r.size(); ++j) r[j] += v[i] * m[i][j];
  return r;
}

inline QMat q_mat_mul(const QMat& a, const QMat& b) {
  QMat r(a.size(), QVec(b.empty() ? 0 : b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < r[i].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

inline QMat q_transpose(const QMat& a) {
  if (a.empty()) return {};
  QMat r(a[0].size(), QVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

inline Q dot(const QVec& a, const QVec& b) {
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Q q_det(QMat m);
std::optional<QMat> q_inverse(QMat m);

// Solve x * m = v for a row vector x (m square, invertible).
std::optional<QVec> q_solve_left(const QMat& m, const QVec& v);
// Solve m * x = v for a column vector x.
std::optional<QVec> q_solve_right(const QMat& m, const QVec& v);

// Basis of the right kernel {x : m x = 0}, via reduced row echelon form.
// Deterministic: free variables in ascending column order, pivot entries 1.
std::vector<QVec> q_kernel(QMat m);

// Row rank.
size_t q_rank(QMat m);

// Diagonal of the Smith normal form of an integer matrix (nonnegative,
// each dividing the next, zeros trailing). Transform matrices are not needed
// by any caller and are not computed.
ZVec smith_diagonal(ZMat m);

// Row-style Hermite normal form of a square nonsingular integer matrix:
// upper triangular, positive diagonal, entries above each pivot reduced into
// [0, pivot). The rows span the same subgroup of ℤⁿ as the input rows.
ZMat hermite_normal_form(ZMat m);

// The unique representative x' of x modulo the row span of h with
// 0 <= x'_i < h[i][i]; h must come from hermite_normal_form.
ZVec hnf_reduce(const ZMat& h, ZVec x);

}  // namespace tb
