#include "tb/matrix.hpp"

namespace tb {

namespace {

// Gaussian elimination to (optionally reduced) row echelon form, in place.
// Returns the pivot columns. Pivot choice is the first nonzero entry in
// column order, so the result is deterministic.
std::vector<size_t> echelon(QMat& m, bool reduced) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Q inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    size_t start = reduced ? 0 : r + 1;
    for (size_t i = start; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Q q_det(QMat m) {
  size_t n = m.size();
  Q det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[c], m[p]);
      det = -det;
    }
    det *= m[c][c];
    Q inv = 1 / m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Q f = m[i][c] * inv;
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<QMat> q_inverse(QMat m) {
  size_t n = m.size();
  QMat aug(n, QVec(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = echelon(aug, true);
  // invertible iff the pivots are exactly the first n columns
  for (size_t i = 0; i < n; ++i)
    if (i >= pivots.size() || pivots[i] != i) return std::nullopt;
  QMat inv(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::optional<QVec> q_solve_right(const QMat& m, const QVec& v) {
  size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  QMat aug(rows, QVec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
    aug[i][cols] = v[i];
  }
  auto pivots = echelon(aug, true);
  QVec x(cols, 0);
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;  // inconsistent system
    x[pivots[i]] = aug[i][cols];
  }
  // Verify (free variables were set to zero; any solution works for callers,
  // but inconsistency elsewhere must be caught).
  QVec check = q_mat_vec(m, x);
  for (size_t i = 0; i < rows; ++i)
    if (check[i] != v[i]) return std::nullopt;
  return x;
}

std::optional<QVec> q_solve_left(const QMat& m, const QVec& v) {
  return q_solve_right(q_transpose(m), v);
}

std::vector<QVec> q_kernel(QMat m) {
  size_t cols = m.empty() ? 0 : m[0].size();
  auto pivots = echelon(m, true);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    QVec v(cols, 0);
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

size_t q_rank(QMat m) { return echelon(m, false).size(); }

namespace {

// floor division; the remainder a - b*fdiv(a,b) lies in [0,|b|)
Z fdiv(const Z& a, const Z& b) {
  Z q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

ZMat hermite_normal_form(ZMat m) {
  size_t n = m.size();
  for (size_t c = 0; c < n; ++c) {
    // Euclid on column c: repeatedly pivot on its smallest nonzero entry and
    // take floored remainders below until only row c carries the column.
    for (;;) {
      size_t p = n;
      for (size_t i = c; i < n; ++i)
        if (m[i][c] != 0 && (p == n || abs(m[i][c]) < abs(m[p][c]))) p = i;
      if (p == n) throw std::invalid_argument("hermite_normal_form: singular matrix");
      std::swap(m[c], m[p]);
      bool clear = true;
      for (size_t i = c + 1; i < n; ++i) {
        if (m[i][c] == 0) continue;
        Z q = fdiv(m[i][c], m[c][c]);
        for (size_t j = c; j < n; ++j) m[i][j] -= q * m[c][j];
        if (m[i][c] != 0) clear = false;
      }
      if (clear) break;
    }
    if (m[c][c] < 0)
      for (size_t j = c; j < n; ++j) m[c][j] = -m[c][j];
    for (size_t i = 0; i < c; ++i) {
      Z q = fdiv(m[i][c], m[c][c]);
      if (q == 0) continue;
      for (size_t j = c; j < n; ++j) m[i][j] -= q * m[c][j];
    }
  }
  return m;
}

ZVec hnf_reduce(const ZMat& h, ZVec x) {
  // Upper-triangular back-substitution top-down: clearing coordinate i only
  // touches coordinates > i, which are normalized later.
  for (size_t i = 0; i < h.size(); ++i) {
    Z q = fdiv(x[i], h[i][i]);
    if (q == 0) continue;
    for (size_t j = i; j < h.size(); ++j) x[j] -= q * h[i][j];
  }
  return x;
}

ZVec smith_diagonal(ZMat m) {
  size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  size_t t = 0;
  ZVec diag;
  while (t < rows && t < cols) {
    // find a nonzero entry in the remaining block
    size_t pi = rows, pj = cols;
    for (size_t i = t; i < rows && pi == rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (m[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows) break;
    std::swap(m[t], m[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
    // reduce row and column t until both are clear beyond the corner
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Z q = m[i][t] / m[t][t];
        for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          dirty = true;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Z q = m[t][j] / m[t][t];
        for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          dirty = true;
        }
      }
      if (!dirty) {
        // corner must divide every remaining entry; if not, fold the
        // offending row in and restart the reduction
        for (size_t i = t + 1; i < rows && !dirty; ++i)
          for (size_t j = t + 1; j < cols && !dirty; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
              dirty = true;
            }
      }
    }
    diag.push_back(m[t][t] < 0 ? Z(-m[t][t]) : m[t][t]);
    ++t;
  }
  while (diag.size() < std::min(rows, cols)) diag.push_back(0);
  return diag;
}

}  // namespace tb
