#pragma once

#include "nodal4/poly.hpp"

#include <optional>
#include <vector>

namespace nodal4 {

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Determinant by Gaussian elimination over the field.
template <class F>
F determinant(Matrix<F> a) {
  const size_t n = a.size();
  F det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) return F(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const F inv = F(1) / a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (is_zero(a[r][col])) continue;
      const F f = a[r][col] * inv;
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

/// Reduced row echelon form in place; returns the pivot column of each row.
template <class F>
std::vector<size_t> row_reduce(Matrix<F>& a) {
  std::vector<size_t> pivots;
  if (a.empty()) return pivots;
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && is_zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const F inv = F(1) / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (size_t k = 0; k < rows; ++k) {
      if (k == r || is_zero(a[k][c])) continue;
      const F f = a[k][c];
      for (size_t j = c; j < cols; ++j) a[k][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis of { x : a x = 0 }.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> a, size_t cols) {
  auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Unique solution of a (possibly overdetermined) consistent system, or nullopt.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  const size_t cols = a.empty() ? 0 : a[0].size();
  Matrix<F> aug = a;
  for (size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto pivots = row_reduce(aug);
  if (pivots.size() != cols) return std::nullopt;
  for (size_t r = pivots.size(); r < aug.size(); ++r)
    if (!is_zero(aug[r][cols])) return std::nullopt;
  std::vector<F> x(cols);
  for (size_t r = 0; r < cols; ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

template <class F>
Matrix<F> identity_matrix(size_t n) {
  Matrix<F> m(n, std::vector<F>(n, F(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

template <class F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix<F> c(n, std::vector<F>(m, F(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (is_zero(a[i][j])) continue;
      for (size_t l = 0; l < m; ++l) c[i][l] += a[i][j] * b[j][l];
    }
  return c;
}

/// Inverse via Gauss-Jordan, nullopt when singular.
template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  const size_t n = a.size();
  Matrix<F> aug = a;
  for (size_t r = 0; r < n; ++r) {
    aug[r].resize(2 * n, F(0));
    aug[r][n + r] = F(1);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, std::vector<F>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) inv[r][c] = aug[r][n + c];
  return inv;
}

/// Newton interpolation through (xs[k], ys[k]); xs pairwise distinct.
template <class F>
Poly<F> interpolate(const std::vector<F>& xs, const std::vector<F>& ys) {
  const size_t n = xs.size();
  std::vector<F> dd = ys;
  for (size_t level = 1; level < n; ++level)
    for (size_t k = n - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
      if (k == level) break;
    }
  Poly<F> result;
  for (size_t k = n; k-- > 0;) {
    result = result * Poly<F>(std::vector<F>{-xs[k], F(1)}) + Poly<F>::constant(dd[k]);
  }
  return result;
}

/// Sylvester resultant of univariate polynomials with formal degrees
/// (da, db); rows of a come first.
template <class F>
F sylvester_resultant(const std::vector<F>& a_desc, const std::vector<F>& b_desc) {
  const size_t da = a_desc.size() - 1, db = b_desc.size() - 1;
  const size_t n = da + db;
  if (n == 0) return F(1);
  Matrix<F> m(n, std::vector<F>(n, F(0)));
  for (size_t r = 0; r < db; ++r)
    for (size_t k = 0; k <= da; ++k) m[r][r + k] = a_desc[k];
  for (size_t r = 0; r < da; ++r)
    for (size_t k = 0; k <= db; ++k) m[db + r][r + k] = b_desc[k];
  return determinant(std::move(m));
}

}  // namespace nodal4
