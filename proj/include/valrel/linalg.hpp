#pragma once

#include "valrel/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace valrel {

/// Dense row-major matrix over an exact field.
template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
Matrix<F> zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix<F>(rows, std::vector<F>(cols, F()));
}

template <class F>
Matrix<F> identity_matrix(std::size_t n) {
  Matrix<F> m = zero_matrix<F>(n, n);
  for (std::size_t k = 0; k < n; ++k) m[k][k] = F(1);
  return m;
}

/// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    F inv = F(1) / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      F factor = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!m[r][k].is_zero()) m[i][k] -= factor * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

/// Determinant by Gaussian elimination.
template <class F>
F determinant(Matrix<F> m) {
  const std::size_t n = m.size();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m[sel][c].is_zero()) ++sel;
    if (sel == n) return F();
    if (sel != c) {
      std::swap(m[c], m[sel]);
      det = -det;
    }
    det *= m[c][c];
    F inv = F(1) / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      F factor = m[i][c] * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!m[c][k].is_zero()) m[i][k] -= factor * m[c][k];
    }
  }
  return det;
}

/// Inverse of a square matrix, or nullopt when singular.
template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  const std::size_t n = m.size();
  Matrix<F> aug = zero_matrix<F>(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = F(1);
  }
  std::vector<std::size_t> piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv = zero_matrix<F>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

/// Basis of {x : m x = 0}, returned as the rows of a matrix in reduced row
/// echelon form (so every basis vector has leading entry 1).
template <class F>
Matrix<F> nullspace(Matrix<F> m, std::size_t cols) {
  std::vector<std::size_t> piv = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : piv) is_pivot[c] = true;
  Matrix<F> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F());
    v[free] = F(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  if (!basis.empty()) rref(basis);
  return basis;
}

/// One solution x of a x = b, or nullopt if inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  Matrix<F> aug = zero_matrix<F>(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<std::size_t> piv = rref(aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  std::vector<F> x(cols, F());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
  return x;
}

/// Lexicographically ordered k-subsets of {0, ..., n-1}.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace valrel
