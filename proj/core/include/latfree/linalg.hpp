#pragma once

#include <optional>
#include <vector>

#include "latfree/quadext.hpp"
#include "latfree/rational.hpp"

namespace latfree {

template <class S>
using Vec = std::vector<S>;
template <class S>
using Mat = std::vector<std::vector<S>>;

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
  S acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class S>
Vec<S> vec_sub(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class S>
Vec<S> vec_add(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class S>
Vec<S> vec_scale(const S& c, const Vec<S>& a) {
  Vec<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

template <class S>
bool is_zero_vec(const Vec<S>& a) {
  for (const S& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

/// Row vector times matrix: (x M)_j = sum_i x_i M[i][j].
template <class S, class T>
Vec<S> row_times_mat(const Vec<S>& x, const Mat<T>& m) {
  std::size_t cols = m.empty() ? 0 : m[0].size();
  Vec<S> r(cols, S(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) r[j] += x[i] * S(m[i][j]);
  return r;
}

/// Gaussian elimination to row echelon form (in place); returns pivot columns.
/// Deterministic: pivots chosen as the first row with a nonzero entry.
template <class S>
std::vector<std::size_t> echelonize(Mat<S>& m) {
  std::vector<std::size_t> pivots;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(m[i][j]) != 0) { p = i; break; }
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    S inv = S(1) / m[r][j];
    for (std::size_t c = j; c < cols; ++c) m[r][c] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][j]) == 0) continue;
      S f = m[i][j];
      for (std::size_t c = j; c < cols; ++c) m[i][c] -= f * m[r][c];
    }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

template <class S>
std::size_t rank(Mat<S> m) {
  return echelonize(m).size();
}

/// Basis (as rows) of {x : row . x = 0 for every row of m}.  Deterministic
/// free-variable construction from the reduced echelon form.
template <class S>
Mat<S> kernel_basis(Mat<S> m, std::size_t cols) {
  if (m.empty()) {
    Mat<S> id(cols, Vec<S>(cols, S(0)));
    for (std::size_t i = 0; i < cols; ++i) id[i][i] = S(1);
    return id;
  }
  std::vector<std::size_t> pivots = echelonize(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t j : pivots) is_pivot[j] = true;
  Mat<S> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<S> v(cols, S(0));
    v[f] = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Unique solution x (as column) of m x = rhs for square m, empty if singular.
template <class S>
std::optional<Vec<S>> solve_square(Mat<S> m, Vec<S> rhs) {
  std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) m[i].push_back(rhs[i]);
  std::vector<std::size_t> pivots = echelonize(m);
  if (pivots.size() != n || (n && pivots.back() == n)) return std::nullopt;
  Vec<S> x(n, S(0));
  for (std::size_t r = 0; r < n; ++r) x[pivots[r]] = m[r][n];
  return x;
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& m) {
  std::size_t n = m.size();
  Mat<S> aug(n, Vec<S>(2 * n, S(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = S(1);
  }
  std::vector<std::size_t> pivots = echelonize(aug);
  if (pivots.size() != n) return std::nullopt;
  for (std::size_t r = 0; r < n; ++r)
    if (pivots[r] != r) return std::nullopt;  // singular within the left block
  Mat<S> inv(n, Vec<S>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

template <class S>
S determinant(Mat<S> m) {
  std::size_t n = m.size();
  S det(1);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t p = n;
    for (std::size_t i = j; i < n; ++i)
      if (sgn(m[i][j]) != 0) { p = i; break; }
    if (p == n) return S(0);
    if (p != j) {
      std::swap(m[p], m[j]);
      det = -det;
    }
    det *= m[j][j];
    S inv = S(1) / m[j][j];
    for (std::size_t i = j + 1; i < n; ++i) {
      if (sgn(m[i][j]) == 0) continue;
      S f = m[i][j] * inv;
      for (std::size_t c = j; c < n; ++c) m[i][c] -= f * m[j][c];
    }
  }
  return det;
}

}  // namespace latfree
