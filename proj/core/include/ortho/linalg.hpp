// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ortho/vec.hpp"

namespace ortho {

// Dense row-major matrix for the small systems this library solves
// (perpendicular-bisector conditions, locus null spaces, altitude
// intersections). Exact Gaussian elimination on the rational backend;
// partial pivoting with a relative zero threshold on floats.
template <class S>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<S> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, S(0)) {}

  S& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const S& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Matrix from_rows(const std::vector<Vec<S>>& rs) {
    Matrix m(rs.size(), rs.empty() ? 0 : rs[0].dim());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rs[i][j];
    return m;
  }

  static Matrix from_cols(const std::vector<Vec<S>>& cs) {
    Matrix m(cs.empty() ? 0 : cs[0].dim(), cs.size());
    for (std::size_t j = 0; j < cs.size(); ++j)
      for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) = cs[j][i];
    return m;
  }

  double max_abs() const {
    double m = 0.0;
    for (const S& x : a) m = std::max(m, std::abs(ScalarTraits<S>::to_double(x)));
    return m;
  }
};

// Reduced row echelon form in place. Returns the pivot column indices.
// `rel_tol` scales against the largest entry of the input matrix and only
// matters on the float backend.
template <class S>
std::vector<std::size_t> rref(Matrix<S>& m, double rel_tol = kDefaultRelTol) {
  const double scale = m.max_abs();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    // Pivot choice: any nonzero entry works exactly; floats take the largest.
    std::size_t piv = m.rows;
    if constexpr (ScalarTraits<S>::exact) {
      for (std::size_t i = r; i < m.rows; ++i)
        if (!m.at(i, c).is_zero()) {
          piv = i;
          break;
        }
    } else {
      double best = rel_tol * std::max(1.0, scale);
      for (std::size_t i = r; i < m.rows; ++i) {
        double v = std::abs(m.at(i, c));
        if (v > best) {
          best = v;
          piv = i;
        }
      }
    }
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const S inv_p = S(1) / m.at(r, c);
    for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv_p;
    m.at(r, c) = S(1);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const S f = m.at(i, c);
      if constexpr (ScalarTraits<S>::exact) {
        if (f.is_zero()) continue;
      } else {
        if (f == 0.0) continue;
      }
      for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
      m.at(i, c) = S(0);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class S>
std::size_t rank(Matrix<S> m, double rel_tol = kDefaultRelTol) {
  return rref(m, rel_tol).size();
}

// Basis of {x : Mx = 0}; one vector per free column, deterministic order.
template <class S>
std::vector<Vec<S>> nullspace(const Matrix<S>& m, double rel_tol = kDefaultRelTol) {
  Matrix<S> e = m;
  std::vector<std::size_t> pivots = rref(e, rel_tol);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<Vec<S>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<S> x(m.cols);
    x[f] = S(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -e.at(k, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Solves Mx = b. Returns nullopt when inconsistent; free variables, if any,
// are set to zero.
template <class S>
std::optional<Vec<S>> solve(const Matrix<S>& m, const Vec<S>& b, double rel_tol = kDefaultRelTol) {
  if (b.dim() != m.rows) throw std::invalid_argument("solve: rhs dimension mismatch");
  Matrix<S> aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug, rel_tol);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // pivot in b column
  Vec<S> x(m.cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, m.cols);
  return x;
}

}  // namespace ortho
