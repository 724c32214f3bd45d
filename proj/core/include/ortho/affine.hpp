// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ortho/linalg.hpp"

namespace ortho {

// X -> (1 - ratio) * center + ratio * X. Ratio -1 is the point reflection;
// ratio 1 the identity. The center is the fixed point.
template <class S>
struct Homothety {
  Point<S> center;
  S ratio;

  Homothety(Point<S> c, S r) : center(std::move(c)), ratio(std::move(r)) {
    if (scalar_is_zero(ratio, 0.0)) throw std::invalid_argument("Homothety: ratio must be nonzero");
  }
};

template <class S>
Point<S> homothety_apply(const Homothety<S>& h, const Point<S>& x) {
  return (S(1) - h.ratio) * h.center + h.ratio * x;
}

// Involution X -> 2C - X; equals the homothety of ratio -1 about C.
template <class S>
struct PointReflection {
  Point<S> center;
};

template <class S>
Point<S> point_reflect(const Point<S>& center, const Point<S>& x) {
  detail::require_same_dim(center, x);
  return S(2) * center - x;
}

template <class S>
Point<S> apply(const PointReflection<S>& s, const Point<S>& x) {
  return point_reflect(s.center, x);
}

// base + span(basis). The basis is linearly independent by construction
// (exact rank check on rationals, pivot threshold on floats) and is not
// normalized: membership and sampling never need unit vectors.
template <class S>
class AffineSubspace {
 public:
  AffineSubspace(Point<S> base, std::vector<Vec<S>> basis, double rel_tol = kDefaultRelTol)
      : base_(std::move(base)), basis_(std::move(basis)) {
    for (const Vec<S>& v : basis_)
      if (v.dim() != base_.dim()) throw std::invalid_argument("AffineSubspace: dimension mismatch");
    if (!basis_.empty() && rank(Matrix<S>::from_rows(basis_), rel_tol) != basis_.size())
      throw std::invalid_argument("AffineSubspace: basis is linearly dependent");
  }

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return base_.dim(); }
  const Point<S>& base() const { return base_; }
  const std::vector<Vec<S>>& basis() const { return basis_; }

 private:
  Point<S> base_;
  std::vector<Vec<S>> basis_;
};

// X in base + span(basis)? Exact consistency of the linear system on the
// rational backend; least-squares residual against rel_tol on floats.
template <class S>
bool subspace_contains(const AffineSubspace<S>& s, const Point<S>& x,
                       double rel_tol = kDefaultRelTol) {
  if (x.dim() != s.ambient_dim()) throw std::invalid_argument("subspace_contains: dimension mismatch");
  Vec<S> d = x - s.base();
  if (s.dim() == 0) return is_zero_vec(d, rel_tol, Matrix<S>::from_rows({x, s.base()}).max_abs());
  if constexpr (ScalarTraits<S>::exact) {
    return solve(Matrix<S>::from_cols(s.basis()), d).has_value();
  } else {
    // Normal equations: k <= n is tiny here, conditioning is a non-issue.
    const std::size_t k = s.dim();
    Matrix<S> g(k, k);
    Vec<S> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) g.at(i, j) = dot(s.basis()[i], s.basis()[j]);
      rhs[i] = dot(s.basis()[i], d);
    }
    auto c = solve(g, rhs, rel_tol);
    if (!c) return false;
    Vec<S> fit(x.dim());
    for (std::size_t i = 0; i < k; ++i) fit = fit + (*c)[i] * s.basis()[i];
    double scale = std::sqrt(std::max(1.0, norm_sq(d)));
    return std::sqrt(norm_sq(d - fit)) <= rel_tol * scale;
  }
}

// Image of the subspace: base maps through h, directions scale by the ratio.
template <class S>
AffineSubspace<S> subspace_map(const Homothety<S>& h, const AffineSubspace<S>& s) {
  std::vector<Vec<S>> basis;
  basis.reserve(s.dim());
  for (const Vec<S>& v : s.basis()) basis.push_back(h.ratio * v);
  return AffineSubspace<S>(homothety_apply(h, s.base()), std::move(basis));
}

// All 2x2 minors of the difference matrix vanish (rank <= 1). Floats test
// minors against rel_tol scaled by the squared magnitude of the points.
template <class S>
bool collinear(const std::vector<Point<S>>& pts, double rel_tol = kDefaultRelTol) {
  if (pts.size() < 3) throw std::invalid_argument("collinear: need at least 3 points");
  for (std::size_t i = 1; i < pts.size(); ++i) detail::require_same_dim(pts[0], pts[i]);

  double scale = 0.0;
  if constexpr (!ScalarTraits<S>::exact) {
    double m = Matrix<S>::from_rows(pts).max_abs();
    scale = std::max(1.0, m * m);
  }

  // Reference direction: first nonzero difference from pts[0].
  std::size_t ref = 0;
  Vec<S> d0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vec<S> d = pts[i] - pts[0];
    if (!is_zero_vec(d, rel_tol, scale)) {
      d0 = std::move(d);
      ref = i;
      break;
    }
  }
  if (ref == 0) return true;  // all points coincide

  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (i == ref) continue;
    Vec<S> d = pts[i] - pts[0];
    for (std::size_t a = 0; a + 1 < d.dim(); ++a)
      for (std::size_t b = a + 1; b < d.dim(); ++b) {
        S minor = d0[a] * d[b] - d0[b] * d[a];
        if (!scalar_is_zero(minor, rel_tol, scale)) return false;
      }
  }
  return true;
}

// (AC/CB) / (AD/DB) with signed ratios measured along the common line;
// -1 means {A, B; C, D} is a harmonic range.
template <class S>
S cross_ratio(const Point<S>& a, const Point<S>& b, const Point<S>& c, const Point<S>& d,
              double rel_tol = kDefaultRelTol) {
  const Point<S>* pts[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (vec_eq(*pts[i], *pts[j], rel_tol))
        throw std::invalid_argument("cross_ratio: repeated point");
  if (!collinear<S>({a, b, c, d}, rel_tol))
    throw std::invalid_argument("cross_ratio: points are not collinear");

  const Vec<S> dir = b - a;
  const S dd = norm_sq(dir);
  auto coord = [&](const Point<S>& x) { return dot(x - a, dir) / dd; };
  const S ta(0), tb(1), tc = coord(c), td = coord(d);
  return ((tc - ta) / (tb - tc)) / ((td - ta) / (tb - td));
}

}  // namespace ortho
