// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <sstream>
#include <utility>

#include "ortho/affine.hpp"
#include "ortho/norms.hpp"

namespace ortho {

// center + squared radius under a norm. The exact backend stores the squared
// radius so Euclidean membership stays radical-free; p-norm membership
// compares the squared p-distance, which is exact for p in {1, inf}.
template <class S>
struct Sphere {
  Point<S> center;
  S radius_sq;
  NormSpec norm;

  bool contains(const Point<S>& x, double rel_tol = kDefaultRelTol) const {
    return scalar_eq(dist_sq(x, center, norm), radius_sq, rel_tol);
  }
};

// Three affinely independent points in R^n, n >= 2. Side a_i joins the two
// vertices other than A_i; M_i is its midpoint. Degenerate input (repeated
// or collinear vertices) is rejected here, not in each operation.
template <class S>
class Triangle {
 public:
  Triangle(Point<S> a0, Point<S> a1, Point<S> a2, double rel_tol = kDefaultRelTol)
      : v_{std::move(a0), std::move(a1), std::move(a2)} {
    detail::require_same_dim(v_[0], v_[1]);
    detail::require_same_dim(v_[0], v_[2]);
    if (v_[0].dim() < 2) throw std::invalid_argument("Triangle: ambient dimension must be >= 2");
    if (vec_eq(v_[0], v_[1], rel_tol) || vec_eq(v_[0], v_[2], rel_tol) || vec_eq(v_[1], v_[2], rel_tol))
      throw GeometryError("Triangle: repeated vertex");
    if (collinear<S>({v_[0], v_[1], v_[2]}, rel_tol))
      throw GeometryError("Triangle: vertices are collinear");
  }

  const Point<S>& vertex(std::size_t i) const { return v_[i]; }
  std::size_t ambient_dim() const { return v_[0].dim(); }

 private:
  std::array<Point<S>, 3> v_;
};

template <class S>
Point<S> centroid(const Triangle<S>& t) {
  return (t.vertex(0) + t.vertex(1) + t.vertex(2)) / S(3);
}

// M_i = (A_j + A_k) / 2 for {i, j, k} = {0, 1, 2}.
template <class S>
std::array<Point<S>, 3> midpoints(const Triangle<S>& t) {
  return {midpoint(t.vertex(1), t.vertex(2)), midpoint(t.vertex(0), t.vertex(2)),
          midpoint(t.vertex(0), t.vertex(1))};
}

template <class S>
struct InplaneCircumcenter {
  Point<S> center;
  S radius_sq;
  double condition;  // of the 2x2 bisector system; float-backend diagnostic
};

// The unique point of the triangle's plane equidistant from the vertices:
// O = A0 + s e1 + t e2 with (O - A0).e1 = |e1|^2 / 2 and (O - A0).e2 = |e2|^2 / 2.
// The Gram determinant is positive for non-collinear vertices, so the 2x2
// system is exactly solvable.
template <class S>
InplaneCircumcenter<S> circumcenter_inplane(const Triangle<S>& t) {
  const Vec<S> e1 = t.vertex(1) - t.vertex(0);
  const Vec<S> e2 = t.vertex(2) - t.vertex(0);
  const S g11 = norm_sq(e1), g12 = dot(e1, e2), g22 = norm_sq(e2);
  const S det = g11 * g22 - g12 * g12;
  const S half(S(1) / S(2));
  const S s = (g22 * g11 * half - g12 * g22 * half) / det;
  const S u = (g11 * g22 * half - g12 * g11 * half) / det;
  const Point<S> center = t.vertex(0) + s * e1 + u * e2;

  // Condition number of the symmetric 2x2 Gram system, for diagnostics.
  const double a = ScalarTraits<S>::to_double(g11);
  const double b = ScalarTraits<S>::to_double(g12);
  const double c = ScalarTraits<S>::to_double(g22);
  const double tr = a + c;
  const double disc = std::sqrt(std::max(0.0, (a - c) * (a - c) + 4 * b * b));
  const double lmax = (tr + disc) / 2, lmin = (tr - disc) / 2;
  const double cond = lmin > 0 ? lmax / lmin : std::numeric_limits<double>::infinity();

  return {center, norm_sq(center - t.vertex(0)), cond};
}

// The set of points equidistant from the three vertices: an (n-2)-dimensional
// affine subspace through the in-plane circumcenter whose directions span the
// orthogonal complement of the edge vectors (exact null space of the 2 x n
// edge matrix).
template <class S>
AffineSubspace<S> circumlocus(const Triangle<S>& t, double rel_tol = kDefaultRelTol) {
  const Vec<S> e1 = t.vertex(1) - t.vertex(0);
  const Vec<S> e2 = t.vertex(2) - t.vertex(0);
  std::vector<Vec<S>> basis = nullspace(Matrix<S>::from_rows({e1, e2}), rel_tol);
  return AffineSubspace<S>(circumcenter_inplane(t).center, std::move(basis), rel_tol);
}

template <class S>
Point<S> locus_sample(const AffineSubspace<S>& s, const std::vector<S>& params) {
  if (params.size() != s.dim())
    throw std::invalid_argument("locus_sample: parameter count does not match subspace dimension");
  Point<S> x = s.base();
  for (std::size_t i = 0; i < params.size(); ++i) x = x + params[i] * s.basis()[i];
  return x;
}

// Squared vertex distances of a candidate equidistant point.
template <class S>
std::array<S, 3> vertex_dist_sq(const Triangle<S>& t, const Point<S>& p, const NormSpec& ns) {
  return {dist_sq(p, t.vertex(0), ns), dist_sq(p, t.vertex(1), ns), dist_sq(p, t.vertex(2), ns)};
}

template <class S>
bool equidistant_from_vertices(const Triangle<S>& t, const Point<S>& p, const NormSpec& ns,
                               double rel_tol = kDefaultRelTol) {
  auto d = vertex_dist_sq(t, p, ns);
  return scalar_eq(d[0], d[1], rel_tol) && scalar_eq(d[1], d[2], rel_tol);
}

template <class S>
void require_equidistant(const Triangle<S>& t, const Point<S>& p, const NormSpec& ns,
                         double rel_tol = kDefaultRelTol) {
  if (p.dim() != t.ambient_dim())
    throw std::invalid_argument("equidistant point has wrong dimension");
  if (!equidistant_from_vertices(t, p, ns, rel_tol)) {
    auto d = vertex_dist_sq(t, p, ns);
    std::ostringstream os;
    os << "point is not equidistant from the vertices (squared distances "
       << ScalarTraits<S>::to_double(d[0]) << ", " << ScalarTraits<S>::to_double(d[1]) << ", "
       << ScalarTraits<S>::to_double(d[2]) << ")";
    throw GeometryError(os.str());
  }
}

// Sphere about P through the three vertices. P must be equidistant; the
// diagnostic lists the three squared distances otherwise.
template <class S>
Sphere<S> sphere_through(const Triangle<S>& t, const Point<S>& p,
                         const NormSpec& ns = NormSpec::euclidean(),
                         double rel_tol = kDefaultRelTol) {
  require_equidistant(t, p, ns, rel_tol);
  return Sphere<S>{p, dist_sq(p, t.vertex(0), ns), ns};
}

}  // namespace ortho
