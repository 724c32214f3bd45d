// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <utility>

#include "ortho/orthocenter.hpp"

namespace ortho {

// Four points such that one of them is A0 + A1 + A2 - 2P for a point P
// equidistant from the other three under the chosen norm. The witness is
// stored with the squared witness distance.
template <class S>
struct OrthocentricSystem {
  std::array<Point<S>, 4> points;
  Point<S> witness;
  S radius_sq;
  NormSpec norm;
};

// Recognition: the candidate witness P = (A0 + A1 + A2 - A3)/2 must be
// equidistant from the first three points. Rejects duplicate points (a
// 4-point set is required) and collinear first-three.
template <class S>
Result<OrthocentricSystem<S>> is_orthocentric(const std::array<Point<S>, 4>& pts,
                                              const NormSpec& ns = NormSpec::euclidean(),
                                              double rel_tol = kDefaultRelTol) {
  using R = Result<OrthocentricSystem<S>>;
  for (std::size_t i = 1; i < 4; ++i)
    if (pts[i].dim() != pts[0].dim())
      throw std::invalid_argument("is_orthocentric: dimension mismatch");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (vec_eq(pts[i], pts[j], rel_tol)) {
        std::ostringstream os;
        os << "duplicate point (indices " << i << ", " << j << ")";
        return R::failure(os.str());
      }
  if (collinear<S>({pts[0], pts[1], pts[2]}, rel_tol))
    return R::failure("first three points are collinear");

  const Point<S> p = (pts[0] + pts[1] + pts[2] - pts[3]) / S(2);
  const S d0 = dist_sq(p, pts[0], ns);
  const S d1 = dist_sq(p, pts[1], ns);
  const S d2 = dist_sq(p, pts[2], ns);
  if (!scalar_eq(d0, d1, rel_tol) || !scalar_eq(d1, d2, rel_tol)) {
    std::ostringstream os;
    os << "witness is not equidistant (squared distances " << ScalarTraits<S>::to_double(d0)
       << ", " << ScalarTraits<S>::to_double(d1) << ", " << ScalarTraits<S>::to_double(d2) << ")";
    return R::failure(os.str());
  }
  return R::success(OrthocentricSystem<S>{pts, p, d0, ns});
}

// The five systems of the second theorem, with the shared construction data.
template <class S>
struct DerivedSystems {
  OrthocentricSystem<S> vertices_hp;   // {A0, A1, A2, H_P}
  OrthocentricSystem<S> anti_p;        // {B0, B1, B2, P}
  OrthocentricSystem<S> midpoints_p;   // {M0, M1, M2, P}
  OrthocentricSystem<S> anti_mid_hp;   // {N0, N1, N2, H_P}
  OrthocentricSystem<S> centroids_g;   // {G0, G1, G2, G}

  std::array<const OrthocentricSystem<S>*, 5> all() const {
    return {&vertices_hp, &anti_p, &midpoints_p, &anti_mid_hp, &centroids_g};
  }
};

template <class S>
DerivedSystems<S> derived_systems(const Triangle<S>& t, const Point<S>& p,
                                  const NormSpec& ns = NormSpec::euclidean(),
                                  double rel_tol = kDefaultRelTol) {
  require_equidistant(t, p, ns, rel_tol);
  const Point<S> sum = t.vertex(0) + t.vertex(1) + t.vertex(2);
  const Point<S> h_p = sum - S(2) * p;
  const std::array<Point<S>, 3> b = {t.vertex(1) + t.vertex(2) - p, t.vertex(0) + t.vertex(2) - p,
                                     t.vertex(0) + t.vertex(1) - p};
  const std::array<Point<S>, 3> m = midpoints(t);
  const std::array<Point<S>, 3> n = {midpoint(b[1], b[2]), midpoint(b[0], b[2]),
                                     midpoint(b[0], b[1])};
  // G_i = (A_i + 2 A_j + 2 A_k - 2P) / 3, the centroid of the triangle with
  // H_P substituted for A_i.
  std::array<Point<S>, 3> gi;
  for (std::size_t i = 0; i < 3; ++i)
    gi[i] = (S(2) * sum - t.vertex(i) - S(2) * p) / S(3);
  const Point<S> g = sum / S(3);

  auto validated = [&](const std::array<Point<S>, 4>& pts) {
    auto r = is_orthocentric(pts, ns, rel_tol);
    if (!r.ok()) throw GeometryError("derived_systems: " + r.error);
    return *r;
  };
  return DerivedSystems<S>{
      validated({t.vertex(0), t.vertex(1), t.vertex(2), h_p}),
      validated({b[0], b[1], b[2], p}),
      validated({m[0], m[1], m[2], p}),
      validated({n[0], n[1], n[2], h_p}),
      validated({gi[0], gi[1], gi[2], g}),
  };
}

// Homothetic image of an orthocentric system is an orthocentric system; the
// witness maps along and the squared radius scales by ratio^2.
template <class S>
Result<OrthocentricSystem<S>> homothety_image(const OrthocentricSystem<S>& sys,
                                              const Homothety<S>& h,
                                              double rel_tol = kDefaultRelTol) {
  std::array<Point<S>, 4> mapped;
  for (std::size_t i = 0; i < 4; ++i) mapped[i] = homothety_apply(h, sys.points[i]);
  auto r = is_orthocentric(mapped, sys.norm, rel_tol);
  if (r.ok() && !vec_eq(r->witness, homothety_apply(h, sys.witness), rel_tol))
    return Result<OrthocentricSystem<S>>::failure("mapped witness mismatch");
  return r;
}

// Opposite-edge orthogonality of the third theorem. Every pairing reduces to
// vectors 2(P - A_m), so both combined norms equal 2r under any norm.
template <class S>
struct OrthogonalityReport {
  struct Pairing {
    std::array<std::size_t, 4> indices;  // (i, j, k, l)
    bool isosceles_ok = false;
    std::optional<bool> dot_zero;        // Euclidean backends only
    bool norms_are_2r = false;           // ||u - v||^2 = ||u + v||^2 = 4 r^2
  };
  std::array<Pairing, 3> pairings;

  bool all_ok() const {
    for (const auto& p : pairings)
      if (!p.isosceles_ok || !p.norms_are_2r || (p.dot_zero && !*p.dot_zero)) return false;
    return true;
  }
};

template <class S>
OrthogonalityReport<S> opposite_orthogonality(const OrthocentricSystem<S>& sys,
                                              double rel_tol = kDefaultRelTol) {
  static constexpr std::array<std::array<std::size_t, 4>, 3> kPairings = {
      {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  OrthogonalityReport<S> report;
  const S four_r_sq = S(4) * sys.radius_sq;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto [i, j, l, m] = kPairings[k];
    const Vec<S> u = sys.points[j] - sys.points[i];
    const Vec<S> v = sys.points[m] - sys.points[l];
    auto& pr = report.pairings[k];
    pr.indices = kPairings[k];
    pr.isosceles_ok = isosceles_orthogonal(u, v, sys.norm, rel_tol);
    pr.norms_are_2r = scalar_eq(dist_sq(u, v, sys.norm), four_r_sq, rel_tol) &&
                      scalar_eq(dist_sq(u, -v, sys.norm), four_r_sq, rel_tol);
    if (sys.norm.is_euclidean_like()) pr.dot_zero = scalar_is_zero(dot(u, v), rel_tol,
        std::max(ScalarTraits<S>::to_double(norm_sq(u)), ScalarTraits<S>::to_double(norm_sq(v))));
  }
  return report;
}

// Concurrency point of the four altitudes of the tetrahedron, each taken
// inside the tetrahedron's 3-dimensional affine hull: the line through a
// vertex orthogonal to the opposite face. Decided by exact intersection of
// the first two altitudes followed by membership checks on the others.
template <class S>
Result<Point<S>> tetrahedron_altitudes_concur(const std::array<Point<S>, 4>& pts,
                                              double rel_tol = kDefaultRelTol) {
  using R = Result<Point<S>>;
  const std::size_t n = pts[0].dim();
  for (std::size_t i = 1; i < 4; ++i)
    if (pts[i].dim() != n) throw std::invalid_argument("tetrahedron: dimension mismatch");
  if (n < 3) throw GeometryError("tetrahedron: ambient dimension must be >= 3");

  const std::vector<Vec<S>> hull = {pts[1] - pts[0], pts[2] - pts[0], pts[3] - pts[0]};
  if (rank(Matrix<S>::from_rows(hull), rel_tol) != 3)
    throw GeometryError("tetrahedron: points are coplanar");

  // Altitude direction for vertex v: d = sum c_k hull_k with d orthogonal to
  // both edge vectors of the opposite face; the null space is 1-dimensional.
  auto altitude_dir = [&](std::size_t v) {
    std::array<std::size_t, 3> face{};
    for (std::size_t i = 0, k = 0; i < 4; ++i)
      if (i != v) face[k++] = i;
    const Vec<S> f1 = pts[face[1]] - pts[face[0]];
    const Vec<S> f2 = pts[face[2]] - pts[face[0]];
    Matrix<S> m(2, 3);
    for (std::size_t k = 0; k < 3; ++k) {
      m.at(0, k) = dot(f1, hull[k]);
      m.at(1, k) = dot(f2, hull[k]);
    }
    auto ns = nullspace(m, rel_tol);
    if (ns.size() != 1) throw GeometryError("tetrahedron: degenerate face");
    Vec<S> d(n);
    for (std::size_t k = 0; k < 3; ++k) d = d + ns[0][k] * hull[k];
    return d;
  };

  std::array<Vec<S>, 4> dirs;
  for (std::size_t v = 0; v < 4; ++v) dirs[v] = altitude_dir(v);

  // Intersect altitudes 0 and 1: pts[0] + s d0 = pts[1] + t d1.
  Matrix<S> sys(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    sys.at(i, 0) = dirs[0][i];
    sys.at(i, 1) = -dirs[1][i];
  }
  auto st = solve(sys, pts[1] - pts[0], rel_tol);
  if (!st) return R::failure("altitudes from vertices 0 and 1 do not meet");
  const Point<S> q = pts[0] + (*st)[0] * dirs[0];

  const double scale = std::max(Matrix<S>::from_rows({q}).max_abs() *
                                    Matrix<S>::from_rows({dirs[2], dirs[3]}).max_abs(),
                                1.0);
  for (std::size_t v = 2; v < 4; ++v) {
    const Vec<S> w = q - pts[v];
    bool on_line = true;
    for (std::size_t a = 0; a + 1 < n && on_line; ++a)
      for (std::size_t b = a + 1; b < n && on_line; ++b)
        if (!scalar_is_zero(dirs[v][a] * w[b] - dirs[v][b] * w[a], rel_tol, scale)) on_line = false;
    if (!on_line) {
      std::ostringstream os;
      os << "altitude from vertex " << v << " misses the candidate point";
      return R::failure(os.str());
    }
  }
  return R::success(q);
}

}  // namespace ortho
