// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ortho/triangle.hpp"

namespace ortho {

// Orthocenter associated to an equidistant point P: H_P = A0 + A1 + A2 - 2P.
// With P the in-plane circumcenter this is the classical orthocenter.
template <class S>
Point<S> orthocenter_at(const Triangle<S>& t, const Point<S>& p, double rel_tol = kDefaultRelTol) {
  require_equidistant(t, p, NormSpec::euclidean(), rel_tol);
  return t.vertex(0) + t.vertex(1) + t.vertex(2) - S(2) * p;
}

template <class S>
Point<S> classical_orthocenter(const Triangle<S>& t) {
  return t.vertex(0) + t.vertex(1) + t.vertex(2) - S(2) * circumcenter_inplane(t).center;
}

// B_i = A_j + A_k - P, the reflection of P through M_i; triangle B0B1B2 is
// point-symmetric to the original through Q_P.
template <class S>
std::array<Point<S>, 3> antitriangle(const Triangle<S>& t, const Point<S>& p,
                                     double rel_tol = kDefaultRelTol) {
  require_equidistant(t, p, NormSpec::euclidean(), rel_tol);
  return {t.vertex(1) + t.vertex(2) - p, t.vertex(0) + t.vertex(2) - p,
          t.vertex(0) + t.vertex(1) - p};
}

template <class S>
Point<S> symmetry_center(const Triangle<S>& t, const Point<S>& p) {
  return (t.vertex(0) + t.vertex(1) + t.vertex(2) - p) / S(2);
}

// The three spheres symmetric to the sphere about P with respect to the side
// midpoints; they keep the radius and are centered at the antitriangle.
template <class S>
std::array<Sphere<S>, 3> reflected_spheres(const Triangle<S>& t, const Point<S>& p,
                                           double rel_tol = kDefaultRelTol) {
  Sphere<S> s = sphere_through(t, p, NormSpec::euclidean(), rel_tol);
  auto b = antitriangle(t, p, rel_tol);
  return {Sphere<S>{b[0], s.radius_sq, s.norm}, Sphere<S>{b[1], s.radius_sq, s.norm},
          Sphere<S>{b[2], s.radius_sq, s.norm}};
}

template <class S>
struct EulerLineCheck {
  Point<S> g;
  bool collinear_ok = false;
  bool identity_ok = false;  // H_P - G = 2 (G - P)
  bool degenerate = false;   // P = G: the line collapses to a point
  std::optional<AffineSubspace<S>> line;
};

// P, G, H_P lie on a line with G between and 2 PG = G H_P; verified through
// the vector identity, which implies both the ratio and the betweenness.
template <class S>
EulerLineCheck<S> euler_check(const Triangle<S>& t, const Point<S>& p,
                              double rel_tol = kDefaultRelTol) {
  require_equidistant(t, p, NormSpec::euclidean(), rel_tol);
  EulerLineCheck<S> r;
  r.g = centroid(t);
  const Point<S> h_p = t.vertex(0) + t.vertex(1) + t.vertex(2) - S(2) * p;
  r.identity_ok = vec_eq(h_p - r.g, S(2) * (r.g - p), rel_tol);
  r.degenerate = vec_eq(p, r.g, rel_tol);
  if (r.degenerate) {
    r.collinear_ok = true;
    return r;
  }
  r.collinear_ok = collinear<S>({p, r.g, h_p}, rel_tol);
  r.line.emplace(p, std::vector<Vec<S>>{r.g - p}, rel_tol);
  return r;
}

// Sphere of center Q_P and half the radius; it carries the side midpoints of
// both triangles and the homothety midpoints checked in the battery.
template <class S>
Sphere<S> feuerbach_sphere(const Triangle<S>& t, const Point<S>& p,
                           double rel_tol = kDefaultRelTol) {
  Sphere<S> s = sphere_through(t, p, NormSpec::euclidean(), rel_tol);
  return Sphere<S>{symmetry_center(t, p), s.radius_sq / S(4), s.norm};
}

// Unsigned ratio identities PG/GQ_P = PH_P/H_P Q_P = 2 (compared as squared
// lengths via the proof's vector identities) plus cross_ratio(P, Q_P; G, H_P) = -1.
template <class S>
bool harmonic_range_check(const Triangle<S>& t, const Point<S>& p,
                          double rel_tol = kDefaultRelTol) {
  require_equidistant(t, p, NormSpec::euclidean(), rel_tol);
  const Point<S> g = centroid(t);
  if (vec_eq(p, g, rel_tol)) throw GeometryError("harmonic_range_check: degenerate instance P = G");
  const Point<S> h_p = t.vertex(0) + t.vertex(1) + t.vertex(2) - S(2) * p;
  const Point<S> q_p = symmetry_center(t, p);

  const S ph = norm_sq(h_p - p);
  const S pg = norm_sq(g - p);
  const S gq = norm_sq(q_p - g);
  const S qh = norm_sq(h_p - q_p);
  const bool ratios_ok = scalar_eq(S(9) * pg, ph, rel_tol) && scalar_eq(S(36) * gq, ph, rel_tol) &&
                         scalar_eq(S(4) * qh, ph, rel_tol) && scalar_eq(pg, S(4) * gq, rel_tol);
  const bool cr_ok = scalar_eq(cross_ratio(p, q_p, g, h_p, rel_tol), S(-1), rel_tol);
  return ratios_ok && cr_ok;
}

// Image of the circumcenter locus under X -> 3G - 2X, i.e. the homothety of
// ratio -2 about the centroid; the set of all orthocenters H_P.
template <class S>
AffineSubspace<S> orthocenter_set(const Triangle<S>& t, double rel_tol = kDefaultRelTol) {
  return subspace_map(Homothety<S>(centroid(t), S(-2)), circumlocus(t, rel_tol));
}

// Deterministic points on the sphere about `center` through the vertices,
// with exact rational coordinates: rotations of the vertex directions in
// coordinate 2-planes by rational cosine/sine pairs, reflections across the
// vertex diameters, and the antipodes. Every output satisfies the squared
// radius equation exactly on the rational backend.
template <class S>
std::vector<Point<S>> sphere_points(const Triangle<S>& t, const Point<S>& center,
                                    std::size_t count, double rel_tol = kDefaultRelTol) {
  std::vector<Vec<S>> dirs;  // vectors w with center + w on the sphere
  for (std::size_t i = 0; i < 3; ++i) dirs.push_back(t.vertex(i) - center);

  auto push_unique = [&](Vec<S> w) {
    for (const Vec<S>& d : dirs)
      if (vec_eq(d, w, rel_tol)) return;
    dirs.push_back(std::move(w));
  };

  for (std::size_t i = 0; i < 3 && dirs.size() < count; ++i) push_unique(-dirs[i]);

  // Rational rotations cos = (1-t^2)/(1+t^2), sin = 2t/(1+t^2) in coordinate
  // planes preserve the Euclidean norm exactly.
  const std::size_t n = center.dim();
  static const long kNums[] = {1, 1, 2, 1, 3, 2, 3, 1};
  static const long kDens[] = {2, 3, 3, 4, 4, 5, 5, 5};
  for (std::size_t step = 0; step < 8 && dirs.size() < count; ++step) {
    const S tt = ScalarTraits<S>::from_long(kNums[step]) / ScalarTraits<S>::from_long(kDens[step]);
    const S one(1);
    const S den = one + tt * tt;
    const S cosv = (one - tt * tt) / den;
    const S sinv = (S(2) * tt) / den;
    const std::size_t base = dirs.size();
    for (std::size_t a = 0; a < n && dirs.size() < count; ++a) {
      for (std::size_t b = a + 1; b < n && dirs.size() < count; ++b) {
        for (std::size_t k = 0; k < std::min<std::size_t>(base, 3); ++k) {
          Vec<S> w = dirs[k];
          const S wa = w[a], wb = w[b];
          w[a] = cosv * wa - sinv * wb;
          w[b] = sinv * wa + cosv * wb;
          push_unique(std::move(w));
          if (dirs.size() >= count) break;
        }
      }
    }
  }

  // Reflections across the vertex diameters: w -> 2 proj_d(w) - w.
  for (std::size_t j = 0; j < 3 && dirs.size() < count; ++j) {
    const Vec<S> d = t.vertex(j) - center;
    const S dd = norm_sq(d);
    if (scalar_is_zero(dd, rel_tol)) continue;
    const std::size_t base = dirs.size();
    for (std::size_t k = 0; k < base && dirs.size() < count; ++k) {
      const S f = S(2) * dot(dirs[k], d) / dd;
      push_unique(f * d - dirs[k]);
    }
  }

  std::vector<Point<S>> out;
  out.reserve(std::min(count, dirs.size()));
  for (std::size_t i = 0; i < dirs.size() && out.size() < count; ++i)
    out.push_back(center + dirs[i]);
  return out;
}

}  // namespace ortho
