// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "ortho/orthosys.hpp"

namespace ortho {

struct Verdict {
  enum class Status { pass, fail, not_applicable };
  Status status = Status::pass;
  std::string reason;  // machine-readable; empty on plain pass
};

// Affine clauses are statements about points built by affine formulas and
// hold under every norm; metric clauses evaluate distances under the
// instance norm. Mixed clauses carry both parts.
enum class ClauseKind { affine, metric, mixed };

struct ClauseOutcome {
  std::string name;
  ClauseKind kind = ClauseKind::metric;
  Verdict verdict;
  double achieved = 0.0;  // worst relative deviation seen by the comparisons
};

struct BatteryOptions {
  double rel_tol = kDefaultRelTol;
  bool affine_only = false;          // skip distance evaluations (and the
                                     // equidistance precondition): used for the
                                     // exact re-check of snapped float instances
  std::size_t sphere_samples = 16;
  bool with_tetrahedron = true;
};

// Everything the theorems mention for one instance, computed once.
template <class S>
struct InstanceObjects {
  Triangle<S> tri;
  Point<S> p;
  NormSpec norm;
  S r_sq{0};
  Point<S> g, h_p, q_p;
  std::array<Point<S>, 3> m{}, b{}, n{}, gi{};
  // Euclidean-only companions (undefined for general norms).
  std::optional<InplaneCircumcenter<S>> inplane;
  std::optional<Point<S>> h;
  std::optional<AffineSubspace<S>> locus;
};

template <class S>
InstanceObjects<S> build_objects(const Triangle<S>& t, const Point<S>& p, const NormSpec& ns,
                                 const BatteryOptions& opt = {}) {
  if (!opt.affine_only) require_equidistant(t, p, ns, opt.rel_tol);

  InstanceObjects<S> o{t, p, ns};
  const Point<S> sum = t.vertex(0) + t.vertex(1) + t.vertex(2);
  o.g = sum / S(3);
  o.h_p = sum - S(2) * p;
  o.q_p = (sum - p) / S(2);
  o.m = midpoints(t);
  o.b = {t.vertex(1) + t.vertex(2) - p, t.vertex(0) + t.vertex(2) - p,
         t.vertex(0) + t.vertex(1) - p};
  o.n = {midpoint(o.b[1], o.b[2]), midpoint(o.b[0], o.b[2]), midpoint(o.b[0], o.b[1])};
  for (std::size_t i = 0; i < 3; ++i) o.gi[i] = (S(2) * sum - t.vertex(i) - S(2) * p) / S(3);
  if (!opt.affine_only) o.r_sq = dist_sq(p, t.vertex(0), ns);
  if (ns.is_euclidean_like()) {
    o.inplane = circumcenter_inplane(t);
    o.h = sum - S(2) * o.inplane->center;
    o.locus = circumlocus(t, opt.rel_tol);
  }
  return o;
}

namespace detail {

// Accumulates comparisons for one clause: first failure wins the reason,
// and the worst relative deviation is kept for achieved-tolerance reports.
template <class S>
class Checker {
 public:
  explicit Checker(double rel_tol) : tol_(rel_tol) {}

  void eq(const S& a, const S& b, const char* what) {
    worst_ = std::max(worst_, relative_deviation(a, b));
    if (!scalar_eq(a, b, tol_) && reason_.empty()) reason_ = what;
  }
  void eq_vec(const Vec<S>& a, const Vec<S>& b, const char* what) {
    for (std::size_t i = 0; i < std::min(a.dim(), b.dim()); ++i)
      worst_ = std::max(worst_, relative_deviation(a[i], b[i]));
    if (!vec_eq(a, b, tol_) && reason_.empty()) reason_ = what;
  }
  void is_true(bool cond, const char* what) {
    if (!cond && reason_.empty()) reason_ = what;
  }

  ClauseOutcome finish(std::string name, ClauseKind kind) const {
    ClauseOutcome c{std::move(name), kind, {}, worst_};
    if (!reason_.empty()) c.verdict = {Verdict::Status::fail, reason_};
    return c;
  }

 private:
  double tol_;
  double worst_ = 0.0;
  std::string reason_;
};

template <class S>
bool any_duplicate(const std::array<Point<S>, 4>& pts, double rel_tol) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (vec_eq(pts[i], pts[j], rel_tol)) return true;
  return false;
}

inline ClauseOutcome not_applicable(std::string name, ClauseKind kind, std::string why) {
  return {std::move(name), kind, {Verdict::Status::not_applicable, std::move(why)}, 0.0};
}

}  // namespace detail

// Points at distance r from the center under ns: signed coordinate
// permutations of the vertex offsets preserve every p-norm; the Euclidean
// case uses the richer rotation/reflection orbit.
template <class S>
std::vector<Point<S>> norm_sphere_points(const Triangle<S>& t, const Point<S>& center,
                                         const NormSpec& ns, std::size_t count,
                                         double rel_tol = kDefaultRelTol) {
  if (ns.is_euclidean_like()) return sphere_points(t, center, count, rel_tol);

  std::vector<Vec<S>> dirs;
  for (std::size_t i = 0; i < 3; ++i) dirs.push_back(t.vertex(i) - center);
  auto push_unique = [&](Vec<S> w) {
    for (const Vec<S>& d : dirs)
      if (vec_eq(d, w, rel_tol)) return;
    dirs.push_back(std::move(w));
  };

  const std::size_t n = center.dim();
  const std::size_t masks = n >= 16 ? 1u << 16 : (1u << n);
  for (std::size_t mask = 1; mask < masks && dirs.size() < count; ++mask) {
    for (std::size_t k = 0; k < 3 && dirs.size() < count; ++k) {
      Vec<S> w = dirs[k];
      for (std::size_t c = 0; c < n; ++c)
        if (mask & (std::size_t(1) << c)) w[c] = -w[c];
      push_unique(std::move(w));
    }
  }
  for (std::size_t a = 0; a < n && dirs.size() < count; ++a)
    for (std::size_t b = a + 1; b < n && dirs.size() < count; ++b)
      for (std::size_t k = 0; k < 3 && dirs.size() < count; ++k) {
        Vec<S> w = dirs[k];
        std::swap(w[a], w[b]);
        push_unique(std::move(w));
      }

  std::vector<Point<S>> out;
  out.reserve(std::min(count, dirs.size()));
  for (std::size_t i = 0; i < dirs.size() && out.size() < count; ++i)
    out.push_back(center + dirs[i]);
  return out;
}

// Runs every theorem clause for one instance and returns one outcome per
// report key. Affine-only mode skips all distance work so the clause set can
// be re-verified exactly on rationalized float instances.
template <class S>
std::vector<ClauseOutcome> theorem_battery(const InstanceObjects<S>& o,
                                           const BatteryOptions& opt = {}) {
  using detail::Checker;
  using detail::not_applicable;

  std::vector<ClauseOutcome> out;
  const double tol = opt.rel_tol;
  const bool metric = !opt.affine_only;
  const S four(4);

  // -- Theorem 1: concurrence of the reflected spheres at H_P (and H).
  if (metric) {
    Checker<S> ck(tol);
    for (std::size_t i = 0; i < 3; ++i)
      ck.eq(dist_sq(o.b[i], o.h_p, o.norm), o.r_sq, "||B_i - H_P|| != r");
    if (o.h)
      for (std::size_t i = 0; i < 3; ++i)
        ck.eq(dist_sq(o.b[i], *o.h, o.norm), o.r_sq, "||B_i - H|| != r");
    out.push_back(ck.finish("theorem1.concurrence", ClauseKind::metric));
  } else {
    out.push_back(not_applicable("theorem1.concurrence", ClauseKind::metric, "metric clause"));
  }

  // -- Theorem 1.1: the antitriangle is the point reflection through Q_P.
  {
    Checker<S> ck(tol);
    for (std::size_t i = 0; i < 3; ++i) {
      ck.eq_vec(midpoint(o.tri.vertex(i), o.b[i]), o.q_p, "midpoint(A_i, B_i) != Q_P");
      ck.eq_vec(point_reflect(o.q_p, o.tri.vertex(i)), o.b[i], "B_i != S_{Q_P}(A_i)");
    }
    out.push_back(ck.finish("theorem1.part1_symmetry_center", ClauseKind::affine));
  }

  // -- Theorem 1.2: Euler property H_P - G = 2 (G - P).
  {
    Checker<S> ck(tol);
    ck.eq_vec(o.h_p - o.g, S(2) * (o.g - o.p), "H_P - G != 2 (G - P)");
    if (!vec_eq(o.p, o.g, tol))
      ck.is_true(collinear<S>({o.p, o.g, o.h_p}, tol), "P, G, H_P not collinear");
    out.push_back(ck.finish("theorem1.part2_euler", ClauseKind::affine));
  }

  // -- Theorem 1.3: the Feuerbach sphere about Q_P with radius r/2.
  if (metric) {
    Checker<S> ck(tol);
    const S quarter_r_sq = o.r_sq / four;
    for (std::size_t i = 0; i < 3; ++i) {
      ck.eq(dist_sq(o.m[i], o.q_p, o.norm), quarter_r_sq, "||M_i - Q_P|| != r/2");
      ck.eq(dist_sq(o.n[i], o.q_p, o.norm), quarter_r_sq, "||N_i - Q_P|| != r/2");
    }
    const Vec<S> shift = o.h_p - o.p;  // S_H is the translate of S by H_P - P
    for (const Point<S>& x : norm_sphere_points(o.tri, o.p, o.norm, opt.sphere_samples, tol)) {
      ck.eq(dist_sq(midpoint(o.h_p, x), o.q_p, o.norm), quarter_r_sq,
            "midpoint(H_P, X in S) off the Feuerbach sphere");
      ck.eq(dist_sq(midpoint(o.p, x + shift), o.q_p, o.norm), quarter_r_sq,
            "midpoint(P, Y in S_H) off the Feuerbach sphere");
    }
    out.push_back(ck.finish("theorem1.part3_feuerbach", ClauseKind::metric));
  } else {
    out.push_back(not_applicable("theorem1.part3_feuerbach", ClauseKind::metric, "metric clause"));
  }

  // -- Theorem 1.4: P, Q_P, G, H_P form a harmonic range.
  if (vec_eq(o.p, o.g, tol)) {
    out.push_back(not_applicable("theorem1.part4_harmonic", ClauseKind::mixed,
                                 "degenerate: P = G, the four points coincide"));
  } else {
    Checker<S> ck(tol);
    const Vec<S> ph = o.h_p - o.p;
    ck.eq_vec(S(3) * (o.g - o.p), ph, "PG != PH_P / 3");
    ck.eq_vec(S(6) * (o.q_p - o.g), ph, "GQ_P != PH_P / 6");
    ck.eq_vec(S(2) * (o.h_p - o.q_p), ph, "Q_P H_P != PH_P / 2");
    ck.eq(cross_ratio(o.p, o.q_p, o.g, o.h_p, tol), S(-1), "cross ratio != -1");
    if (metric) {
      const S phn = dist_sq(o.h_p, o.p, o.norm);
      const S pgn = dist_sq(o.g, o.p, o.norm);
      const S gqn = dist_sq(o.q_p, o.g, o.norm);
      const S qhn = dist_sq(o.h_p, o.q_p, o.norm);
      ck.eq(S(9) * pgn, phn, "PG^2 != PH_P^2 / 9");
      ck.eq(S(36) * gqn, phn, "GQ_P^2 != PH_P^2 / 36");
      ck.eq(four * qhn, phn, "Q_P H_P^2 != PH_P^2 / 4");
      ck.eq(pgn, four * gqn, "PG != 2 GQ_P");
      ck.eq(phn, four * qhn, "PH_P != 2 H_P Q_P");
    }
    out.push_back(ck.finish("theorem1.part4_harmonic", ClauseKind::mixed));
  }

  // -- Theorem 2: the five orthocentric systems.
  const Point<S> sum = o.tri.vertex(0) + o.tri.vertex(1) + o.tri.vertex(2);
  const struct {
    const char* name;
    std::array<Point<S>, 4> pts;
    Point<S> expected_witness;
  } systems[5] = {
      {"theorem2.system1_vertices_hp",
       {o.tri.vertex(0), o.tri.vertex(1), o.tri.vertex(2), o.h_p},
       o.p},
      {"theorem2.system2_antitriangle_p", {o.b[0], o.b[1], o.b[2], o.p}, o.h_p},
      {"theorem2.system3_midpoints_p", {o.m[0], o.m[1], o.m[2], o.p}, o.q_p},
      {"theorem2.system4_antimidpoints_hp", {o.n[0], o.n[1], o.n[2], o.h_p}, o.q_p},
      {"theorem2.system5_centroids_g",
       {o.gi[0], o.gi[1], o.gi[2], o.g},
       (S(2) * sum - S(3) * o.p) / S(3)},
  };
  for (const auto& sysdef : systems) {
    if (detail::any_duplicate(sysdef.pts, tol)) {
      out.push_back(
          not_applicable(sysdef.name, ClauseKind::mixed, "degenerate: duplicate points in system"));
      continue;
    }
    Checker<S> ck(tol);
    const Point<S> w = (sysdef.pts[0] + sysdef.pts[1] + sysdef.pts[2] - sysdef.pts[3]) / S(2);
    ck.eq_vec(w, sysdef.expected_witness, "witness formula mismatch");
    if (metric) {
      auto r = is_orthocentric(sysdef.pts, o.norm, tol);
      ck.is_true(r.ok(), "is_orthocentric rejected the system");
    }
    out.push_back(ck.finish(sysdef.name, ClauseKind::mixed));
  }

  // -- Theorem 2 proof maps: H_{G,-1/2}, H_{Q_P,-1/3} and S_{Q_P} images.
  {
    Checker<S> ck(tol);
    const Homothety<S> to_medial(o.g, S(-1) / S(2));
    const Homothety<S> to_centroids(o.q_p, S(-1) / S(3));
    for (std::size_t i = 0; i < 3; ++i) {
      ck.eq_vec(homothety_apply(to_medial, o.tri.vertex(i)), o.m[i], "H_{G,-1/2}(A_i) != M_i");
      ck.eq_vec(homothety_apply(to_centroids, o.tri.vertex(i)), o.gi[i],
                "H_{Q_P,-1/3}(A_i) != G_i");
      ck.eq_vec(point_reflect(o.q_p, o.m[i]), o.n[i], "S_{Q_P}(M_i) != N_i");
    }
    ck.eq_vec(homothety_apply(to_medial, o.h_p), o.p, "H_{G,-1/2}(H_P) != P");
    ck.eq_vec(homothety_apply(to_centroids, o.h_p), o.g, "H_{Q_P,-1/3}(H_P) != G");
    ck.eq_vec(point_reflect(o.q_p, o.p), o.h_p, "S_{Q_P}(P) != H_P");
    out.push_back(ck.finish("theorem2.homothety_maps", ClauseKind::affine));
  }

  // -- Theorem 3: opposite-edge orthogonality in {A0, A1, A2, H_P}.
  {
    const std::array<Point<S>, 4> pts = {o.tri.vertex(0), o.tri.vertex(1), o.tri.vertex(2), o.h_p};
    static constexpr std::array<std::array<std::size_t, 4>, 3> kPairs = {
        {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    static constexpr const char* kPairNames[3] = {"theorem3.pairing_01_23", "theorem3.pairing_02_13",
                                                  "theorem3.pairing_03_12"};
    const bool degenerate = detail::any_duplicate(pts, tol);
    for (std::size_t k = 0; k < 3; ++k) {
      if (!metric) {
        out.push_back(not_applicable(kPairNames[k], ClauseKind::metric, "metric clause"));
        continue;
      }
      if (degenerate) {
        out.push_back(not_applicable(kPairNames[k], ClauseKind::metric,
                                     "degenerate: duplicate points in system"));
        continue;
      }
      Checker<S> ck(tol);
      const Vec<S> u = pts[kPairs[k][1]] - pts[kPairs[k][0]];
      const Vec<S> v = pts[kPairs[k][3]] - pts[kPairs[k][2]];
      ck.is_true(isosceles_orthogonal(u, v, o.norm, tol), "not isosceles orthogonal");
      ck.eq(dist_sq(u, v, o.norm), four * o.r_sq, "||u - v|| != 2r");
      ck.eq(dist_sq(u, -v, o.norm), four * o.r_sq, "||u + v|| != 2r");
      if (o.norm.is_euclidean_like()) {
        const double sc = std::max(ScalarTraits<S>::to_double(norm_sq(u)),
                                   ScalarTraits<S>::to_double(norm_sq(v)));
        ck.is_true(scalar_is_zero(dot(u, v), tol, sc), "dot product nonzero");
      }
      out.push_back(ck.finish(kPairNames[k], ClauseKind::metric));
    }
  }

  // -- Lemma: homothetic image of the vertex system re-validates.
  {
    const std::array<Point<S>, 4> pts = {o.tri.vertex(0), o.tri.vertex(1), o.tri.vertex(2), o.h_p};
    if (detail::any_duplicate(pts, tol)) {
      out.push_back(not_applicable("lemma.homothety_closure", ClauseKind::mixed,
                                   "degenerate: duplicate points in system"));
    } else {
      Checker<S> ck(tol);
      const Homothety<S> h(o.tri.vertex(0), S(-2));  // fixed deterministic spot-check
      std::array<Point<S>, 4> mapped;
      for (std::size_t i = 0; i < 4; ++i) mapped[i] = homothety_apply(h, pts[i]);
      const Point<S> mapped_witness = homothety_apply(h, o.p);
      ck.eq_vec(mapped[0] + mapped[1] + mapped[2] - S(2) * mapped_witness, mapped[3],
                "mapped witness identity fails");
      if (metric) {
        auto r = is_orthocentric(mapped, o.norm, tol);
        ck.is_true(r.ok(), "mapped system is not orthocentric");
        if (r.ok()) ck.eq(r->radius_sq, four * o.r_sq, "radius^2 does not scale by ratio^2");
      }
      out.push_back(ck.finish("lemma.homothety_closure", ClauseKind::mixed));
    }
  }

  // -- Closing remark: the orthocentric tetrahedron.
  if (opt.with_tetrahedron) {
    const char* name = "tetrahedron.altitudes_concur";
    const std::array<Point<S>, 4> pts = {o.tri.vertex(0), o.tri.vertex(1), o.tri.vertex(2), o.h_p};
    if (!metric) {
      out.push_back(not_applicable(name, ClauseKind::metric, "metric clause"));
    } else if (!o.norm.is_euclidean_like()) {
      out.push_back(not_applicable(name, ClauseKind::metric, "altitudes are Euclidean notions"));
    } else if (o.tri.ambient_dim() < 3) {
      out.push_back(not_applicable(name, ClauseKind::metric, "ambient dimension < 3"));
    } else if (detail::any_duplicate(pts, tol) ||
               rank(Matrix<S>::from_rows({pts[1] - pts[0], pts[2] - pts[0], pts[3] - pts[0]}),
                    tol) != 3) {
      out.push_back(not_applicable(name, ClauseKind::metric, "points are coplanar"));
    } else {
      Checker<S> ck(tol);
      auto q = tetrahedron_altitudes_concur(pts, tol);
      ck.is_true(q.ok(), "altitudes do not concur");
      out.push_back(ck.finish(name, ClauseKind::metric));
    }
  }

  return out;
}

template <class S>
std::vector<ClauseOutcome> theorem_battery(const Triangle<S>& t, const Point<S>& p,
                                           const NormSpec& ns, const BatteryOptions& opt = {}) {
  return theorem_battery(build_objects(t, p, ns, opt), opt);
}

}  // namespace ortho
