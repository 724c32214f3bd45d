// SPDX-License-Identifier: Apache-2.0
// Src-local helpers shared by the report and document builders. Not installed.
#pragma once

#include <sstream>
#include <vector>

#include "json.hpp"
#include "ortho/minkowski.hpp"
#include "ortho/scene.hpp"
#include "ortho/verify.hpp"

namespace ortho::pipeline {

using nlohmann::json;

inline json scalar_json(const Rational& r) { return r.str(); }
inline json scalar_json(double d) { return d; }

template <class S>
json vec_json(const Vec<S>& v) {
  json arr = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) arr.push_back(scalar_json(v[i]));
  return arr;
}

template <class S>
json points_json(const std::array<Point<S>, 3>& pts) {
  return json::array({vec_json(pts[0]), vec_json(pts[1]), vec_json(pts[2])});
}

// Backend bridge: scenes carry exact rationals; each backend converts once.
template <class S>
Point<S> scene_point(const std::vector<Rational>& coords);

template <>
inline Point<Rational> scene_point<Rational>(const std::vector<Rational>& coords) {
  return Point<Rational>(coords);
}

template <>
inline Point<double> scene_point<double>(const std::vector<Rational>& coords) {
  Point<double> p(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) p[i] = coords[i].to_double();
  return p;
}

template <class S>
struct ResolvedInstance {
  Triangle<S> tri;
  Point<S> p;
  std::vector<std::string> warnings;
};

template <class S>
ResolvedInstance<S> resolve_instance(const Scene& sc) {
  Triangle<S> tri(scene_point<S>(sc.vertex(0)), scene_point<S>(sc.vertex(1)),
                  scene_point<S>(sc.vertex(2)), sc.tol);
  std::vector<std::string> warnings;

  if (sc.p_coords) {
    Point<S> p = scene_point<S>(*sc.p_coords);
    require_equidistant(tri, p, sc.norm, sc.tol);
    return {std::move(tri), std::move(p), std::move(warnings)};
  }

  if (sc.norm.is_euclidean_like()) {
    AffineSubspace<S> locus = circumlocus(tri, sc.tol);
    std::vector<S> params(locus.dim(), S(0));
    if (sc.p_locus) {
      if (sc.p_locus->size() != locus.dim()) {
        std::ostringstream os;
        os << "scene: p.locus_params needs " << locus.dim() << " values, got "
           << sc.p_locus->size();
        throw SceneError(os.str());
      }
      for (std::size_t i = 0; i < params.size(); ++i)
        params[i] = scene_point<S>(std::vector<Rational>{(*sc.p_locus)[i]})[0];
    }
    Point<S> p = locus_sample(locus, params);
    return {std::move(tri), std::move(p), std::move(warnings)};
  }

  if (sc.p_locus)
    throw SceneError("scene: locus parameters require a Euclidean norm; give explicit p.coords");

  if constexpr (ScalarTraits<S>::exact) {
    throw SceneError(
        "scene: p-norm analysis without an explicit P needs the float backend (numerical solve)");
  } else {
    EquidistantProblem prob{tri, sc.norm, tri.ambient_dim() > 2};
    EquidistantSolution sol = equidistant_solve(prob);
    if (!sol.converged) {
      std::ostringstream os;
      os << "equidistant solve did not converge (best residual " << sol.residual << ")";
      throw GeometryError(os.str());
    }
    std::ostringstream os;
    os << "P found numerically (residual " << sol.residual << ")";
    warnings.push_back(os.str());
    return {std::move(tri), std::move(sol.point), std::move(warnings)};
  }
}

}  // namespace ortho::pipeline
