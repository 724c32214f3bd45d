// SPDX-License-Identifier: Apache-2.0
#include "ortho/report.hpp"

#include <sstream>

#include "pipeline.hpp"

namespace ortho {

namespace {

using nlohmann::json;
using pipeline::points_json;
using pipeline::scalar_json;
using pipeline::scene_point;
using pipeline::vec_json;

template <class S>
json sphere_json(const Point<S>& center, const S& radius_sq) {
  return json{{"center", vec_json(center)}, {"radius_sq", scalar_json(radius_sq)}};
}

const char* status_str(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::pass: return "pass";
    case Verdict::Status::fail: return "fail";
    default: return "not-applicable";
  }
}

json clauses_json(const std::vector<ClauseOutcome>& clauses) {
  json out = json::object();
  for (const ClauseOutcome& c : clauses)
    out[c.name] = json{{"status", status_str(c.verdict.status)}, {"reason", c.verdict.reason}};
  return out;
}

template <class S>
json objects_json(const InstanceObjects<S>& o) {
  json objs;
  objs["P"] = vec_json(o.p);
  objs["G"] = vec_json(o.g);
  objs["H_P"] = vec_json(o.h_p);
  objs["Q_P"] = vec_json(o.q_p);
  objs["r_sq"] = scalar_json(o.r_sq);
  objs["M"] = points_json(o.m);
  objs["B"] = points_json(o.b);
  objs["N"] = points_json(o.n);
  objs["G_i"] = points_json(o.gi);
  if (o.inplane) {
    objs["O"] = vec_json(o.inplane->center);
    objs["r_sq_inplane"] = scalar_json(o.inplane->radius_sq);
  }
  if (o.h) objs["H"] = vec_json(*o.h);
  if (o.locus) {
    json basis = json::array();
    for (const Vec<S>& b : o.locus->basis()) basis.push_back(vec_json(b));
    objs["locus"] =
        json{{"base", vec_json(o.locus->base())}, {"basis", basis}, {"dim", o.locus->dim()}};
  }
  json spheres;
  spheres["S"] = sphere_json(o.p, o.r_sq);
  spheres["S_0"] = sphere_json(o.b[0], o.r_sq);
  spheres["S_1"] = sphere_json(o.b[1], o.r_sq);
  spheres["S_2"] = sphere_json(o.b[2], o.r_sq);
  spheres["S_M"] = sphere_json(o.q_p, o.r_sq / S(4));
  spheres["S_H"] = sphere_json(o.h_p, o.r_sq);
  objs["spheres"] = spheres;
  return objs;
}

template <class S>
AnalyzeOutcome analyze_core(const Scene& sc) {
  pipeline::ResolvedInstance<S> inst = pipeline::resolve_instance<S>(sc);

  BatteryOptions opt;
  opt.rel_tol = sc.tol;
  InstanceObjects<S> objects = build_objects(inst.tri, inst.p, sc.norm, opt);
  std::vector<ClauseOutcome> clauses = theorem_battery(objects, opt);

  std::vector<std::string> warnings = std::move(inst.warnings);
  if (!sc.norm.strictly_convex())
    warnings.push_back(
        "norm is not strictly convex (p in {1, inf}): equidistant points may be non-unique");
  if (!ScalarTraits<S>::exact && objects.inplane && objects.inplane->condition > 1e8) {
    std::ostringstream os;
    os << "ill-conditioned bisector system (condition ~ " << objects.inplane->condition << ")";
    warnings.push_back(os.str());
  }

  int pass = 0, fail = 0, na = 0;
  for (const ClauseOutcome& c : clauses) {
    switch (c.verdict.status) {
      case Verdict::Status::pass: ++pass; break;
      case Verdict::Status::fail: ++fail; break;
      case Verdict::Status::not_applicable: ++na; break;
    }
  }

  json report;
  report["backend"] = sc.backend == Scene::Backend::exact ? "exact" : "float";
  report["dimension"] = sc.dimension;
  report["norm"] = sc.norm.str();
  report["instance"] = json::parse(sc.source_text);
  report["objects"] = objects_json(objects);
  report["clauses"] = clauses_json(clauses);
  report["warnings"] = warnings;
  report["summary"] =
      json{{"pass", pass}, {"fail", fail}, {"not_applicable", na}, {"all_pass", fail == 0}};

  return AnalyzeOutcome{report.dump(2) + "\n", fail == 0};
}

template <class S>
json locus_core(const Scene& sc) {
  Triangle<S> tri(scene_point<S>(sc.vertex(0)), scene_point<S>(sc.vertex(1)),
                  scene_point<S>(sc.vertex(2)), sc.tol);
  AffineSubspace<S> locus = circumlocus(tri, sc.tol);
  AffineSubspace<S> hset = orthocenter_set(tri, sc.tol);
  InplaneCircumcenter<S> o = circumcenter_inplane(tri);

  auto subspace_json = [](const AffineSubspace<S>& s) {
    json basis = json::array();
    for (const Vec<S>& b : s.basis()) basis.push_back(vec_json(b));
    return json{{"base", vec_json(s.base())}, {"basis", basis}, {"dim", s.dim()}};
  };

  json doc;
  doc["backend"] = sc.backend == Scene::Backend::exact ? "exact" : "float";
  doc["dimension"] = sc.dimension;
  doc["norm"] = sc.norm.str();
  doc["circumlocus"] = subspace_json(locus);
  doc["circumlocus"]["r_sq"] = scalar_json(o.radius_sq);
  doc["orthocenter_set"] = subspace_json(hset);
  return doc;
}

}  // namespace

AnalyzeOutcome analyze_scene(const Scene& sc) {
  if (sc.backend == Scene::Backend::exact) {
    if (!sc.norm.is_euclidean_like() && !(sc.norm.p == 1.0 || sc.norm.is_inf()))
      throw SceneError("scene: exact backend supports euclidean, p:1 and p:inf norms only; "
                       "use backend 'float' for " +
                       sc.norm.str());
    return analyze_core<Rational>(sc);
  }
  return analyze_core<double>(sc);
}

std::string locus_document(const Scene& sc) {
  if (!sc.norm.is_euclidean_like())
    throw SceneError("locus: the circumcenter locus is a Euclidean construction; got norm " +
                     sc.norm.str());
  json doc =
      sc.backend == Scene::Backend::exact ? locus_core<Rational>(sc) : locus_core<double>(sc);
  return doc.dump(2) + "\n";
}

}  // namespace ortho
