// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "ortho/report.hpp"
#include "pipeline.hpp"

namespace ortho {

namespace {

using nlohmann::json;
using pipeline::vec_json;

// Deterministic direction grid on the unit Euclidean sphere via rational
// parametrizations: the tangent half-angle circle for n = 2, a stereographic
// grid for n = 3. Scaled to the target norm by dividing by the p-norm, so the
// emitted samples satisfy ||x - c|| = R under the scene norm.
std::vector<Vec<double>> unit_directions(std::size_t n, long count) {
  std::vector<Vec<double>> dirs;
  if (count <= 0) return dirs;
  if (n == 2) {
    const long half = std::max<long>(1, count / 2);
    for (int sign = 0; sign < 2 && static_cast<long>(dirs.size()) < count; ++sign) {
      for (long k = 0; k < half && static_cast<long>(dirs.size()) < count; ++k) {
        const double t = -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(half);
        const double den = 1.0 + t * t;
        const double x = (1.0 - t * t) / den;
        const double y = 2.0 * t / den;
        dirs.push_back(sign == 0 ? Vec<double>{x, y} : Vec<double>{-x, -y});
      }
    }
    return dirs;
  }
  // n == 3: stereographic sigma(s, t) = (2s, 2t, 1 - s^2 - t^2) / (1 + s^2 + t^2).
  const long grid = std::max<long>(2, static_cast<long>(std::ceil(std::sqrt(double(count)))));
  for (long i = 0; i < grid && static_cast<long>(dirs.size()) < count; ++i) {
    for (long j = 0; j < grid && static_cast<long>(dirs.size()) < count; ++j) {
      const double s = -2.0 + 4.0 * static_cast<double>(i) / static_cast<double>(grid - 1);
      const double t = -2.0 + 4.0 * static_cast<double>(j) / static_cast<double>(grid - 1);
      const double den = 1.0 + s * s + t * t;
      dirs.push_back(Vec<double>{2.0 * s / den, 2.0 * t / den, (1.0 - s * s - t * t) / den});
    }
  }
  return dirs;
}

json sphere_samples_json(const Point<double>& center, double radius, const NormSpec& ns,
                         const std::vector<Vec<double>>& dirs) {
  json out;
  out["center"] = vec_json(center);
  out["radius"] = radius;
  json samples = json::array();
  for (const Vec<double>& u : dirs) {
    const double un = norm(u, ns);
    samples.push_back(vec_json(center + (radius / un) * u));
  }
  out["samples"] = samples;
  return out;
}

template <class S>
json labeled_points(const InstanceObjects<S>& o) {
  json pts;
  for (std::size_t i = 0; i < 3; ++i) {
    pts["A" + std::to_string(i)] = vec_json(o.tri.vertex(i));
    pts["B" + std::to_string(i)] = vec_json(o.b[i]);
    pts["M" + std::to_string(i)] = vec_json(o.m[i]);
    pts["N" + std::to_string(i)] = vec_json(o.n[i]);
    pts["G" + std::to_string(i)] = vec_json(o.gi[i]);
  }
  pts["G"] = vec_json(o.g);
  pts["P"] = vec_json(o.p);
  pts["H_P"] = vec_json(o.h_p);
  pts["Q_P"] = vec_json(o.q_p);
  if (o.inplane) pts["O"] = vec_json(o.inplane->center);
  if (o.h) pts["H"] = vec_json(*o.h);
  return pts;
}

}  // namespace

std::string plotdata_document(const Scene& sc, long samples_per_sphere) {
  // Plot output is float data either way; exact scenes resolve on the float
  // backend here, which reuses the same pipeline.
  pipeline::ResolvedInstance<double> inst = pipeline::resolve_instance<double>(sc);
  BatteryOptions opt;
  opt.rel_tol = sc.tol;
  InstanceObjects<double> o = build_objects(inst.tri, inst.p, sc.norm, opt);

  json doc;
  doc["dimension"] = sc.dimension;
  doc["norm"] = sc.norm.str();
  doc["points"] = labeled_points(o);

  // Euler line samples P + t (H_P - P) over a fixed parameter grid.
  if (!vec_eq(o.p, o.g, sc.tol)) {
    static const double kParams[] = {-1.0, -0.5, 0.0, 0.25, 1.0 / 3, 0.5, 1.0, 1.5, 2.0};
    json line = json::array();
    for (double t : kParams) line.push_back(vec_json(o.p + t * (o.h_p - o.p)));
    doc["euler_line"] = line;
  } else {
    doc["euler_line"] = json::array();  // degenerate: P = G = H_P
  }

  const double r = std::sqrt(o.r_sq);
  json spheres;
  const struct {
    const char* name;
    const Point<double>* center;
    double radius;
  } defs[6] = {{"S", &o.p, r},           {"S_0", &o.b[0], r}, {"S_1", &o.b[1], r},
               {"S_2", &o.b[2], r},      {"S_M", &o.q_p, r / 2},
               {"S_H", &o.h_p, r}};
  const bool sampled = sc.dimension <= 3 && samples_per_sphere > 0;
  std::vector<Vec<double>> dirs =
      sampled ? unit_directions(static_cast<std::size_t>(sc.dimension), samples_per_sphere)
              : std::vector<Vec<double>>{};
  for (const auto& d : defs) {
    if (sampled) {
      spheres[d.name] = sphere_samples_json(*d.center, d.radius, sc.norm, dirs);
    } else {
      spheres[d.name] = json{{"center", vec_json(*d.center)}, {"radius", d.radius}};
    }
  }
  doc["spheres"] = spheres;
  if (sc.dimension > 3)
    doc["note"] = "sphere surface sampling requires dimension 2 or 3; centers and radii only";

  return doc.dump(2) + "\n";
}

}  // namespace ortho
