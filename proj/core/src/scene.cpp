// SPDX-License-Identifier: Apache-2.0
#include "ortho/scene.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ortho {

namespace {

using nlohmann::json;

Rational coordinate(const json& v, const std::string& where) {
  if (v.is_string()) {
    auto r = Rational::parse(v.get<std::string>());
    if (!r) throw SceneError(where + ": bad rational '" + v.get<std::string>() + "'");
    return *r;
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number_float()) return Rational::from_double(v.get<double>());
  throw SceneError(where + ": expected a number or a rational string");
}

std::vector<Rational> coordinates(const json& arr, int dim, const std::string& where) {
  if (!arr.is_array()) throw SceneError(where + ": expected an array");
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(coordinate(arr[i], where + "[" + std::to_string(i) + "]"));
  if (dim >= 0 && out.size() != static_cast<std::size_t>(dim)) {
    std::ostringstream os;
    os << where << ": expected " << dim << " coordinates, got " << out.size();
    throw SceneError(os.str());
  }
  return out;
}

json coords_to_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const Rational& r : v) arr.push_back(r.str());
  return arr;
}

}  // namespace

const std::vector<Rational>& Scene::vertex(std::size_t i) const {
  return points.at(triangle_names[i]);
}

Scene Scene::from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SceneError(std::string("scene parse error: ") + e.what());
  }
  if (!j.is_object()) throw SceneError("scene: top level must be an object");

  Scene sc;
  sc.source_text = text;

  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw SceneError("scene: missing integer field 'dimension'");
  sc.dimension = j["dimension"].get<int>();
  if (sc.dimension < 2) throw SceneError("scene: dimension must be >= 2");

  if (j.contains("backend")) {
    const std::string b = j["backend"].get<std::string>();
    if (b == "exact")
      sc.backend = Backend::exact;
    else if (b == "float")
      sc.backend = Backend::floating;
    else
      throw SceneError("scene: backend must be 'exact' or 'float', got '" + b + "'");
  }

  if (j.contains("norm")) {
    auto ns = NormSpec::parse(j["norm"].get<std::string>());
    if (!ns)
      throw SceneError("scene: bad norm '" + j["norm"].get<std::string>() +
                       "' (expected 'euclidean' or 'p:<value>', p >= 1)");
    sc.norm = *ns;
  }

  if (j.contains("tolerance")) {
    sc.tol = j["tolerance"].get<double>();
    if (!(sc.tol > 0)) throw SceneError("scene: tolerance must be positive");
  }
  if (j.contains("description")) sc.description = j["description"].get<std::string>();

  if (!j.contains("points") || !j["points"].is_object())
    throw SceneError("scene: missing object field 'points'");
  for (const auto& [name, arr] : j["points"].items())
    sc.points[name] = coordinates(arr, sc.dimension, "points." + name);

  if (!j.contains("triangle") || !j["triangle"].is_array() || j["triangle"].size() != 3)
    throw SceneError("scene: 'triangle' must list three point names");
  for (std::size_t i = 0; i < 3; ++i) {
    sc.triangle_names[i] = j["triangle"][i].get<std::string>();
    if (!sc.points.count(sc.triangle_names[i]))
      throw SceneError("scene: triangle vertex '" + sc.triangle_names[i] +
                       "' is not a named point");
  }

  if (j.contains("p")) {
    const json& p = j["p"];
    if (!p.is_object() || (p.contains("coords") == p.contains("locus_params")))
      throw SceneError("scene: 'p' must carry exactly one of 'coords' or 'locus_params'");
    if (p.contains("coords"))
      sc.p_coords = coordinates(p["coords"], sc.dimension, "p.coords");
    else
      sc.p_locus = coordinates(p["locus_params"], -1, "p.locus_params");
  }
  return sc;
}

Scene Scene::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SceneError("scene: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

std::string Scene::to_text() const {
  json j;
  j["dimension"] = dimension;
  j["backend"] = backend == Backend::exact ? "exact" : "float";
  j["norm"] = norm.str();
  if (tol != kDefaultRelTol) j["tolerance"] = tol;
  if (!description.empty()) j["description"] = description;
  json pts = json::object();
  for (const auto& [name, coords] : points) pts[name] = coords_to_json(coords);
  j["points"] = pts;
  j["triangle"] = {triangle_names[0], triangle_names[1], triangle_names[2]};
  if (p_coords) j["p"] = {{"coords", coords_to_json(*p_coords)}};
  if (p_locus) j["p"] = {{"locus_params", coords_to_json(*p_locus)}};
  return j.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
  }
  fs::rename(tmp, target);
}

}  // namespace ortho
