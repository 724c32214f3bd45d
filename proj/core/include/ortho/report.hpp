// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "ortho/scene.hpp"

namespace ortho {

// Full pipeline for one scene: triangle -> locus -> P -> theorem battery.
// The document is JSON with sorted keys; identical scenes produce identical
// bytes. Scene and geometric precondition problems throw (SceneError /
// GeometryError); clause failures only lower all_pass.
struct AnalyzeOutcome {
  std::string document;
  bool all_pass = true;
};

AnalyzeOutcome analyze_scene(const Scene& scene);

// Parametrization of the circumcenter locus and of the orthocenter set (its
// image under X -> 3G - 2X). Euclidean norms only.
std::string locus_document(const Scene& scene);

// Labeled point sets and sphere surface samples for plotting; deterministic
// for fixed sample counts. Sphere sampling needs n in {2, 3}; higher
// dimensions emit points and the Euler line only.
std::string plotdata_document(const Scene& scene, long samples_per_sphere);

}  // namespace ortho
