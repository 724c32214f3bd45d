// SPDX-License-Identifier: Apache-2.0
#include "ortho/generate.hpp"

#include <stdexcept>

#include "ortho/instances.hpp"

namespace ortho {

std::vector<Scene> generate_scenes(const GenerateConfig& cfg) {
  if (cfg.dimension < 2) throw std::invalid_argument("generate: dimension must be >= 2");
  if (cfg.count < 1) throw std::invalid_argument("generate: count must be >= 1");
  if (cfg.bound < 1) throw std::invalid_argument("generate: bound must be >= 1");
  if (cfg.max_den < 1) throw std::invalid_argument("generate: max_den must be >= 1");

  std::mt19937_64 rng(cfg.seed);
  InstanceParams ip{cfg.dimension, cfg.bound, cfg.max_den};

  std::vector<Scene> out;
  out.reserve(static_cast<std::size_t>(cfg.count));
  for (int i = 0; i < cfg.count; ++i) {
    Triangle<Rational> tri = random_triangle(rng, ip);
    const std::size_t locus_dim = static_cast<std::size_t>(cfg.dimension - 2);
    std::vector<Rational> params = random_locus_params(rng, locus_dim, ip);

    Scene sc;
    sc.dimension = cfg.dimension;
    sc.backend = Scene::Backend::exact;
    sc.norm = NormSpec::euclidean();
    sc.description = "seeded instance " + std::to_string(i);
    for (std::size_t v = 0; v < 3; ++v)
      sc.points["A" + std::to_string(v)] = tri.vertex(v).coords();
    sc.triangle_names = {"A0", "A1", "A2"};
    if (locus_dim > 0) sc.p_locus = params;
    sc.source_text = sc.to_text();
    out.push_back(std::move(sc));
  }
  return out;
}

}  // namespace ortho
