// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ortho/scene.hpp"

namespace ortho {

// Reproducible random rational scenes: identical configuration, identical
// bytes. Triangles are rejection-sampled until affinely independent, and P
// comes from random locus parameters (so it is exactly equidistant).
struct GenerateConfig {
  std::uint64_t seed = 0;
  int dimension = 3;
  int count = 1;
  long bound = 4;    // coordinates in [-bound, bound] (rational grid)
  long max_den = 8;  // denominators in [1, max_den]
};

std::vector<Scene> generate_scenes(const GenerateConfig& cfg);

}  // namespace ortho
