// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ortho/norms.hpp"

namespace ortho {

// Malformed scene documents: parse errors with field diagnostics and
// semantic failures (unresolved names, wrong lengths). CLI maps these to the
// usage exit status.
class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Declarative instance description. Coordinates are carried as exact
// rationals regardless of backend ("num/den" strings and decimals parse
// exactly; JSON numbers convert through their exact binary value); the float
// backend rounds once at the boundary.
struct Scene {
  enum class Backend { exact, floating };

  int dimension = 0;
  Backend backend = Backend::exact;
  NormSpec norm;
  double tol = kDefaultRelTol;
  std::string description;

  std::map<std::string, std::vector<Rational>> points;
  std::array<std::string, 3> triangle_names;

  // Optional equidistant point: explicit coordinates or locus parameters
  // (length n-2, Euclidean backends). Absent: the in-plane circumcenter for
  // Euclidean norms, a solver run for float p-norms.
  std::optional<std::vector<Rational>> p_coords;
  std::optional<std::vector<Rational>> p_locus;

  std::string source_text;  // original document, echoed in reports

  static Scene from_text(const std::string& text);
  static Scene load_file(const std::string& path);
  std::string to_text() const;  // canonical serialization (sorted keys)

  const std::vector<Rational>& vertex(std::size_t i) const;
};

// Atomic write: temp file in the target directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace ortho
