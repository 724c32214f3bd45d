// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ortho {

// Geometric precondition failures: degenerate input, a witness that is not
// equidistant, values the exact backend cannot represent. The message carries
// the offending quantities.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Outcome of an operation whose "no" answer is informative rather than a bug
// (orthocentricity recognition, altitude concurrency). Carries a diagnostic
// on failure.
template <class T>
struct Result {
  std::optional<T> value;
  std::string error;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }

  static Result success(T v) { return {std::move(v), {}}; }
  static Result failure(std::string why) { return {std::nullopt, std::move(why)}; }
};

}  // namespace ortho
