// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "ortho/rational.hpp"

namespace ortho {

// Reproducibility helpers over std::mt19937_64. The <random> distributions
// are implementation-defined, so everything feeding byte-identical output
// maps the raw 64-bit draws itself.

inline std::uint64_t uniform_u64(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_u64: zero bound");
  const std::uint64_t min = (0 - bound) % bound;  // 2^64 mod bound
  std::uint64_t x;
  do {
    x = rng();
  } while (x < min);
  return x % bound;
}

// Inclusive range.
inline std::int64_t uniform_i64(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_i64: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(uniform_u64(rng, span));
}

inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// num/den with den in [1, max_den] and |value| <= bound.
inline Rational random_rational(std::mt19937_64& rng, long bound, long max_den) {
  const long den = static_cast<long>(uniform_i64(rng, 1, max_den));
  const long num = static_cast<long>(uniform_i64(rng, -bound * den, bound * den));
  return Rational(num, den);
}

}  // namespace ortho
