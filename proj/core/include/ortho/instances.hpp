// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "ortho/rng.hpp"
#include "ortho/triangle.hpp"

namespace ortho {

// Knobs for random rational instances. Small denominators keep the exact
// arithmetic fast and bound the conditioning of the float mirror: nonzero
// 2x2 minors of grid rationals are bounded away from zero.
struct InstanceParams {
  int dim = 3;
  long bound = 4;
  long max_den = 8;
};

inline Point<Rational> random_rational_point(std::mt19937_64& rng, const InstanceParams& ip) {
  Point<Rational> p(static_cast<std::size_t>(ip.dim));
  for (int i = 0; i < ip.dim; ++i) p[i] = random_rational(rng, ip.bound, ip.max_den);
  return p;
}

// Rejection-samples until the three vertices are affinely independent.
inline Triangle<Rational> random_triangle(std::mt19937_64& rng, const InstanceParams& ip) {
  for (;;) {
    Point<Rational> a = random_rational_point(rng, ip);
    Point<Rational> b = random_rational_point(rng, ip);
    Point<Rational> c = random_rational_point(rng, ip);
    if (vec_eq(a, b) || vec_eq(a, c) || vec_eq(b, c)) continue;
    if (collinear<Rational>({a, b, c})) continue;
    return Triangle<Rational>(std::move(a), std::move(b), std::move(c));
  }
}

inline std::vector<Rational> random_locus_params(std::mt19937_64& rng, std::size_t k,
                                                 const InstanceParams& ip) {
  std::vector<Rational> params(k);
  for (std::size_t i = 0; i < k; ++i) params[i] = random_rational(rng, ip.bound, ip.max_den);
  return params;
}

// A random equidistant point: the in-plane circumcenter shifted along the
// locus directions by random rational parameters (exactly equidistant by
// construction).
inline Point<Rational> random_locus_point(std::mt19937_64& rng, const Triangle<Rational>& t,
                                          const InstanceParams& ip) {
  AffineSubspace<Rational> locus = circumlocus(t);
  return locus_sample(locus, random_locus_params(rng, locus.dim(), ip));
}

}  // namespace ortho
