// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>

#include "ortho/rational.hpp"

namespace ortho {

// Default relative tolerance of the float backend. Comparisons scale by the
// largest operand magnitude (and never below 1), so the tolerance behaves
// relatively for large values and absolutely near zero.
inline constexpr double kDefaultRelTol = 1e-9;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static double to_double(const Rational& x) { return x.to_double(); }
  static Rational from_long(long n) { return Rational(n); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double to_double(double x) { return x; }
  static double from_long(long n) { return static_cast<double>(n); }
};

template <class S>
concept Scalar = ScalarTraits<S>::exact || !ScalarTraits<S>::exact;

// Backend equality: exact on rationals, relative on floats.
template <class S>
bool scalar_eq(const S& a, const S& b, double rel_tol = kDefaultRelTol) {
  if constexpr (ScalarTraits<S>::exact) {
    (void)rel_tol;
    return a == b;
  } else {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= rel_tol * scale;
  }
}

template <class S>
bool scalar_is_zero(const S& x, double rel_tol = kDefaultRelTol, double scale = 1.0) {
  if constexpr (ScalarTraits<S>::exact) {
    (void)rel_tol;
    (void)scale;
    return x.is_zero();
  } else {
    return std::abs(x) <= rel_tol * std::max(1.0, scale);
  }
}

// |a - b| / max(1, |a|, |b|), for diagnostics and achieved-tolerance reports.
template <class S>
double relative_deviation(const S& a, const S& b) {
  const double da = ScalarTraits<S>::to_double(a);
  const double db = ScalarTraits<S>::to_double(b);
  const double scale = std::max({1.0, std::abs(da), std::abs(db)});
  return std::abs(da - db) / scale;
}

}  // namespace ortho
