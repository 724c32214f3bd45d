// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "ortho/errors.hpp"
#include "ortho/vec.hpp"

namespace ortho {

// Norm selector: the Euclidean norm or an l_p norm with 1 <= p <= inf.
// p = 2 evaluates like Euclidean (the float backend goes through the
// generic power sum, so the agreement is within tolerance, not bitwise).
struct NormSpec {
  enum class Kind { Euclidean, Lp };
  Kind kind = Kind::Euclidean;
  double p = 2.0;  // exponent when kind == Lp; may be +infinity

  static NormSpec euclidean() { return {}; }
  static NormSpec lp(double p);  // throws std::invalid_argument if p < 1 or NaN
  static NormSpec linf() { return lp(std::numeric_limits<double>::infinity()); }

  // "euclidean" | "p:<value>"; the value may be an integer, decimal, fraction
  // ("3/2") or "inf".
  static std::optional<NormSpec> parse(std::string_view text);
  std::string str() const;

  bool is_inf() const { return kind == Kind::Lp && std::isinf(p); }
  bool is_euclidean_like() const { return kind == Kind::Euclidean || (kind == Kind::Lp && p == 2.0); }
  bool strictly_convex() const { return is_euclidean_like() || (kind == Kind::Lp && p > 1.0 && !is_inf()); }

  bool operator==(const NormSpec&) const = default;
};

double norm(const Vec<double>& v, const NormSpec& ns);

// Exact backend. Supported exactly: p = 1, p = inf, and Euclidean/p = 2 when
// the squared norm is a perfect rational square. Everything else throws
// GeometryError; callers compare squared quantities instead.
Rational norm(const Vec<Rational>& v, const NormSpec& ns);

// Squared distance under ns: norm_sq for Euclidean, norm()^2 otherwise
// (exact for p in {1, inf} on rationals).
template <class S>
S dist_sq(const Point<S>& a, const Point<S>& b, const NormSpec& ns) {
  if (ns.is_euclidean_like()) return norm_sq(a - b);
  S n = norm(a - b, ns);
  return n * n;
}

// ||u - v|| = ||u + v|| under ns. Exact comparison of squared norms on the
// rational backend; on floats within rel_tol * max(1, ||u|| + ||v||).
template <class S>
bool isosceles_orthogonal(const Vec<S>& u, const Vec<S>& v, const NormSpec& ns,
                          double rel_tol = kDefaultRelTol) {
  detail::require_same_dim(u, v);
  if constexpr (ScalarTraits<S>::exact) {
    (void)rel_tol;
    if (ns.is_euclidean_like()) return norm_sq(u - v) == norm_sq(u + v);
    return norm(u - v, ns) == norm(u + v, ns);
  } else {
    const double lhs = norm(u - v, ns);
    const double rhs = norm(u + v, ns);
    const double scale = std::max(1.0, norm(u, ns) + norm(v, ns));
    return std::abs(lhs - rhs) <= rel_tol * scale;
  }
}

}  // namespace ortho
