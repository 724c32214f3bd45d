// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ortho/scalar.hpp"

namespace ortho {

// Coordinate tuple in R^n over a pluggable scalar. Points and vectors share
// the representation; the vector from A to B is B - A.
template <class S>
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : c_(n, S(0)) {}
  Vec(std::initializer_list<S> xs) : c_(xs) {}
  explicit Vec(std::vector<S> xs) : c_(std::move(xs)) {}

  std::size_t dim() const { return c_.size(); }
  S& operator[](std::size_t i) { return c_[i]; }
  const S& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<S>& coords() const { return c_; }

  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool operator==(const Vec&) const = default;

 private:
  std::vector<S> c_;
};

template <class S>
using Point = Vec<S>;

namespace detail {
template <class S>
void require_same_dim(const Vec<S>& a, const Vec<S>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("vector dimension mismatch");
}
}  // namespace detail

template <class S>
Vec<S> operator+(const Vec<S>& a, const Vec<S>& b) {
  detail::require_same_dim(a, b);
  Vec<S> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class S>
Vec<S> operator-(const Vec<S>& a, const Vec<S>& b) {
  detail::require_same_dim(a, b);
  Vec<S> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class S>
Vec<S> operator-(const Vec<S>& a) {
  Vec<S> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = -a[i];
  return r;
}

template <class S>
Vec<S> operator*(const S& s, const Vec<S>& v) {
  Vec<S> r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = s * v[i];
  return r;
}

template <class S>
Vec<S> operator*(const Vec<S>& v, const S& s) {
  return s * v;
}

template <class S>
Vec<S> operator/(const Vec<S>& v, const S& s) {
  Vec<S> r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = v[i] / s;
  return r;
}

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
  detail::require_same_dim(a, b);
  S r(0);
  for (std::size_t i = 0; i < a.dim(); ++i) r += a[i] * b[i];
  return r;
}

// Sum of squared coordinates; exact on the rational backend. Distances under
// the Euclidean norm are compared through this to avoid square roots.
template <class S>
S norm_sq(const Vec<S>& v) {
  return dot(v, v);
}

template <class S>
Point<S> midpoint(const Point<S>& a, const Point<S>& b) {
  return (a + b) / S(2);
}

template <class S>
bool is_zero_vec(const Vec<S>& v, double rel_tol = kDefaultRelTol, double scale = 1.0) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!scalar_is_zero(v[i], rel_tol, scale)) return false;
  return true;
}

template <class S>
bool vec_eq(const Vec<S>& a, const Vec<S>& b, double rel_tol = kDefaultRelTol) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!scalar_eq(a[i], b[i], rel_tol)) return false;
  return true;
}

inline Vec<double> to_float(const Vec<Rational>& v) {
  Vec<double> r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = v[i].to_double();
  return r;
}

inline Vec<Rational> to_exact(const Vec<double>& v) {
  Vec<Rational> r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = Rational::from_double(v[i]);
  return r;
}

}  // namespace ortho
