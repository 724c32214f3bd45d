// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace ortho {

// Arbitrary-precision rational, kept canonical (den > 0, gcd(num, den) = 1).
// Arithmetic never rounds and operator== is decidable value equality.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}    // NOLINT: implicit on purpose, literal convenience
  Rational(long n) : q_(n) {}   // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "7", "-3/4", "1.25", "2e-3". Decimal forms are read as exact
  // decimal fractions, not as doubles. Returns nullopt on malformed input
  // or a zero denominator.
  static std::optional<Rational> parse(std::string_view text);

  // The exact value of the binary double (throws std::invalid_argument for
  // non-finite x).
  static Rational from_double(double x);

  // Best continued-fraction convergent with denominator <= max_den.
  static Rational approximate(double x, std::int64_t max_den);

  double to_double() const { return q_.get_d(); }
  std::string str() const { return q_.get_str(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Rational abs() const { return raw(::abs(q_)); }
  Rational reciprocal() const;

  // Exact square root when numerator and denominator are both perfect
  // squares; nullopt otherwise (the value is irrational).
  std::optional<Rational> sqrt_exact() const;

  const mpq_class& mpq() const { return q_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return raw(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return raw(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return raw(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return raw(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  // Wraps an mpq_class already known to be canonical (results of mpq
  // arithmetic on canonical operands stay canonical).
  static Rational raw(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace ortho
