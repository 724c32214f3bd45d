// SPDX-License-Identifier: Apache-2.0
#include "ortho/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ortho {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational::raw(mpq_class(a.q_ / b.q_));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return raw(std::move(r));
}

std::optional<Rational> Rational::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  const mpz_class& num = q_.get_num();
  const mpz_class& den = q_.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return raw(mpq_class(sn, sd));  // canonical: gcd(sn, sd) = 1 since gcd(num, den) = 1
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("Rational::from_double: non-finite value");
  return Rational(mpq_class(x));
}

Rational Rational::approximate(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("Rational::approximate: non-finite value");
  if (max_den < 1) throw std::invalid_argument("Rational::approximate: max_den < 1");

  // Continued-fraction convergents p_k/q_k; stop before the denominator
  // exceeds max_den.
  mpz_class p_prev = 1, q_prev = 0;
  double a0 = std::floor(x);
  mpz_class p_cur(a0), q_cur = 1;
  double rem = x - a0;
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(rem) < 1e-15 * std::max(1.0, std::abs(x))) break;
    double inv = 1.0 / rem;
    double a = std::floor(inv);
    if (a > 9e18) break;
    mpz_class ai(a);
    mpz_class p_next = ai * p_cur + p_prev;
    mpz_class q_next = ai * q_cur + q_prev;
    if (q_next > max_den) break;
    p_prev = p_cur; q_prev = q_cur;
    p_cur = p_next; q_cur = q_next;
    rem = inv - a;
  }
  return Rational(mpq_class(p_cur, q_cur));
}

namespace {

bool parse_decimal(std::string_view text, mpq_class* out) {
  // [sign] digits [. digits] [ (e|E) [sign] digits ]
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_len = 0;
  bool any = false;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    digits += text[i];
    any = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      digits += text[i];
      ++frac_len;
      any = true;
    }
  }
  if (!any) return false;
  long exp10 = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      eneg = text[i] == '-';
      ++i;
    }
    if (i == text.size()) return false;
    long e = 0;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      e = e * 10 + (text[i] - '0');
      if (e > 100000) return false;
    }
    exp10 = eneg ? -e : e;
  }
  if (i != text.size()) return false;

  mpz_class mant(digits.empty() ? "0" : digits);
  if (neg) mant = -mant;
  long shift = exp10 - frac_len;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpq_class q = shift < 0 ? mpq_class(mant, pow10) : mpq_class(mant * pow10);
  q.canonicalize();
  *out = q;
  return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view ns = text.substr(0, slash);
    std::string_view ds = text.substr(slash + 1);
    if (ns.empty() || ds.empty() || ds.find('/') != std::string_view::npos) return std::nullopt;
    mpz_class num, den;
    if (mpz_set_str(num.get_mpz_t(), std::string(ns).c_str(), 10) != 0) return std::nullopt;
    if (mpz_set_str(den.get_mpz_t(), std::string(ds).c_str(), 10) != 0) return std::nullopt;
    if (den == 0) return std::nullopt;
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  }
  if (text.find('.') != std::string_view::npos || text.find('e') != std::string_view::npos ||
      text.find('E') != std::string_view::npos) {
    mpq_class q;
    if (!parse_decimal(text, &q)) return std::nullopt;
    return Rational(q);
  }
  mpz_class n;
  if (mpz_set_str(n.get_mpz_t(), std::string(text).c_str(), 10) != 0) return std::nullopt;
  return Rational(mpq_class(n));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ortho
