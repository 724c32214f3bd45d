// SPDX-License-Identifier: Apache-2.0
#include "ortho/norms.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ortho {

NormSpec NormSpec::lp(double p) {
  if (std::isnan(p) || p < 1.0) throw std::invalid_argument("NormSpec: p must satisfy p >= 1");
  NormSpec ns;
  ns.kind = Kind::Lp;
  ns.p = p;
  return ns;
}

std::optional<NormSpec> NormSpec::parse(std::string_view text) {
  if (text == "euclidean") return euclidean();
  if (text.rfind("p:", 0) != 0) return std::nullopt;
  std::string_view val = text.substr(2);
  if (val == "inf" || val == "infinity") return linf();
  auto r = Rational::parse(val);
  if (!r) return std::nullopt;
  double p = r->to_double();
  if (std::isnan(p) || p < 1.0) return std::nullopt;
  return lp(p);
}

std::string NormSpec::str() const {
  if (kind == Kind::Euclidean) return "euclidean";
  if (is_inf()) return "p:inf";
  std::ostringstream os;
  os << "p:" << p;
  return os.str();
}

double norm(const Vec<double>& v, const NormSpec& ns) {
  if (v.dim() == 0) throw std::invalid_argument("norm: empty vector");
  if (ns.kind == NormSpec::Kind::Euclidean) return std::sqrt(norm_sq(v));
  if (ns.is_inf()) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  if (ns.p == 1.0) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
  }
  // Scale by the max to keep pow() away from overflow/underflow.
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x) / m, ns.p);
  return m * std::pow(s, 1.0 / ns.p);
}

Rational norm(const Vec<Rational>& v, const NormSpec& ns) {
  if (v.dim() == 0) throw std::invalid_argument("norm: empty vector");
  if (ns.is_euclidean_like()) {
    auto root = norm_sq(v).sqrt_exact();
    if (!root)
      throw GeometryError(
          "norm: Euclidean norm is irrational on the exact backend; compare squared norms");
    return *root;
  }
  if (ns.is_inf()) {
    Rational m(0);
    for (const Rational& x : v) {
      Rational a = x.abs();
      if (a > m) m = a;
    }
    return m;
  }
  if (ns.p == 1.0) {
    Rational s(0);
    for (const Rational& x : v) s += x.abs();
    return s;
  }
  std::ostringstream os;
  os << "norm: exact backend supports p in {1, 2, inf}; got " << ns.str()
     << " (use the float backend)";
  throw GeometryError(os.str());
}

}  // namespace ortho
