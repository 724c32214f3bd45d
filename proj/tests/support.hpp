// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <string_view>

#include "doctest.h"
#include "ortho/instances.hpp"

namespace ortho::test {

inline Rational R(std::string_view s) {
  auto r = Rational::parse(s);
  REQUIRE_MESSAGE(r.has_value(), "bad rational literal");
  return *r;
}

inline Vec<Rational> rvec(std::initializer_list<std::string_view> xs) {
  Vec<Rational> v(xs.size());
  std::size_t i = 0;
  for (std::string_view s : xs) v[i++] = R(s);
  return v;
}

inline Vec<double> dvec(std::initializer_list<double> xs) { return Vec<double>(xs); }

inline Triangle<Rational> worked_triangle() {
  return Triangle<Rational>(rvec({"0", "0", "0"}), rvec({"2", "0", "0"}), rvec({"0", "2", "0"}));
}

inline Point<Rational> worked_p() { return rvec({"1", "1", "1"}); }

}  // namespace ortho::test
