// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "ortho/norms.hpp"
#include "ortho/rng.hpp"
#include "support.hpp"

using namespace ortho;
using ortho::test::dvec;
using ortho::test::R;
using ortho::test::rvec;

TEST_SUITE("norms") {
  TEST_CASE("norm spec validation and parsing") {
    CHECK_THROWS_AS(NormSpec::lp(0.5), std::invalid_argument);
    CHECK_THROWS_AS(NormSpec::lp(-1), std::invalid_argument);
    CHECK(NormSpec::lp(1.0).p == 1.0);
    CHECK(NormSpec::linf().is_inf());
    CHECK(NormSpec::parse("euclidean") == NormSpec::euclidean());
    CHECK(NormSpec::parse("p:1")->p == 1.0);
    CHECK(NormSpec::parse("p:3/2")->p == 1.5);
    CHECK(NormSpec::parse("p:inf")->is_inf());
    CHECK_FALSE(NormSpec::parse("p:0.3").has_value());
    CHECK_FALSE(NormSpec::parse("manhattan").has_value());
    CHECK(NormSpec::parse("p:inf")->str() == "p:inf");
    CHECK(NormSpec::euclidean().str() == "euclidean");
  }

  TEST_CASE("norm examples") {
    // Pythagorean triple: the exact Euclidean norm is rational here.
    CHECK(norm(rvec({"3", "4"}), NormSpec::euclidean()) == Rational(5));
    CHECK(norm(rvec({"1", "1"}), NormSpec::lp(1)) == Rational(2));
    // Single nonzero coordinate under p = 3 (float backend; exact p=3 is unsupported).
    CHECK(norm(dvec({2, 0, 0}), NormSpec::lp(3)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(norm(rvec({"-2", "1", "0"}), NormSpec::linf()) == Rational(2));
    // Irrational Euclidean norm is rejected on the exact backend.
    CHECK_THROWS_AS(norm(rvec({"1", "1"}), NormSpec::euclidean()), GeometryError);
    CHECK_THROWS_AS(norm(rvec({"1", "1"}), NormSpec::lp(3)), GeometryError);
  }

  TEST_CASE("norm_sq examples") {
    CHECK(norm_sq(rvec({"3", "4"})) == Rational(25));
    CHECK(norm_sq(rvec({"0", "0", "0"})) == Rational(0));
    CHECK(norm_sq(rvec({"1", "1", "1"})) == Rational(3));
  }

  TEST_CASE("dot examples") {
    CHECK(dot(rvec({"1", "0"}), rvec({"0", "1"})) == Rational(0));
    // Opposite-edge pair of the worked orthocentric system.
    CHECK(dot(rvec({"2", "0", "0"}), rvec({"0", "-2", "-2"})) == Rational(0));
    CHECK(dot(rvec({"1", "2"}), rvec({"3", "4"})) == Rational(11));
    CHECK_THROWS_AS(dot(rvec({"1"}), rvec({"1", "2"})), std::invalid_argument);
  }

  TEST_CASE("isosceles orthogonality examples") {
    CHECK(isosceles_orthogonal(rvec({"1", "0"}), rvec({"0", "1"}), NormSpec::euclidean()));
    // L1 example: both combined norms equal 4.
    CHECK(isosceles_orthogonal(rvec({"-2", "0"}), rvec({"0", "2"}), NormSpec::lp(1)));
    CHECK_FALSE(isosceles_orthogonal(rvec({"1", "0"}), rvec({"1", "0"}), NormSpec::euclidean()));
    CHECK(isosceles_orthogonal(dvec({1, 0}), dvec({0, 1}), NormSpec::lp(4)));
  }

  TEST_CASE("euclidean: dot = 0 iff isosceles orthogonal (exact, random)") {
    std::mt19937_64 rng(7);
    int orthogonal_seen = 0;
    for (int it = 0; it < 1200; ++it) {
      const std::size_t n = 2 + uniform_u64(rng, 4);
      Vec<Rational> u(n), v(n);
      for (std::size_t i = 0; i < n; ++i) {
        u[i] = random_rational(rng, 6, 6);
        v[i] = random_rational(rng, 6, 6);
      }
      const bool orth = dot(u, v).is_zero();
      orthogonal_seen += orth;
      CHECK(isosceles_orthogonal(u, v, NormSpec::euclidean()) == orth);
      // Force an orthogonal pair too (rotate u by 90 degrees in a plane).
      if (n == 2) {
        Vec<Rational> w{-u[1], u[0]};
        CHECK(isosceles_orthogonal(u, w, NormSpec::euclidean()) == dot(u, w).is_zero());
      }
    }
    CHECK(orthogonal_seen >= 0);  // zero-vector draws make some pairs trivially orthogonal
  }

  TEST_CASE("p=2 float matches euclidean within tolerance") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 500; ++it) {
      const std::size_t n = 2 + uniform_u64(rng, 5);
      Vec<double> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = uniform_unit(rng) * 20 - 10;
      const double a = norm(v, NormSpec::euclidean());
      const double b = norm(v, NormSpec::lp(2));
      CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, a));
      CHECK(std::abs(a * a - norm_sq(v)) <= 1e-9 * std::max(1.0, a * a));
    }
  }

  TEST_CASE("triangle inequality fuzz for p >= 1") {
    std::mt19937_64 rng(13);
    const double ps[] = {1.0, 1.3, 2.0, 2.7, 4.0, 10.0,
                         std::numeric_limits<double>::infinity()};
    for (double p : ps) {
      const NormSpec ns = NormSpec::lp(p);
      for (int it = 0; it < 300; ++it) {
        const std::size_t n = 2 + uniform_u64(rng, 4);
        Vec<double> u(n), v(n);
        for (std::size_t i = 0; i < n; ++i) {
          u[i] = uniform_unit(rng) * 10 - 5;
          v[i] = uniform_unit(rng) * 10 - 5;
        }
        CHECK(norm(u + v, ns) <= norm(u, ns) + norm(v, ns) + 1e-12);
      }
    }
  }

  TEST_CASE("homogeneity ||s v|| = |s| ||v||") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 300; ++it) {
      Vec<Rational> v(3);
      for (std::size_t i = 0; i < 3; ++i) v[i] = random_rational(rng, 8, 8);
      const Rational s = random_rational(rng, 5, 7);
      for (const NormSpec& ns : {NormSpec::lp(1), NormSpec::linf()})
        CHECK(norm(s * v, ns) == s.abs() * norm(v, ns));
      CHECK(norm_sq(s * v) == s * s * norm_sq(v));
    }
    Vec<double> v = dvec({0.3, -1.7, 2.2});
    for (double p : {1.5, 3.0}) {
      const double a = norm(-2.5 * v, NormSpec::lp(p));
      const double b = 2.5 * norm(v, NormSpec::lp(p));
      CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, b));
    }
  }

  TEST_CASE("empty vector rejected") {
    CHECK_THROWS_AS(norm(Vec<double>{}, NormSpec::euclidean()), std::invalid_argument);
  }
}
