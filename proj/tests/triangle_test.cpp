// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "support.hpp"

using namespace ortho;
using ortho::test::dvec;
using ortho::test::R;
using ortho::test::rvec;
using ortho::test::worked_triangle;

TEST_SUITE("triangle") {
  TEST_CASE("construction rejects degenerate input") {
    CHECK_THROWS_AS(Triangle<Rational>(rvec({"0", "0"}), rvec({"1", "1"}), rvec({"2", "2"})),
                    GeometryError);
    CHECK_THROWS_AS(Triangle<Rational>(rvec({"0", "0"}), rvec({"0", "0"}), rvec({"1", "2"})),
                    GeometryError);
    CHECK_THROWS_AS(Triangle<Rational>(Vec<Rational>{R("1")}, Vec<Rational>{R("2")},
                                       Vec<Rational>{R("3")}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Triangle<Rational>(rvec({"0", "0"}), rvec({"1", "0", "0"}), rvec({"0", "1"})),
                    std::invalid_argument);
  }

  TEST_CASE("centroid") {
    Triangle<Rational> t(rvec({"0", "0"}), rvec({"1", "0"}), rvec({"0", "1"}));
    CHECK(centroid(t) == rvec({"1/3", "1/3"}));
    CHECK(centroid(worked_triangle()) == rvec({"2/3", "2/3", "0"}));

    // Translation equivariance.
    Vec<Rational> shift = rvec({"5", "-7", "1/3"});
    Triangle<Rational> w = worked_triangle();
    Triangle<Rational> moved(w.vertex(0) + shift, w.vertex(1) + shift, w.vertex(2) + shift);
    CHECK(centroid(moved) == centroid(w) + shift);
  }

  TEST_CASE("midpoints and the medial triangle") {
    auto m = midpoints(worked_triangle());
    CHECK(m[0] == rvec({"1", "1", "0"}));
    CHECK(m[1] == rvec({"0", "1", "0"}));
    CHECK(m[2] == rvec({"1", "0", "0"}));

    // M_i is the image of A_i under the homothety of ratio -1/2 about G.
    Triangle<Rational> w = worked_triangle();
    Homothety<Rational> h(centroid(w), R("-1/2"));
    for (std::size_t i = 0; i < 3; ++i) CHECK(homothety_apply(h, w.vertex(i)) == m[i]);

    // The medial triangle of the medial triangle keeps the centroid.
    Triangle<Rational> medial(m[0], m[1], m[2]);
    auto mm = midpoints(medial);
    Triangle<Rational> medial2(mm[0], mm[1], mm[2]);
    CHECK(centroid(medial2) == centroid(w));
  }

  TEST_CASE("in-plane circumcenter") {
    Triangle<Rational> right(rvec({"0", "0"}), rvec({"1", "0"}), rvec({"0", "1"}));
    auto oc = circumcenter_inplane(right);
    CHECK(oc.center == rvec({"1/2", "1/2"}));
    CHECK(oc.radius_sq == R("1/2"));

    auto worked = circumcenter_inplane(worked_triangle());
    CHECK(worked.center == rvec({"1", "1", "0"}));
    CHECK(worked.radius_sq == Rational(2));

    // Equilateral triangle on the float backend: symmetric about the origin.
    const double s = std::sqrt(3.0) / 2;
    Triangle<double> eq(dvec({1, 0}), dvec({-0.5, s}), dvec({-0.5, -s}));
    auto eo = circumcenter_inplane(eq);
    CHECK(std::abs(eo.center[0]) < 1e-12);
    CHECK(std::abs(eo.center[1]) < 1e-12);
    CHECK(eo.radius_sq == doctest::Approx(1.0));
    CHECK(eo.condition < 1e3);
  }

  TEST_CASE("in-plane circumcenter invariants (random, exact)") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 200; ++it) {
      InstanceParams ip{static_cast<int>(2 + uniform_u64(rng, 5)), 4, 6};
      Triangle<Rational> t = random_triangle(rng, ip);
      auto oc = circumcenter_inplane(t);
      // Equidistance.
      CHECK(norm_sq(oc.center - t.vertex(0)) == oc.radius_sq);
      CHECK(norm_sq(oc.center - t.vertex(1)) == oc.radius_sq);
      CHECK(norm_sq(oc.center - t.vertex(2)) == oc.radius_sq);
      // In-plane: O - A0 lies in the edge span.
      Matrix<Rational> edges = Matrix<Rational>::from_rows(
          {t.vertex(1) - t.vertex(0), t.vertex(2) - t.vertex(0), oc.center - t.vertex(0)});
      CHECK(rank(edges) == 2);

      // Q_O is the circumcenter of the medial triangle.
      Point<Rational> q_o = (t.vertex(0) + t.vertex(1) + t.vertex(2) - oc.center) / Rational(2);
      auto m = midpoints(t);
      CHECK(norm_sq(q_o - m[0]) == norm_sq(q_o - m[1]));
      CHECK(norm_sq(q_o - m[1]) == norm_sq(q_o - m[2]));
    }
  }

  TEST_CASE("circumlocus") {
    Triangle<Rational> right(rvec({"0", "0"}), rvec({"1", "0"}), rvec({"0", "1"}));
    CHECK(circumlocus(right).dim() == 0);

    AffineSubspace<Rational> locus = circumlocus(worked_triangle());
    CHECK(locus.dim() == 1);
    CHECK(locus.base() == rvec({"1", "1", "0"}));
    CHECK(locus.basis()[0] == rvec({"0", "0", "1"}));

    CHECK(locus_sample(locus, {Rational(0)}) == rvec({"1", "1", "0"}));
    CHECK(locus_sample(locus, {Rational(1)}) == rvec({"1", "1", "1"}));
    CHECK_THROWS_AS(locus_sample(locus, {}), std::invalid_argument);
  }

  TEST_CASE("locus dimension and sampled equidistance (random, exact)") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 120; ++it) {
      InstanceParams ip{static_cast<int>(2 + uniform_u64(rng, 5)), 4, 6};
      Triangle<Rational> t = random_triangle(rng, ip);
      AffineSubspace<Rational> locus = circumlocus(t);
      CHECK(locus.dim() == static_cast<std::size_t>(ip.dim) - 2);
      for (int s = 0; s < (ip.dim > 2 ? 20 : 1); ++s) {
        Point<Rational> p = locus_sample(locus, random_locus_params(rng, locus.dim(), ip));
        const Rational d0 = norm_sq(p - t.vertex(0));
        CHECK(d0 == norm_sq(p - t.vertex(1)));
        CHECK(d0 == norm_sq(p - t.vertex(2)));
      }
    }
  }

  TEST_CASE("n=4 locus has dimension 2") {
    Triangle<Rational> t(rvec({"0", "0", "0", "0"}), rvec({"2", "0", "0", "0"}),
                         rvec({"0", "2", "0", "0"}));
    AffineSubspace<Rational> locus = circumlocus(t);
    CHECK(locus.dim() == 2);
    // Basis vectors are orthogonal to both edges.
    for (const Vec<Rational>& b : locus.basis()) {
      CHECK(dot(b, t.vertex(1) - t.vertex(0)).is_zero());
      CHECK(dot(b, t.vertex(2) - t.vertex(0)).is_zero());
    }
  }

  TEST_CASE("sphere through P") {
    Triangle<Rational> w = worked_triangle();
    Sphere<Rational> s = sphere_through(w, rvec({"1", "1", "1"}));
    CHECK(s.radius_sq == Rational(3));
    CHECK(s.contains(rvec({"0", "0", "0"})));
    CHECK(s.contains(rvec({"2", "2", "2"})));  // antipode of A0
    CHECK_FALSE(s.contains(rvec({"1", "1", "0"})));

    // P = O gives the in-plane circumsphere.
    CHECK(sphere_through(w, rvec({"1", "1", "0"})).radius_sq == Rational(2));

    // Non-equidistant point: rejected with the three squared distances.
    try {
      sphere_through(w, rvec({"1", "2", "0"}));
      FAIL("expected GeometryError");
    } catch (const GeometryError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("5") != std::string::npos);
      CHECK(msg.find("1") != std::string::npos);
    }
  }

  TEST_CASE("float backend mirrors the exact circumcenter") {
    std::mt19937_64 rng(59);
    for (int it = 0; it < 100; ++it) {
      InstanceParams ip{3, 4, 6};
      Triangle<Rational> t = random_triangle(rng, ip);
      Triangle<double> tf(to_float(t.vertex(0)), to_float(t.vertex(1)), to_float(t.vertex(2)));
      auto exact = circumcenter_inplane(t);
      auto approx = circumcenter_inplane(tf);
      for (std::size_t i = 0; i < 3; ++i)
        CHECK(std::abs(approx.center[i] - exact.center[i].to_double()) <=
              1e-9 * std::max(1.0, std::abs(exact.center[i].to_double())));
      CHECK(std::abs(approx.radius_sq - exact.radius_sq.to_double()) <=
            1e-9 * std::max(1.0, exact.radius_sq.to_double()));
    }
  }
}
