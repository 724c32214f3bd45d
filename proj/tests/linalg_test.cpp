// SPDX-License-Identifier: Apache-2.0
#include "ortho/linalg.hpp"
#include "ortho/rng.hpp"
#include "support.hpp"

using namespace ortho;
using ortho::test::R;
using ortho::test::rvec;

TEST_SUITE("linalg") {
  TEST_CASE("rref and rank, exact") {
    Matrix<Rational> m = Matrix<Rational>::from_rows({rvec({"2", "0", "0"}), rvec({"0", "2", "0"})});
    CHECK(rank(m) == 2);
    auto pivots = rref(m);
    REQUIRE(pivots == std::vector<std::size_t>{0, 1});
    CHECK(m.at(0, 0) == Rational(1));
    CHECK(m.at(1, 1) == Rational(1));

    Matrix<Rational> dep = Matrix<Rational>::from_rows(
        {rvec({"1", "2", "3"}), rvec({"2", "4", "6"}), rvec({"1", "1", "1"})});
    CHECK(rank(dep) == 2);
  }

  TEST_CASE("nullspace of the worked edge matrix") {
    Matrix<Rational> m = Matrix<Rational>::from_rows({rvec({"2", "0", "0"}), rvec({"0", "2", "0"})});
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == rvec({"0", "0", "1"}));
  }

  TEST_CASE("nullspace vectors satisfy Mx = 0 (random, exact)") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 200; ++it) {
      const std::size_t rows = 1 + uniform_u64(rng, 3);
      const std::size_t cols = rows + uniform_u64(rng, 4);
      Matrix<Rational> m(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_rational(rng, 5, 6);
      auto basis = nullspace(m);
      CHECK(basis.size() == cols - rank(m));
      for (const Vec<Rational>& x : basis)
        for (std::size_t i = 0; i < rows; ++i) {
          Rational acc(0);
          for (std::size_t j = 0; j < cols; ++j) acc += m.at(i, j) * x[j];
          CHECK(acc.is_zero());
        }
    }
  }

  TEST_CASE("solve: consistent, inconsistent, underdetermined") {
    // x + y = 3, x - y = 1  ->  (2, 1)
    Matrix<Rational> m = Matrix<Rational>::from_rows({rvec({"1", "1"}), rvec({"1", "-1"})});
    auto x = solve(m, rvec({"3", "1"}));
    REQUIRE(x.has_value());
    CHECK(*x == rvec({"2", "1"}));

    // Overdetermined consistent: the worked altitude-style system.
    Matrix<Rational> tall = Matrix<Rational>::from_rows(
        {rvec({"1", "0"}), rvec({"0", "1"}), rvec({"1", "1"})});
    auto y = solve(tall, rvec({"2", "3", "5"}));
    REQUIRE(y.has_value());
    CHECK(*y == rvec({"2", "3"}));

    // Inconsistent.
    CHECK_FALSE(solve(tall, rvec({"2", "3", "6"})).has_value());

    // Underdetermined: free variables default to zero and still solve.
    Matrix<Rational> wide = Matrix<Rational>::from_rows({rvec({"1", "2", "0"})});
    auto z = solve(wide, Vec<Rational>{R("4")});
    REQUIRE(z.has_value());
    Rational acc = (*z)[0] + Rational(2) * (*z)[1];
    CHECK(acc == Rational(4));
  }

  TEST_CASE("float pivoting honors the relative threshold") {
    Matrix<double> m(2, 2);
    m.at(0, 0) = 1.0; m.at(0, 1) = 2.0;
    m.at(1, 0) = 2.0; m.at(1, 1) = 4.0 + 1e-14;  // numerically rank 1
    CHECK(rank(m, 1e-9) == 1);
    m.at(1, 1) = 4.1;
    CHECK(rank(m, 1e-9) == 2);

    Matrix<double> big(2, 2);
    big.at(0, 0) = 1e12; big.at(0, 1) = 2e12;
    big.at(1, 0) = 2e12; big.at(1, 1) = 4e12 + 1.0;  // tiny relative perturbation
    CHECK(rank(big, 1e-9) == 1);
  }

  TEST_CASE("float solve of a small system") {
    Matrix<double> m(2, 2);
    m.at(0, 0) = 3.0; m.at(0, 1) = 1.0;
    m.at(1, 0) = 1.0; m.at(1, 1) = 2.0;
    auto x = solve(m, Vec<double>{9.0, 8.0});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == doctest::Approx(2.0));
    CHECK((*x)[1] == doctest::Approx(3.0));
  }
}
