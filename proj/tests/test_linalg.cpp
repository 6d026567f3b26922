#include <doctest.h>

#include <random>

#include "heckex/linalg.hpp"

using namespace heckex;

namespace {

// cofactor expansion along the first row
Rational det_cofactor(const RationalMatrix& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return a(0, 0);
  Rational acc(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    RationalMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    const Rational term = a(0, j) * det_cofactor(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

RationalMatrix random_matrix(std::mt19937& rng, Eigen::Index n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  RationalMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Rational(num(rng), den(rng));
  return a;
}

Rational eval_ascending(const std::vector<Rational>& c, const Rational& x) {
  Rational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

TEST_CASE("solve_exact on a small system") {
  RationalMatrix a(2, 2);
  a << Rational(2), Rational(1), Rational(1), Rational(3);
  RationalMatrix b(2, 1);
  b << Rational(3), Rational(5);
  const auto x = solve_exact(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)(0, 0) == Rational(4, 5));
  CHECK((*x)(1, 0) == Rational(7, 5));
}

TEST_CASE("solve_exact needs row swaps") {
  RationalMatrix a(3, 3);
  a << Rational(0), Rational(1), Rational(0), Rational(1), Rational(0), Rational(0), Rational(0),
      Rational(0), Rational(2);
  const auto inv = solve_exact(a, RationalMatrix::Identity(3, 3));
  REQUIRE(inv.has_value());
  CHECK(exactly_equal(a * *inv, RationalMatrix::Identity(3, 3)));
}

TEST_CASE("solve_exact reports singular and malformed input") {
  RationalMatrix a(2, 2);
  a << Rational(1), Rational(2), Rational(2), Rational(4);
  CHECK_FALSE(solve_exact(a, RationalMatrix::Identity(2, 2)).has_value());
  CHECK_FALSE(solve_exact(RationalMatrix(2, 3), RationalMatrix(2, 1)).has_value());
  CHECK_FALSE(solve_exact(RationalMatrix::Identity(2, 2), RationalMatrix(3, 1)).has_value());
}

TEST_CASE("solve_exact round trip on random systems") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 1 + trial % 6;
    const RationalMatrix a = random_matrix(rng, n);
    const RationalMatrix b = random_matrix(rng, n);
    const auto x = solve_exact(a, b);
    if (det_cofactor(a) == 0) {
      CHECK_FALSE(x.has_value());
    } else {
      REQUIRE(x.has_value());
      CHECK(exactly_equal(a * *x, b));
    }
  }
}

TEST_CASE("trace") {
  RationalMatrix a(2, 2);
  a << Rational(1, 2), Rational(9), Rational(-3), Rational(1, 3);
  CHECK(trace(a) == Rational(5, 6));
  CHECK(trace(RationalMatrix(0, 0)) == 0);
  CHECK_THROWS_AS(trace(RationalMatrix(2, 3)), std::domain_error);
}

TEST_CASE("characteristic polynomial, small cases") {
  RationalMatrix one(1, 1);
  one << Rational(-24);
  CHECK(char_poly_coeffs(one) == std::vector<Rational>{Rational(24), Rational(1)});
  CHECK(char_poly_coeffs(RationalMatrix(0, 0)) == std::vector<Rational>{Rational(1)});
  CHECK_THROWS_AS(char_poly_coeffs(RationalMatrix(1, 2)), std::domain_error);

  // x^2 - tr x + det
  RationalMatrix two(2, 2);
  two << Rational(3), Rational(1, 2), Rational(-4), Rational(7);
  const auto c = char_poly_coeffs(two);
  REQUIRE(c.size() == 3);
  CHECK(c[2] == 1);
  CHECK(c[1] == -trace(two));
  CHECK(c[0] == det_cofactor(two));
}

TEST_CASE("characteristic polynomial agrees with det(xI - M)") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 1 + trial % 5;
    const RationalMatrix a = random_matrix(rng, n);
    const auto c = char_poly_coeffs(a);
    REQUIRE(c.size() == static_cast<std::size_t>(n) + 1);
    for (int xi = -3; xi <= 3; ++xi) {
      const Rational x(xi, 2);
      const RationalMatrix shifted = x * RationalMatrix::Identity(n, n) - a;
      CHECK(eval_ascending(c, x) == det_cofactor(shifted));
    }
  }
}
