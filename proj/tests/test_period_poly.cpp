#include <doctest.h>

#include <random>

#include "heckex/period_poly.hpp"

using namespace heckex;

namespace {

HomogPoly random_poly(std::mt19937& rng, int w) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  HomogPoly f(w);
  for (int nu = 0; nu <= w; ++nu) f[nu] = Rational(num(rng), den(rng));
  return f;
}

}  // namespace

TEST_CASE("cusp dimension and basis exponents") {
  CHECK(dim_cusp(10) == 1);
  CHECK(dim_cusp(12) == 0);
  CHECK(dim_cusp(28) == 2);
  CHECK(dim_cusp(2) == 0);
  CHECK_THROWS_AS(dim_cusp(11), std::domain_error);
  CHECK_THROWS_AS(dim_cusp(0), std::domain_error);

  CHECK(basis_exponents(28).exponents == std::vector<int>{5, 9});
  CHECK(basis_exponents(10).exponents == std::vector<int>{3});
  CHECK(basis_exponents(12).exponents.empty());

  // exponents are odd, below w, one per dimension
  for (int w = 2; w <= 120; w += 2) {
    const BasisSpec b = basis_exponents(w);
    CHECK(static_cast<int>(b.exponents.size()) == b.dim);
    for (int n : b.exponents) {
      CHECK(n % 2 == 1);
      CHECK(n < w);
    }
  }
}

TEST_CASE("inner product") {
  const int w = 8;
  HomogPoly hw = HomogPoly::monomial(w, w);
  CHECK(inner_product(hw, hw) == 1);
  HomogPoly plus = hw + HomogPoly::monomial(w, 0);
  CHECK(inner_product(h_minus_k_power(w), plus) == 0);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const HomogPoly f = random_poly(rng, w), g = random_poly(rng, w), e = random_poly(rng, w);
    const Rational a(trial - 25, 7);
    CHECK(inner_product(f, g) == inner_product(g, f));
    CHECK(inner_product(a * f + e, g) == a * inner_product(f, g) + inner_product(e, g));
  }
  CHECK_THROWS_AS(inner_product(HomogPoly(4), HomogPoly(6)), std::domain_error);
}

TEST_CASE("<S_{10,3}, S_{10,3}> is the sum of squared coefficients") {
  const HomogPoly s = build_S(10, 3, 1);
  const HomogPoly s1 = build_S_level_one(10, 3);
  Rational squares(0);
  for (int nu = 0; nu <= 10; ++nu) squares += s1[nu] * s1[nu];
  CHECK(inner_product(s, s) == squares);
  CHECK(squares > 0);
}

TEST_CASE("linear substitution") {
  const HomogPoly f = HomogPoly::monomial(2, 1);  // h k
  HomogPoly expected(2);
  expected[1] = 1;
  expected[0] = 1;
  CHECK(substitute_linear(f, LinearMap{1, 1, 0, 1}) == expected);

  std::mt19937 rng(5);
  for (int w : {2, 6, 10, 20}) {
    const HomogPoly g = random_poly(rng, w);
    CHECK(substitute_linear(g, LinearMap{}) == g);
    const LinearMap flip{1, 0, 0, -1};
    CHECK(substitute_linear(substitute_linear(g, flip), flip) == g);
    const HomogPoly flipped = substitute_linear(g, flip);
    for (int nu = 0; nu <= w; ++nu) CHECK(flipped[nu] == ((w - nu) % 2 ? -g[nu] : g[nu]));

    // agrees with evaluation at the substituted point
    const LinearMap map{2, -1, 3, 5};
    const HomogPoly sub = substitute_linear(g, map);
    for (int x = -2; x <= 2; ++x)
      for (int y = -2; y <= 2; ++y)
        CHECK(sub(Rational(x), Rational(y)) == g(Rational(2 * x - y), Rational(3 * x + 5 * y)));
  }
}

TEST_CASE("U_w membership and parity on fixtures") {
  for (int w : {4, 10, 28}) {
    CHECK(is_in_U(h_minus_k_power(w)));
    CHECK_FALSE(is_in_U(HomogPoly::monomial(w, w) + HomogPoly::monomial(w, 0)));
    CHECK(parity(h_minus_k_power(w)) == Parity::Even);
    CHECK(parity(HomogPoly::monomial(w, w - 1)) == Parity::Odd);
    CHECK(parity(HomogPoly::monomial(w, w - 1) + HomogPoly::monomial(w, w)) == Parity::Neither);
    CHECK(parity(HomogPoly(w)) == Parity::Even);
  }
}

TEST_CASE("closed form matches the defining-sum oracle") {
  // spot cases first
  CHECK(build_S(10, 3, 1) == build_S_oracle(10, 3, 1));
  CHECK(build_S(10, 3, 2) == build_S_oracle(10, 3, 2));
  CHECK(build_S(14, 3, 4) == build_S_oracle(14, 3, 4));

  for (int w = 10; w <= 40; w += 2) {
    for (int n : basis_exponents(w).exponents) {
      for (int m = 1; m <= 6; ++m) {
        CAPTURE(w);
        CAPTURE(n);
        CAPTURE(m);
        CHECK(build_S(w, n, m) == build_S_oracle(w, n, m));
      }
    }
  }
}

TEST_CASE("build_S lies in U_w and is even") {
  for (int w = 10; w <= 40; w += 2) {
    for (int n : basis_exponents(w).exponents) {
      for (int m = 1; m <= 6; ++m) {
        CAPTURE(w);
        CAPTURE(n);
        CAPTURE(m);
        const HomogPoly s = build_S(w, n, m);
        CHECK(s(Rational(1), Rational(1)) == 0);
        CHECK(is_in_U(s));
        CHECK(parity(s) == Parity::Even);
        CHECK_FALSE(s.is_zero());
      }
    }
  }
}

TEST_CASE("level-one specialization") {
  for (int w = 4; w <= 60; w += 2)
    for (int n = 1; n < w; n += 2) {
      CAPTURE(w);
      CAPTURE(n);
      CHECK(build_S_level_one(w, n) == build_S(w, n, 1));
    }
}

TEST_CASE("defining value at interpolation nodes") {
  const HomogPoly s = build_S(14, 3, 4);
  for (int h = 1; h <= 3; ++h)
    for (int k = 1; k <= 3; ++k) CHECK(S_defining_value(14, 3, 4, h, k) == s(Rational(h), Rational(k)));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(build_S(10, 2, 1), std::domain_error);
  CHECK_THROWS_AS(build_S(10, 0, 1), std::domain_error);
  CHECK_THROWS_AS(build_S(10, 11, 1), std::domain_error);
  CHECK_THROWS_AS(build_S(10, 3, 0), std::domain_error);
  CHECK_THROWS_AS(build_S(9, 3, 1), std::domain_error);
  CHECK_THROWS_AS(build_S_level_one(10, 4), std::domain_error);
  CHECK_THROWS_AS(HomogPoly(3), std::domain_error);
}
