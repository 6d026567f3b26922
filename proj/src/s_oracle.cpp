// Independent construction of S^m_{w,n}: its defining expression evaluated
// pointwise, then exact interpolation. Shares no code with the closed-form
// coefficient expansion in period_poly.cpp beyond the scalar primitives.

#include <string>

#include "heckex/period_poly.hpp"

namespace heckex {

namespace {

std::vector<std::int64_t> signed_divisors(std::int64_t x) {
  std::vector<std::int64_t> out;
  const std::int64_t ax = x < 0 ? -x : x;
  for (std::int64_t a = 1; a <= ax; ++a) {
    if (ax % a == 0) {
      out.push_back(a);
      out.push_back(-a);
    }
  }
  return out;
}

}  // namespace

Rational S_defining_value(int w, int n, int m, std::int64_t h, std::int64_t k) {
  dim_cusp(w);
  if (n <= 0 || n >= w || n % 2 == 0 || m < 1)
    throw std::domain_error("S_defining_value: need odd 0<n<w and m>=1");
  if (h < 1 || k < 1) throw std::domain_error("S_defining_value: need h, k >= 1");

  const int nt = w - n;
  const Rational H(h), K(k);
  const Rational sign_n = (n % 2 == 0) ? Rational(1) : Rational(-1);

  // 1/2 sum over [[a,b],[c,d]] with ad - bc = m and abcd < 0 of
  // sgn(ab) (ak+bh)^{n~} (ck+dh)^n. abcd < 0 forces 0 < ad < m.
  Rational matrix_sum(0);
  for (std::int64_t mu = 1; mu <= m - 1; ++mu) {
    for (std::int64_t a : signed_divisors(mu)) {
      const std::int64_t d = mu / a;
      for (std::int64_t b : signed_divisors(mu - m)) {
        const std::int64_t c = (mu - m) / b;
        const int sgn_ab = (a > 0) == (b > 0) ? 1 : -1;
        matrix_sum += Rational(sgn_ab) * pow(Rational(a * k + b * h), nt) *
                      pow(Rational(c * k + d * h), n);
      }
    }
  }
  Rational value = matrix_sum / Rational(2);

  const Rational hw = pow(H, w);
  const Rational kw = pow(K, w);
  for (std::int64_t a = 1; a <= m; ++a) {
    if (m % a != 0) continue;
    const std::int64_t d = m / a;
    const Rational x = Rational(a) * K / H;  // ak/h
    const Rational y = Rational(a) * H / K;  // ah/k
    value += pow(Rational(d), nt) *
             (sign_n * bernoulli_poly(n + 1, x) * hw + bernoulli_poly(n + 1, y) * kw) /
             Rational(n + 1);
    value -= pow(Rational(d), n) *
             (bernoulli_poly(nt + 1, x) * hw + sign_n * bernoulli_poly(nt + 1, y) * kw) /
             Rational(nt + 1);
  }

  value += divisor_sigma(w + 1, m) * Rational(w + 2) / bernoulli_number(w + 2) *
           bernoulli_number(n + 1) / Rational(n + 1) * bernoulli_number(nt + 1) /
           Rational(nt + 1) * (hw - kw);
  return value;
}

HomogPoly build_S_oracle(int w, int n, int m) {
  // f(1, t) = sum_nu a_nu t^{w-nu}; one row per node t = 1..w+1.
  const int size = w + 1;
  RationalMatrix vandermonde(size, size);
  RationalVector values(size);
  for (int row = 0; row < size; ++row) {
    const std::int64_t t = row + 1;
    for (int nu = 0; nu <= w; ++nu) vandermonde(row, nu) = pow(Rational(t), w - nu);
    values(row) = S_defining_value(w, n, m, 1, t);
  }
  auto solution = solve_exact(vandermonde, values);
  if (!solution) throw std::logic_error("build_S_oracle: singular Vandermonde system");
  return HomogPoly(w, RationalVector(solution->col(0)));
}

}  // namespace heckex
