#include "heckex/period_poly.hpp"

#include <algorithm>
#include <string>

namespace heckex {

const char* to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Neither: return "neither";
  }
  return "?";
}

int dim_cusp(int w) {
  if (w < 2 || w % 2 != 0)
    throw std::domain_error("weight parameter w must be even and >= 2 (got " +
                            std::to_string(w) + ")");
  const int q = (w + 2) / 12;
  return w % 12 == 0 ? q - 1 : q;
}

BasisSpec basis_exponents(int w) {
  BasisSpec spec;
  spec.w = w;
  spec.dim = dim_cusp(w);
  const int offset = w % 4 == 0 ? 1 : -1;
  for (int i = 1; i <= spec.dim; ++i) spec.exponents.push_back(4 * i + offset);
  return spec;
}

HomogPoly h_minus_k_power(int w) {
  HomogPoly f(w);
  f[w] = Rational(1);
  f[0] = Rational(-1);
  return f;
}

namespace {

void check_odd_exponent(int w, int n, int m) {
  dim_cusp(w);
  if (n <= 0 || n >= w)
    throw std::domain_error("exponent n must satisfy 0 < n < w (got n=" + std::to_string(n) + ")");
  if (n % 2 == 0)
    throw std::domain_error("exponent n must be odd (got n=" + std::to_string(n) + ")");
  if (m < 1) throw std::domain_error("m must be positive (got m=" + std::to_string(m) + ")");
}

Rational q(const BigInt& x) { return Rational(x); }

// sigma_{w+1}(m) (w+2)/B_{w+2} B_{n+1}/(n+1) B_{n~+1}/(n~+1)
Rational correction_constant(int w, int n, int m) {
  const int nt = w - n;
  return divisor_sigma(w + 1, m) * Rational(w + 2) / bernoulli_number(w + 2) *
         bernoulli_number(n + 1) / Rational(n + 1) * bernoulli_number(nt + 1) /
         Rational(nt + 1);
}

}  // namespace

HomogPoly build_S(int w, int n, int m) {
  check_odd_exponent(w, n, m);
  const int nt = w - n;
  const Rational sign_n = (n % 2 == 0) ? Rational(1) : Rational(-1);
  HomogPoly f(w);

  // Hecke part: 2 sum over even nu of
  //   sum_{mu=1}^{m-1} sum_lambda mu^lambda (mu-m)^{n-lambda} C(n~, nu-lambda) C(n, lambda)
  //                    sigma_{n~-nu}(mu) sigma_{nu-n}(m-mu)
  for (int nu = 0; nu <= w; nu += 2) {
    Rational acc(0);
    for (int mu = 1; mu <= m - 1; ++mu) {
      const Rational sig = divisor_sigma(nt - nu, mu) * divisor_sigma(nu - n, m - mu);
      const int lo = std::max(0, nu - nt);
      const int hi = std::min(n, nu);
      for (int lambda = lo; lambda <= hi; ++lambda) {
        acc += pow(Rational(mu), lambda) * pow(Rational(mu - m), n - lambda) *
               q(binomial(nt, nu - lambda) * binomial(n, lambda)) * sig;
      }
    }
    f[nu] += Rational(2) * acc;
  }

  const Rational m_nt = pow(Rational(m), nt);
  const Rational m_n = pow(Rational(m), n);

  // (-1)^n m^{n~}/(n+1) sum_{nu=n~-1}^{w} C(n+1, nu-n~+1) B_{nu-n~+1} sigma_{n-nu}(m)
  for (int nu = nt - 1; nu <= w; ++nu) {
    const int j = nu - nt + 1;
    f[nu] += sign_n * m_nt / Rational(n + 1) * q(binomial(n + 1, j)) * bernoulli_number(j) *
             divisor_sigma(n - nu, m);
  }
  // -m^n/(n~+1) sum_{nu=n-1}^{w} C(n~+1, nu-n+1) B_{nu-n+1} sigma_{n~-nu}(m)
  for (int nu = n - 1; nu <= w; ++nu) {
    const int j = nu - n + 1;
    f[nu] -= m_n / Rational(nt + 1) * q(binomial(nt + 1, j)) * bernoulli_number(j) *
             divisor_sigma(nt - nu, m);
  }
  // m^{n~}/(n+1) sum_{nu=0}^{n+1} C(n+1, n-nu+1) B_{n-nu+1} sigma_{nu-n~}(m)
  for (int nu = 0; nu <= n + 1; ++nu) {
    const int j = n - nu + 1;
    f[nu] += m_nt / Rational(n + 1) * q(binomial(n + 1, j)) * bernoulli_number(j) *
             divisor_sigma(nu - nt, m);
  }
  // -(-1)^n m^n/(n~+1) sum_{nu=0}^{n~+1} C(n~+1, n~-nu+1) B_{n~-nu+1} sigma_{nu-n}(m)
  for (int nu = 0; nu <= nt + 1; ++nu) {
    const int j = nt - nu + 1;
    f[nu] -= sign_n * m_n / Rational(nt + 1) * q(binomial(nt + 1, j)) * bernoulli_number(j) *
             divisor_sigma(nu - n, m);
  }

  f += correction_constant(w, n, m) * h_minus_k_power(w);
  return f;
}

HomogPoly build_S_level_one(int w, int n) {
  check_odd_exponent(w, n, 1);
  const int nt = w - n;
  const Rational sign_n = (n % 2 == 0) ? Rational(1) : Rational(-1);
  HomogPoly f(w);
  for (int nu = nt - 1; nu <= w; ++nu) {
    f[nu] += sign_n / Rational(n + 1) * q(binomial(n + 1, nu - nt + 1)) *
             bernoulli_number(nu - nt + 1);
  }
  for (int nu = n - 1; nu <= w; ++nu) {
    f[nu] -= Rational(1) / Rational(nt + 1) * q(binomial(nt + 1, nu - n + 1)) *
             bernoulli_number(nu - n + 1);
  }
  for (int nu = 0; nu <= n + 1; ++nu) {
    f[nu] += Rational(1) / Rational(n + 1) * q(binomial(n + 1, n - nu + 1)) *
             bernoulli_number(n - nu + 1);
  }
  for (int nu = 0; nu <= nt + 1; ++nu) {
    f[nu] -= sign_n / Rational(nt + 1) * q(binomial(nt + 1, nt - nu + 1)) *
             bernoulli_number(nt - nu + 1);
  }
  const Rational c = Rational(w + 2) / bernoulli_number(w + 2) * bernoulli_number(n + 1) /
                     Rational(n + 1) * bernoulli_number(nt + 1) / Rational(nt + 1);
  f += c * h_minus_k_power(w);
  return f;
}

}  // namespace heckex
