#include "heckex/dedekind_symbol.hpp"

#include <numeric>
#include <string>

#include "heckex/period_poly.hpp"

namespace heckex {

void validate(const SymbolSpec& spec) {
  dim_cusp(spec.w);
  if (spec.n <= 0 || spec.n >= spec.w)
    throw std::domain_error("symbol exponent must satisfy 0 < n < w (got n=" +
                            std::to_string(spec.n) + ")");
  if (spec.m < 1)
    throw std::domain_error("symbol level m must be positive (got m=" + std::to_string(spec.m) + ")");
}

void validate(const SymbolPoint& pt) {
  if (pt.h < 1) throw std::domain_error("symbol point needs h >= 1 (got h=" + std::to_string(pt.h) + ")");
}

namespace {

// floor(x / y) for y > 0
std::int64_t floor_div(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && (x < 0)) --q;
  return q;
}

std::int64_t mod_pos(std::int64_t x, std::int64_t y) {
  const std::int64_t r = x % y;
  return r < 0 ? r + y : r;
}

}  // namespace

namespace detail {

Rational sign_sum(const SymbolSpec& spec, const SymbolPoint& pt, std::int64_t bound) {
  // With u = ak + bh and v = ck + dh, ad - bc = m gives a v = c u + m h, and
  // (k/h + b/a)(k/h + d/c) = u v / (a c h^2). The sign condition becomes
  // c u (c u + m h) < 0: u lies strictly between 0 and -m h / c.
  const std::int64_t h = pt.h, k = pt.k;
  const std::int64_t mh = static_cast<std::int64_t>(spec.m) * h;
  const int nt = spec.w - spec.n;
  Rational acc(0);
  for (std::int64_t a = -bound; a <= bound; ++a) {
    if (a == 0) continue;
    const std::int64_t u_residue = mod_pos(a * k, h);
    for (std::int64_t c = -bound; c <= bound; ++c) {
      if (c == 0) continue;
      // integer window (lo, hi) covering the open interval; endpoints are
      // rejected by the strict test below
      const std::int64_t lo = c > 0 ? floor_div(-mh, c) : 0;
      const std::int64_t hi = c > 0 ? 0 : floor_div(mh, -c) + 1;
      // first u > lo with u = u_residue (mod h)
      std::int64_t u = lo + 1 + mod_pos(u_residue - (lo + 1), h);
      for (; u < hi; u += h) {
        if (u == 0) continue;
        const std::int64_t cu = c * u;
        if (!(cu < 0 && cu + mh > 0)) continue;
        const std::int64_t av = cu + mh;
        if (av % a != 0) continue;
        const std::int64_t v = av / a;
        if ((v - c * k) % h != 0) continue;
        const int s = ((u > 0) == (a > 0)) ? 1 : -1;
        acc += Rational(s) * pow(Rational(u), nt) * pow(Rational(v), spec.n);
      }
    }
  }
  return acc / Rational(2);
}

}  // namespace detail

Rational eval_E(const SymbolSpec& spec, const SymbolPoint& pt) {
  validate(spec);
  validate(pt);
  const int w = spec.w, n = spec.n, nt = w - n, m = spec.m;
  const Rational sign_n = (n % 2 == 0) ? Rational(1) : Rational(-1);
  const Rational hw = pow(Rational(pt.h), w);

  Rational value = detail::sign_sum(spec, pt, static_cast<std::int64_t>(m) * pt.h);

  for (int a = 1; a <= m; ++a) {
    if (m % a != 0) continue;
    const int d = m / a;
    const Rational x = Rational(a) * Rational(pt.k) / Rational(pt.h);
    value += sign_n * pow(Rational(d), nt) * bernoulli_periodic(n + 1, x) * hw / Rational(n + 1);
    value -= pow(Rational(d), n) * bernoulli_periodic(nt + 1, x) * hw / Rational(nt + 1);
  }

  if (n % 2 == 1) {
    value += divisor_sigma(w + 1, m) * Rational(w + 2) / bernoulli_number(w + 2) *
             bernoulli_number(n + 1) / Rational(n + 1) * bernoulli_number(nt + 1) /
             Rational(nt + 1) * hw;
  }
  return value;
}

Rational hecke_transform_E(const SymbolSpec& base, int m_prime, const SymbolPoint& pt) {
  validate(base);
  validate(pt);
  if (m_prime < 1)
    throw std::domain_error("Hecke index must be positive (got " + std::to_string(m_prime) + ")");
  Rational acc(0);
  for (std::int64_t d = 1; d <= m_prime; ++d) {
    if (m_prime % d != 0) continue;
    const std::int64_t a = m_prime / d;
    for (std::int64_t b = 0; b < d; ++b)
      acc += eval_E(base, SymbolPoint{d * pt.h, a * pt.k + b * pt.h});
  }
  return acc;
}

bool check_reciprocity(const SymbolSpec& spec, std::int64_t h, std::int64_t k) {
  validate(spec);
  if (h < 1 || k < 1) throw std::domain_error("reciprocity needs h, k >= 1");
  const Rational lhs = eval_E(spec, SymbolPoint{h, k}) - eval_E(spec, SymbolPoint{k, -h});
  const HomogPoly s = build_S(spec.w, spec.n, spec.m);
  return lhs == s(Rational(h), Rational(k));
}

BigInt trivial_symbol_F(int w, const SymbolPoint& pt) {
  validate(pt);
  return pow(BigInt(pt.h), static_cast<std::uint32_t>(w));
}

BigInt trivial_symbol_G(int w, const SymbolPoint& pt) {
  validate(pt);
  return pow(BigInt(std::gcd(pt.h, pt.k)), static_cast<std::uint32_t>(w));
}

}  // namespace heckex
