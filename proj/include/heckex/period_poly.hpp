#ifndef HECKEX_PERIOD_POLY_HPP
#define HECKEX_PERIOD_POLY_HPP

#include <vector>

#include "heckex/homog_poly.hpp"

namespace heckex {

/// Dimension of the cusp forms of weight w+2 together with the exponents
/// 4i+1 (w = 0 mod 4) or 4i-1 (w = 2 mod 4), i = 1..dim, that index the basis.
struct BasisSpec {
  int w = 0;
  int dim = 0;
  std::vector<int> exponents;
};

/// floor((w+2)/12), minus one when w = 0 (mod 12). Throws std::domain_error
/// unless w is even and >= 2.
int dim_cusp(int w);

BasisSpec basis_exponents(int w);

/// S^m_{w,n} from the closed Bernoulli / divisor-sum expansion of its
/// coefficients. n must be odd with 0 < n < w, m >= 1; std::domain_error
/// otherwise.
HomogPoly build_S(int w, int n, int m);

/// The m = 1 closed form (no divisor sums). Kept as a separate code path so
/// it can be checked against build_S(w, n, 1).
HomogPoly build_S_level_one(int w, int n);

/// The same polynomial built from its defining sum over determinant-m integer
/// matrices plus Bernoulli-polynomial terms, sampled at (h, k) = (1, t),
/// t = 1..w+1, then interpolated by an exact Vandermonde solve.
HomogPoly build_S_oracle(int w, int n, int m);

/// Value of the defining expression of S^m_{w,n} at an integer point (h, k),
/// h, k >= 1. This is what build_S_oracle interpolates.
Rational S_defining_value(int w, int n, int m, std::int64_t h, std::int64_t k);

/// h^w - k^w
HomogPoly h_minus_k_power(int w);

}  // namespace heckex

#endif  // HECKEX_PERIOD_POLY_HPP
