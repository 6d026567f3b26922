#ifndef HECKEX_DEDEKIND_SYMBOL_HPP
#define HECKEX_DEDEKIND_SYMBOL_HPP

// Weighted Dedekind symbols E^m_{w,n} on Z+ x Z and the Hecke action on them.

#include <cstdint>

#include "heckex/exact_arith.hpp"

namespace heckex {

struct SymbolPoint {
  std::int64_t h = 1;  ///< >= 1
  std::int64_t k = 0;
};

/// Parameters of E^m_{w,n}: 0 < n < w, m >= 1. Both parities of n are allowed
/// (odd n gives an even symbol, even n an odd one).
struct SymbolSpec {
  int w = 0;
  int n = 0;
  int m = 1;
};

/// Throws std::domain_error for malformed specs or h < 1.
void validate(const SymbolSpec& spec);
void validate(const SymbolPoint& pt);

Rational eval_E(const SymbolSpec& spec, const SymbolPoint& pt);

/// (T_{m'} E)(h,k) = sum_{ad=m', d>0} sum_{b=0}^{d-1} E(dh, ak+bh) applied to
/// E = E^{base.m}_{w,n}.
Rational hecke_transform_E(const SymbolSpec& base, int m_prime, const SymbolPoint& pt);

/// E(h,k) - E(k,-h) == S^m_{w,n}(h,k) for h, k >= 1. Needs odd n.
bool check_reciprocity(const SymbolSpec& spec, std::int64_t h, std::int64_t k);

/// F_w(h,k) = h^w
BigInt trivial_symbol_F(int w, const SymbolPoint& pt);
/// G_w(h,k) = gcd(h,k)^w
BigInt trivial_symbol_G(int w, const SymbolPoint& pt);

namespace detail {

/// The 1/2 sgn(k/h + b/a) (ak+bh)^{n~} (ck+dh)^n sum over determinant-m
/// matrices with ac != 0 and (k/h + b/a)(k/h + d/c) < 0, searching
/// |a|, |c| <= bound. Every contributing matrix has |a|, |c| <= m h, so any
/// bound >= m h gives the full sum.
Rational sign_sum(const SymbolSpec& spec, const SymbolPoint& pt, std::int64_t bound);

}  // namespace detail

}  // namespace heckex

#endif  // HECKEX_DEDEKIND_SYMBOL_HPP
