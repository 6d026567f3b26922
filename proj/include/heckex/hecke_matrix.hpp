#ifndef HECKEX_HECKE_MATRIX_HPP
#define HECKEX_HECKE_MATRIX_HPP

#include <utility>
#include <vector>

#include "heckex/period_poly.hpp"

namespace heckex {

/// Monic characteristic polynomial det(x I - M), coefficients ascending.
struct CharPoly {
  std::vector<Rational> coeffs{Rational(1)};

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_integral() const;
};

struct GramPair {
  RationalMatrix s1;  ///< <S_{w,n_i}, S_{w,n_j}>
  RationalMatrix s2;  ///< <S_{w,n_i}, S^m_{w,n_j}>
};

/// Both d_w x d_w (0 x 0 when the space is empty).
GramPair gram_matrices(int w, int m);

/// T_m with respect to the basis indexed by basis_exponents(w): the exact
/// solution of S1 T = S2. Throws std::logic_error if S1 is singular.
RationalMatrix action_matrix(int w, int m);

CharPoly char_poly(const RationalMatrix& m);

/// tau(1..max_m) from q * prod_{n>=1} (1 - q^n)^24, exact truncated series.
std::vector<BigInt> tau_oracle(int max_m);

/// Coprime pairs checked for T_m T_n = T_{mn} when none are given.
inline const std::vector<std::pair<int, int>>& default_coprime_pairs() {
  static const std::vector<std::pair<int, int>> pairs{{2, 3}, {2, 5}, {3, 5}};
  return pairs;
}

/// T_p T_{p^r} = T_{p^{r+1}} + p^{w+1} T_{p^{r-1}}   (T_1 = I)
bool satisfies_prime_power_recursion(int w, int p, int r);

/// T_m T_n = T_{mn}
bool satisfies_multiplicativity(int w, int m, int n);

/// Both identities above: the recursion for (p, r) and multiplicativity over
/// the given coprime pairs. Requires d_w >= 1 (std::domain_error otherwise).
bool verify_hecke_algebra(int w, int p, int r,
                          const std::vector<std::pair<int, int>>& coprime_pairs =
                              default_coprime_pairs());

}  // namespace heckex

#endif  // HECKEX_HECKE_MATRIX_HPP
