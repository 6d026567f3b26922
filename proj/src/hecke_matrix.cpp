#include "heckex/hecke_matrix.hpp"

#include <numeric>
#include <string>

namespace heckex {

bool CharPoly::is_integral() const {
  for (const auto& c : coeffs)
    if (!is_integer(c)) return false;
  return true;
}

GramPair gram_matrices(int w, int m) {
  if (m < 1) throw std::domain_error("m must be positive (got m=" + std::to_string(m) + ")");
  const BasisSpec basis = basis_exponents(w);
  const int d = basis.dim;

  std::vector<HomogPoly> level_one, level_m;
  level_one.reserve(static_cast<std::size_t>(d));
  level_m.reserve(static_cast<std::size_t>(d));
  for (int n : basis.exponents) {
    level_one.push_back(build_S(w, n, 1));
    level_m.push_back(m == 1 ? level_one.back() : build_S(w, n, m));
  }

  GramPair g{RationalMatrix(d, d), RationalMatrix(d, d)};
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g.s1(i, j) = j < i ? g.s1(j, i) : inner_product(level_one[i], level_one[j]);
      g.s2(i, j) = inner_product(level_one[i], level_m[j]);
    }
  }
  return g;
}

RationalMatrix action_matrix(int w, int m) {
  const GramPair g = gram_matrices(w, m);
  if (g.s1.rows() == 0) return RationalMatrix(0, 0);
  auto t = solve_exact(g.s1, g.s2);
  if (!t)
    throw std::logic_error("Gram matrix S1 is singular for w=" + std::to_string(w) +
                           "; the S_{w,4i+-1} are expected to be independent");
  return *t;
}

CharPoly char_poly(const RationalMatrix& m) {
  return CharPoly{char_poly_coeffs(m)};
}

std::vector<BigInt> tau_oracle(int max_m) {
  if (max_m < 1) throw std::domain_error("tau_oracle: max_m must be positive");
  // series[j] = coefficient of q^j in prod (1 - q^n)^24, truncated at q^{max_m - 1}
  const auto len = static_cast<std::size_t>(max_m);
  std::vector<BigInt> series(len, BigInt(0));
  series[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      // multiply by (1 - q^n) in place, high degrees first
      for (std::size_t j = len - 1; j >= n; --j) series[j] -= series[j - n];
    }
  }
  return series;  // tau(j) = series[j - 1]
}

namespace {

RationalMatrix identity(Eigen::Index d) { return RationalMatrix::Identity(d, d); }

RationalMatrix hecke_or_identity(int w, int m, Eigen::Index d) {
  return m == 1 ? identity(d) : action_matrix(w, m);
}

}  // namespace

bool satisfies_prime_power_recursion(int w, int p, int r) {
  if (r < 1) throw std::domain_error("prime power recursion needs r >= 1");
  const Eigen::Index d = dim_cusp(w);
  int pr = 1;
  for (int i = 0; i < r; ++i) pr *= p;
  const RationalMatrix lhs = action_matrix(w, p) * hecke_or_identity(w, pr, d);
  const RationalMatrix rhs = action_matrix(w, pr * p) +
                             pow(Rational(p), w + 1) * hecke_or_identity(w, pr / p, d);
  return exactly_equal(lhs, rhs);
}

bool satisfies_multiplicativity(int w, int m, int n) {
  if (std::gcd(m, n) != 1) throw std::domain_error("multiplicativity needs coprime m, n");
  const RationalMatrix lhs = action_matrix(w, m) * action_matrix(w, n);
  return exactly_equal(lhs, action_matrix(w, m * n));
}

bool verify_hecke_algebra(int w, int p, int r,
                          const std::vector<std::pair<int, int>>& coprime_pairs) {
  if (dim_cusp(w) < 1)
    throw std::domain_error("verify_hecke_algebra: space of cusp forms is empty");
  if (!satisfies_prime_power_recursion(w, p, r)) return false;
  for (const auto& [m, n] : coprime_pairs)
    if (!satisfies_multiplicativity(w, m, n)) return false;
  return true;
}

}  // namespace heckex
