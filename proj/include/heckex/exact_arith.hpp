#ifndef HECKEX_EXACT_ARITH_HPP
#define HECKEX_EXACT_ARITH_HPP

// Exact scalar arithmetic: big integers and fractions, binomial coefficients,
// Bernoulli numbers / polynomials / periodic functions, divisor sums.
//
// Bernoulli convention: B_1 = -1/2, i.e. the numbers are the values at x = 0 of
// the polynomials generated by t e^{xt} / (e^t - 1). Many libraries use +1/2.

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace heckex {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Arbitrary-precision fraction, always in lowest terms with positive
/// denominator (GMP canonicalizes after every operation).
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline BigInt numerator(const Rational& x) {
  return boost::multiprecision::numerator(x);
}
inline BigInt denominator(const Rational& x) {
  return boost::multiprecision::denominator(x);
}

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Parses "num" or "num/den"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& x);

/// Greatest integer <= x (also for negative x).
BigInt floor(const Rational& x);

/// x - floor(x), in [0, 1).
Rational fractional_part(const Rational& x);

/// x^e for any integer e; throws std::domain_error for 0^e with e < 0.
Rational pow(const Rational& x, std::int64_t e);
BigInt pow(const BigInt& x, std::uint32_t e);

int sign(const BigInt& x);
int sign(const Rational& x);

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// B_m with B_1 = -1/2. Memoized per process; safe to call concurrently.
Rational bernoulli_number(std::int64_t m);

/// B_m(x) = sum_k C(m,k) B_k x^{m-k}.
Rational bernoulli_poly(std::int64_t m, const Rational& x);

/// Periodic Bernoulli function: B_m(x - floor(x)).
Rational bernoulli_periodic(std::int64_t m, const Rational& x);

/// sigma_k(n) = sum over positive divisors a of n of a^k; k may be negative.
/// Throws std::domain_error when n <= 0.
Rational divisor_sigma(std::int64_t k, std::int64_t n);

}  // namespace heckex

#endif  // HECKEX_EXACT_ARITH_HPP
