#include "heckex/exact_arith.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include <gmp.h>

namespace heckex {

std::string to_string(const Rational& x) { return x.str(); }
std::string to_string(const BigInt& x) { return x.str(); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    // the two-argument constructor mishandles a negative denominator
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

bool is_integer(const Rational& x) { return denominator(x) == 1; }

BigInt floor(const Rational& x) {
  BigInt num = numerator(x);
  const BigInt den = denominator(x);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Rational fractional_part(const Rational& x) { return x - Rational(floor(x)); }

Rational pow(const Rational& x, std::int64_t e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("pow: zero to a negative power");
    return Rational(1) / pow(x, -e);
  }
  const auto ue = static_cast<std::uint32_t>(e);
  return Rational(boost::multiprecision::pow(numerator(x), ue),
                  boost::multiprecision::pow(denominator(x), ue));
}

BigInt pow(const BigInt& x, std::uint32_t e) {
  return boost::multiprecision::pow(x, e);
}

int sign(const BigInt& x) { return x.sign(); }
int sign(const Rational& x) { return x.sign(); }

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
  if (k < 0 || k > n) return BigInt(0);
  BigInt result;
  mpz_bin_uiui(result.backend().data(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

namespace {

struct BernoulliTable {
  std::mutex mutex;
  std::vector<Rational> values{Rational(1)};
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

}  // namespace

Rational bernoulli_number(std::int64_t m) {
  if (m < 0) throw std::domain_error("bernoulli_number: negative index");
  auto& table = bernoulli_table();
  std::lock_guard lock(table.mutex);
  auto& b = table.values;
  // sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1
  for (auto n = static_cast<std::int64_t>(b.size()); n <= m; ++n) {
    Rational acc(0);
    for (std::int64_t k = 0; k < n; ++k) {
      if (b[k] != 0) acc += Rational(binomial(n + 1, k)) * b[k];
    }
    b.push_back(-acc / Rational(n + 1));
  }
  return b[static_cast<std::size_t>(m)];
}

Rational bernoulli_poly(std::int64_t m, const Rational& x) {
  if (m < 0) throw std::domain_error("bernoulli_poly: negative index");
  // Horner in x over the coefficients C(m,k) B_k of x^{m-k}
  Rational acc(0);
  for (std::int64_t k = 0; k <= m; ++k) {
    acc = acc * x + Rational(binomial(m, k)) * bernoulli_number(k);
  }
  return acc;
}

Rational bernoulli_periodic(std::int64_t m, const Rational& x) {
  return bernoulli_poly(m, fractional_part(x));
}

Rational divisor_sigma(std::int64_t k, std::int64_t n) {
  if (n <= 0) throw std::domain_error("divisor_sigma: n must be positive");
  Rational acc(0);
  for (std::int64_t a = 1; a * a <= n; ++a) {
    if (n % a != 0) continue;
    acc += pow(Rational(a), k);
    const std::int64_t other = n / a;
    if (other != a) acc += pow(Rational(other), k);
  }
  return acc;
}

}  // namespace heckex
