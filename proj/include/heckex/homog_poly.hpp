#ifndef HECKEX_HOMOG_POLY_HPP
#define HECKEX_HOMOG_POLY_HPP

// Homogeneous polynomials of even degree w in (h, k):
//
//   f(h, k) = sum_{nu=0}^{w} a_nu h^nu k^{w - nu},   coeffs()[nu] = a_nu.
//
// Indexing is by the exponent of h, 0-based. (A 1-based listing index nu'
// corresponds to nu = nu' - 1.)

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "heckex/linalg.hpp"

namespace heckex {

template <typename Scalar>
class BasicHomogPoly {
 public:
  /// The zero polynomial of degree w.
  explicit BasicHomogPoly(int w) : w_(checked_degree(w)), coeffs_(Vector<Scalar>::Zero(w + 1)) {}

  BasicHomogPoly(int w, Vector<Scalar> coeffs)
      : w_(checked_degree(w)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != w_ + 1)
      throw std::invalid_argument("HomogPoly: need exactly w+1 coefficients");
  }

  /// c * h^nu * k^{w-nu}
  static BasicHomogPoly monomial(int w, int nu, Scalar c = Scalar(1)) {
    BasicHomogPoly f(w);
    f[nu] = std::move(c);
    return f;
  }

  int degree() const { return w_; }
  const Vector<Scalar>& coeffs() const { return coeffs_; }

  Scalar& operator[](int nu) { return coeffs_(checked_index(nu)); }
  const Scalar& operator[](int nu) const { return coeffs_(checked_index(nu)); }

  Scalar operator()(const Scalar& h, const Scalar& k) const {
    // Horner in h, with powers of k peeled off from the top
    Scalar acc(0);
    Scalar k_pow(1);
    std::vector<Scalar> k_pows(static_cast<std::size_t>(w_) + 1);
    for (int e = 0; e <= w_; ++e) {
      k_pows[static_cast<std::size_t>(e)] = k_pow;
      k_pow *= k;
    }
    for (int nu = w_; nu >= 0; --nu) {
      acc = acc * h + coeffs_(nu) * k_pows[static_cast<std::size_t>(w_ - nu)];
    }
    return acc;
  }

  bool is_zero() const {
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
      if (coeffs_(i) != Scalar(0)) return false;
    return true;
  }

  BasicHomogPoly& operator+=(const BasicHomogPoly& other) {
    require_same_degree(other);
    coeffs_ += other.coeffs_;
    return *this;
  }
  BasicHomogPoly& operator-=(const BasicHomogPoly& other) {
    require_same_degree(other);
    coeffs_ -= other.coeffs_;
    return *this;
  }
  BasicHomogPoly& operator*=(const Scalar& c) {
    coeffs_ *= c;
    return *this;
  }

  friend BasicHomogPoly operator+(BasicHomogPoly a, const BasicHomogPoly& b) { return a += b; }
  friend BasicHomogPoly operator-(BasicHomogPoly a, const BasicHomogPoly& b) { return a -= b; }
  friend BasicHomogPoly operator*(const Scalar& c, BasicHomogPoly a) { return a *= c; }

  friend bool operator==(const BasicHomogPoly& a, const BasicHomogPoly& b) {
    return a.w_ == b.w_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static int checked_degree(int w) {
    if (w < 2 || w % 2 != 0)
      throw std::domain_error("HomogPoly: degree must be even and >= 2");
    return w;
  }
  Eigen::Index checked_index(int nu) const {
    if (nu < 0 || nu > w_) throw std::out_of_range("HomogPoly: exponent out of range");
    return nu;
  }
  void require_same_degree(const BasicHomogPoly& other) const {
    if (other.w_ != w_) throw std::domain_error("HomogPoly: degree mismatch");
  }

  int w_;
  Vector<Scalar> coeffs_;
};

using HomogPoly = BasicHomogPoly<Rational>;

/// <f, g> = sum_nu a_nu b_nu. Conjugation is the identity on real scalars.
template <typename Scalar>
Scalar inner_product(const BasicHomogPoly<Scalar>& f, const BasicHomogPoly<Scalar>& g) {
  if (f.degree() != g.degree()) throw std::domain_error("inner_product: degree mismatch");
  Scalar acc(0);
  for (int nu = 0; nu <= f.degree(); ++nu) acc += f[nu] * g[nu];
  return acc;
}

/// Integer linear substitution (h, k) -> (p h + q k, r h + s k).
struct LinearMap {
  std::int64_t p = 1, q = 0, r = 0, s = 1;
};

namespace detail {

// Coefficients of (x h + y k)^e by power of h.
template <typename Scalar>
std::vector<Scalar> binomial_power(std::int64_t x, std::int64_t y, int e) {
  std::vector<Scalar> out(static_cast<std::size_t>(e) + 1);
  for (int i = 0; i <= e; ++i) {
    out[static_cast<std::size_t>(i)] =
        Scalar(binomial(e, i) * pow(BigInt(x), static_cast<std::uint32_t>(i)) *
               pow(BigInt(y), static_cast<std::uint32_t>(e - i)));
  }
  return out;
}

}  // namespace detail

template <typename Scalar>
BasicHomogPoly<Scalar> substitute_linear(const BasicHomogPoly<Scalar>& f, const LinearMap& map) {
  const int w = f.degree();
  BasicHomogPoly<Scalar> out(w);
  for (int nu = 0; nu <= w; ++nu) {
    if (f[nu] == Scalar(0)) continue;
    const auto left = detail::binomial_power<Scalar>(map.p, map.q, nu);
    const auto right = detail::binomial_power<Scalar>(map.r, map.s, w - nu);
    for (int i = 0; i <= nu; ++i) {
      const Scalar scaled = f[nu] * left[static_cast<std::size_t>(i)];
      if (scaled == Scalar(0)) continue;
      for (int j = 0; j <= w - nu; ++j) out[i + j] += scaled * right[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

/// Membership in U_w: f(h+k, k) + f(h, h+k) = f(h, k) and f(1, 1) = 0.
template <typename Scalar>
bool is_in_U(const BasicHomogPoly<Scalar>& f) {
  if (f(Scalar(1), Scalar(1)) != Scalar(0)) return false;
  const auto lhs = substitute_linear(f, LinearMap{1, 1, 0, 1}) +
                   substitute_linear(f, LinearMap{1, 0, 1, 1});
  return lhs == f;
}

enum class Parity { Even, Odd, Neither };

/// Even: f(h,-k) = f(h,k). Odd: f(h,-k) = -f(h,k). Zero reports Even.
template <typename Scalar>
Parity parity(const BasicHomogPoly<Scalar>& f) {
  bool has_even = false, has_odd = false;
  for (int nu = 0; nu <= f.degree(); ++nu) {
    if (f[nu] == Scalar(0)) continue;
    ((f.degree() - nu) % 2 == 0 ? has_even : has_odd) = true;
  }
  if (!has_odd) return Parity::Even;
  if (!has_even) return Parity::Odd;
  return Parity::Neither;
}

const char* to_string(Parity p);

}  // namespace heckex

#endif  // HECKEX_HOMOG_POLY_HPP
