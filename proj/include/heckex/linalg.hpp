#ifndef HECKEX_LINALG_HPP
#define HECKEX_LINALG_HPP

// Exact dense linear algebra on Eigen matrices, templated on the scalar.
// Only field operations are used, so any exact field type works; pivoting
// takes the first nonzero entry.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "heckex/exact_arith.hpp"

namespace heckex {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using IntMatrix = Matrix<BigInt>;

/// Solves A X = B by Gauss-Jordan elimination. Returns nullopt when A is
/// singular (or not square, or row counts disagree).
template <typename DerivedA, typename DerivedB>
std::optional<Matrix<typename DerivedA::Scalar>> solve_exact(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n) return std::nullopt;
  const Eigen::Index rhs = b.cols();

  Matrix<Scalar> work(n, n + rhs);
  work.leftCols(n) = a;
  work.rightCols(rhs) = b.template cast<Scalar>();

  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && work(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) work.row(pivot).swap(work.row(col));

    const Scalar inv = Scalar(1) / work(col, col);
    work.row(col) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || work(r, col) == Scalar(0)) continue;
      const Scalar factor = work(r, col);
      work.row(r) -= factor * work.row(col);
    }
  }
  return Matrix<Scalar>(work.rightCols(rhs));
}

/// Sum of the diagonal; throws std::domain_error for non-square input.
template <typename Derived>
typename Derived::Scalar trace(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::domain_error("trace: matrix not square");
  typename Derived::Scalar acc(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) acc += m(i, i);
  return acc;
}

/// Coefficients of det(x I - M), ascending by degree, monic, via
/// Faddeev-LeVerrier:
///   N_1 = I,  c_{d-k} = -tr(M N_k) / k,  N_{k+1} = M N_k + c_{d-k} I.
/// Divisions are by the integers 1..d only.
template <typename Derived>
std::vector<typename Derived::Scalar> char_poly_coeffs(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::domain_error("char_poly: matrix not square");
  const Eigen::Index d = m.rows();
  std::vector<Scalar> coeffs(static_cast<std::size_t>(d) + 1, Scalar(0));
  coeffs[static_cast<std::size_t>(d)] = Scalar(1);
  if (d == 0) return coeffs;

  const Matrix<Scalar> mat = m;
  Matrix<Scalar> n_k = Matrix<Scalar>::Identity(d, d);
  for (Eigen::Index k = 1; k <= d; ++k) {
    const Matrix<Scalar> prod = mat * n_k;
    const Scalar c = -trace(prod) / Scalar(k);
    coeffs[static_cast<std::size_t>(d - k)] = c;
    n_k = prod;
    n_k.diagonal().array() += c;
  }
  return coeffs;
}

template <typename DerivedA, typename DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& a,
                   const Eigen::MatrixBase<DerivedB>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.rows() == 0 || a.cols() == 0 || a == b);
}

}  // namespace heckex

#endif  // HECKEX_LINALG_HPP
