#include "heckex/es_mod2.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "heckex/period_poly.hpp"

namespace heckex {

namespace {

void check_weight(int w) {
  if (w < 4 || w % 2 != 0)
    throw std::domain_error("relation matrices need even w >= 4 (got " + std::to_string(w) + ")");
}

}  // namespace

IntMatrix build_A(int w) {
  check_weight(w);
  const int w2 = w / 2;
  IntMatrix a = IntMatrix::Zero(w + 1, w2 + 1);
  for (int i = 0; i <= w; ++i) {
    for (int j = 1; j <= w2; ++j) {
      a(i, j) = 2 * j > i ? binomial(2 * j - 1, i) : binomial(w - 2 * j + 1, w - i);
    }
  }
  return a;
}

IntMatrix build_B(int w) {
  check_weight(w);
  const int w2 = w / 2;
  IntMatrix b = IntMatrix::Zero(w2 + 1, w2 + 1);
  for (int j = 1; j <= w2; ++j) b(0, j) = 1;
  for (int i = 1; i <= w2; ++i) {
    for (int j = 1; j <= w2; ++j) {
      b(i, j) = j > i ? binomial(2 * j - 1, 2 * i) + binomial(2 * j - 1, 2 * i - 1)
                      : binomial(w - 2 * j + 1, w - 2 * i) + binomial(w - 2 * j + 1, w - 2 * i + 1);
    }
  }
  return b;
}

IntMatrix build_C(int w) {
  check_weight(w);
  const int w2 = w / 2, w4 = w / 4;
  IntMatrix c = IntMatrix::Zero(w4 + 1, w2 + 1);
  for (int i = 0; i < w4; ++i) {
    c(i, i + 1) = 1;
    c(i, w2 - i) = -1;
  }
  for (int j = w4 + 1; j <= w2; ++j) {
    if (w % 4 == 0)
      c(w4, j) = 1;
    else
      c(w4, j) = j == w4 + 1 ? 1 : 2;
  }
  return c;
}

IntMatrix build_D(int w) {
  const IntMatrix b = build_B(w);
  const IntMatrix c = build_C(w);
  IntMatrix d(b.rows() + c.rows(), b.cols());
  d << b, c;
  return d;
}

BitMatrix reduce_mod2(const IntMatrix& m) {
  BitMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), m(i, j) % 2 != 0);
  return out;
}

BitMatrix pascal_P(int n) {
  if (n < 0) throw std::domain_error("pascal_P: negative order");
  BitMatrix p(1, 1);
  p.set(0, 0, true);
  for (int level = 1; level <= n; ++level) {
    const std::size_t half = p.rows();
    BitMatrix next(2 * half, 2 * half);
    for (std::size_t i = 0; i < half; ++i) {
      for (std::size_t j = 0; j < half; ++j) {
        if (!p.get(i, j)) continue;
        next.set(i, j, true);
        next.set(i, j + half, true);
        next.set(i + half, j + half, true);
      }
    }
    p = std::move(next);
  }
  return p;
}

BitMatrix pascal_Q(int n) {
  BitMatrix p = pascal_P(n);
  return p + BitMatrix::identity(p.rows());
}

BitMatrix principal_submatrix(const BitMatrix& x, std::size_t k) {
  return x.principal_submatrix(k);
}

std::vector<std::size_t> selected_columns(int w) {
  if (w % 2 != 0 || w < 12)
    throw std::domain_error("column selection needs even w >= 12 (got " + std::to_string(w) + ")");
  const std::size_t k = static_cast<std::size_t>(w / 12);
  const int a = (w % 12) / 2;

  std::vector<std::size_t> s;
  auto run = [&s](std::size_t first, std::size_t last) {
    for (std::size_t j = first; j <= last; ++j) s.push_back(j);
  };
  auto odd_run = [&s](std::size_t first, std::size_t count) {
    for (std::size_t t = 0; t < count; ++t) s.push_back(first + 2 * t);
  };

  switch (a) {
    case 0:
      run(1, 4 * k);
      odd_run(4 * k + 1, k);
      s.push_back(6 * k);
      break;
    case 1:
      run(1, 4 * k);
      odd_run(4 * k + 1, k + 1);
      break;
    case 2:
      run(1, 4 * k);
      odd_run(4 * k + 1, k + 1);
      s.push_back(6 * k + 2);
      break;
    case 3:
      run(1, 4 * k + 2);
      odd_run(4 * k + 3, k + 1);
      break;
    case 4:
      run(1, 4 * k + 2);
      odd_run(4 * k + 3, k + 1);
      s.push_back(6 * k + 4);
      break;
    default:  // a == 5
      run(1, 4 * k + 2);
      odd_run(4 * k + 3, k + 2);
      break;
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<std::size_t> complement_columns(int w) {
  const auto s = selected_columns(w);
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j <= static_cast<std::size_t>(w / 2); ++j)
    if (!std::binary_search(s.begin(), s.end(), j)) out.push_back(j);
  return out;
}

std::vector<std::size_t> expected_complement(int w) {
  const int w2 = w / 2;
  const int d = dim_cusp(w);
  std::vector<std::size_t> out;
  for (int b = 0; b < d; ++b) {
    const int j = w % 4 == 0 ? w2 - 2 * (b + 1) : w2 - 1 - 2 * b;
    out.push_back(static_cast<std::size_t>(j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BasisSelectionReport verify_basis_selection(int w) {
  const auto s = selected_columns(w);
  const auto w2 = static_cast<std::size_t>(w / 2);
  BasisSelectionReport report;

  const BitMatrix m = reduce_mod2(build_D(w));
  report.independent = m.select_columns(s).rank() == s.size();

  report.cardinality_ok = w2 - s.size() == static_cast<std::size_t>(dim_cusp(w));

  int n = 0;
  while ((std::size_t{1} << n) < w2 + 1) ++n;
  const IntMatrix b = build_B(w);
  report.lemma41_ok = reduce_mod2(b) == principal_submatrix(pascal_Q(n), w2 + 1);

  const IntMatrix a = build_A(w);
  bool rows_ok = b.row(0) == a.row(0);
  for (Eigen::Index i = 1; rows_ok && i <= static_cast<Eigen::Index>(w2); ++i) {
    const IntMatrix sum = a.row(2 * i - 1) + a.row(2 * i);
    rows_ok = b.row(i) == sum;
  }
  report.rowsum_ok = rows_ok;
  return report;
}

}  // namespace heckex
