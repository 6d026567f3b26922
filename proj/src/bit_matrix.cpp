#include "heckex/bit_matrix.hpp"

#include <stdexcept>

namespace heckex {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * ((cols + 63) / 64), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

bool BitMatrix::get(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("BitMatrix::get");
  return (row_ptr(i)[j / 64] >> (j % 64)) & 1U;
}

void BitMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("BitMatrix::set");
  const std::uint64_t mask = std::uint64_t{1} << (j % 64);
  if (value)
    row_ptr(i)[j / 64] |= mask;
  else
    row_ptr(i)[j / 64] &= ~mask;
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) {
  std::uint64_t* d = row_ptr(dst);
  const std::uint64_t* s = row_ptr(src);
  for (std::size_t w = 0; w < words_per_row(); ++w) d[w] ^= s[w];
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("BitMatrix: shape mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
  return *this;
}

bool operator==(const BitMatrix& a, const BitMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
}

BitMatrix BitMatrix::principal_submatrix(std::size_t k) const {
  if (k > rows_ || k > cols_) throw std::out_of_range("principal_submatrix: size too large");
  return block(0, 0, k, k);
}

BitMatrix BitMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows,
                           std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw std::out_of_range("BitMatrix::block");
  BitMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.set(i, j, get(row0 + i, col0 + j));
  return out;
}

BitMatrix BitMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  BitMatrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t c = 0; c < cols.size(); ++c) out.set(i, c, get(i, cols[c]));
  return out;
}

std::size_t BitMatrix::rank() const {
  BitMatrix work = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && !work.get(pivot, col)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      work.add_row(rank, pivot);  // brings a 1 into the pivot row
    }
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != rank && work.get(r, col)) work.add_row(r, rank);
    ++rank;
  }
  return rank;
}

}  // namespace heckex
