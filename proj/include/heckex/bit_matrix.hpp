#ifndef HECKEX_BIT_MATRIX_HPP
#define HECKEX_BIT_MATRIX_HPP

#include <cstdint>
#include <vector>

namespace heckex {

/// Dense matrix over F_2, rows packed into 64-bit words. Indices are 0-based.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value);

  /// row(dst) += row(src)
  void add_row(std::size_t dst, std::size_t src);

  BitMatrix& operator+=(const BitMatrix& other);
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }
  friend bool operator==(const BitMatrix& a, const BitMatrix& b);

  /// Leading k x k block; throws std::out_of_range if k exceeds either size.
  BitMatrix principal_submatrix(std::size_t k) const;
  /// Columns in the given order.
  BitMatrix select_columns(const std::vector<std::size_t>& cols) const;
  BitMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  std::size_t rank() const;

 private:
  std::size_t words_per_row() const { return (cols_ + 63) / 64; }
  std::uint64_t* row_ptr(std::size_t i) { return bits_.data() + i * words_per_row(); }
  const std::uint64_t* row_ptr(std::size_t i) const { return bits_.data() + i * words_per_row(); }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace heckex

#endif  // HECKEX_BIT_MATRIX_HPP
