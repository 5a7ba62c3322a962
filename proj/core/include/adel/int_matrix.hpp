#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace adel {

/// Unbounded integer. Every coefficient in the library is one of these.
using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of unbounded integers.
///
/// Matrices act on row vectors from the right (v ↦ v·M), so products compose
/// in diagrammatic order like the morphisms they encode. Shapes with zero rows
/// or zero columns are legal and carry their other dimension.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix row_vector(const IntVector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  IntVector row_copy(std::size_t i) const;

  bool is_zero() const;
  bool is_zero_row(std::size_t i) const;

  IntMatrix transposed() const;
  /// Rows [first, first+count).
  IntMatrix row_range(std::size_t first, std::size_t count) const;
  /// Columns [first, first+count).
  IntMatrix col_range(std::size_t first, std::size_t count) const;
  /// Copy without all-zero rows.
  IntMatrix without_zero_rows() const;

  void swap_rows(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  /// row_i += factor * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const Integer& factor);

  /// Determinant by fraction-free elimination. Requires a square matrix.
  Integer determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Stacks matrices with equal column counts on top of each other.
IntMatrix vstack(const std::vector<IntMatrix>& parts, std::size_t cols);
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);

IntVector operator*(const IntVector& v, const IntMatrix& m);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);

}  // namespace adel
