#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

/// Row-major exact matrix. Immutable: row operations return new matrices.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries);
  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows);

  static DenseMatrix filled(std::size_t rows, std::size_t cols, const T& value) {
    return DenseMatrix(rows, cols, std::vector<T>(rows * cols, value));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const T> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<const T> entries() const noexcept { return entries_; }

  DenseMatrix transposed() const;
  DenseMatrix with_rows_swapped(std::size_t a, std::size_t b) const;
  DenseMatrix with_entry(std::size_t r, std::size_t c, T value) const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using Matrix = DenseMatrix<Rational>;

}  // namespace hankel

#include "hankel/matrix_impl.hpp"
