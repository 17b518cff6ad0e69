#pragma once

#include <string>
#include <utility>

#include "hankel/error.hpp"

namespace hankel {

template <typename T>
DenseMatrix<T>::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::PreconditionViolation,
                "matrix " + std::to_string(rows_) + "x" + std::to_string(cols_) + " given " +
                    std::to_string(entries_.size()) + " entries");
  }
}

template <typename T>
DenseMatrix<T>::DenseMatrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::PreconditionViolation, "ragged matrix rows");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

template <typename T>
DenseMatrix<T> DenseMatrix<T>::transposed() const {
  std::vector<T> out;
  out.reserve(entries_.size());
  for (std::size_t c = 0; c < cols_; ++c)
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return DenseMatrix(cols_, rows_, std::move(out));
}

template <typename T>
DenseMatrix<T> DenseMatrix<T>::with_rows_swapped(std::size_t a, std::size_t b) const {
  DenseMatrix out = *this;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap(out.entries_[a * cols_ + c], out.entries_[b * cols_ + c]);
  }
  return out;
}

template <typename T>
DenseMatrix<T> DenseMatrix<T>::with_entry(std::size_t r, std::size_t c, T value) const {
  DenseMatrix out = *this;
  out.entries_[r * cols_ + c] = std::move(value);
  return out;
}

}  // namespace hankel
