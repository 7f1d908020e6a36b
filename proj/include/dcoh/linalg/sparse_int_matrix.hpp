#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dcoh/linalg/integer.hpp"

namespace dcoh {

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Integer value;
};

/// Immutable integer matrix in compressed-row form. Entries are unique, nonzero
/// and sorted row-major.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols);

  /// Throws std::invalid_argument on duplicate keys or out-of-range indices;
  /// zero values are dropped.
  static SparseIntMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);
  static SparseIntMatrix from_dense(const std::vector<std::vector<Integer>>& dense, std::size_t cols);
  static SparseIntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return values_.size(); }
  bool is_zero() const { return values_.empty(); }
  bool is_identity() const;

  std::span<const std::size_t> row_cols(std::size_t r) const {
    return {col_idx_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }
  std::span<const Integer> row_values(std::size_t r) const {
    return {values_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }

  Integer at(std::size_t r, std::size_t c) const;
  std::vector<MatrixEntry> entries() const;
  std::vector<std::vector<Integer>> to_dense() const;

  SparseIntMatrix transpose() const;
  SparseIntMatrix multiply(const SparseIntMatrix& rhs) const;
  std::vector<Integer> multiply(std::span<const Integer> x) const;
  std::vector<Rational> multiply(std::span<const Rational> x) const;
  /// Columns of *this followed by columns of rhs.
  SparseIntMatrix hconcat(const SparseIntMatrix& rhs) const;
  /// Keeps the listed columns, in the given order.
  SparseIntMatrix select_columns(std::span<const std::size_t> columns) const;
  std::vector<Integer> column(std::size_t c) const;

  friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::size_t> col_idx_;
  std::vector<Integer> values_;
};

/// Builds a matrix whose columns are the given vectors (all of length rows).
SparseIntMatrix matrix_from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns);

}  // namespace dcoh
