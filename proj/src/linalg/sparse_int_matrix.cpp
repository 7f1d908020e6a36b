#include "dcoh/linalg/sparse_int_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dcoh/linalg/errors.hpp"

namespace dcoh {

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

SparseIntMatrix SparseIntMatrix::from_entries(std::size_t rows, std::size_t cols,
                                              std::vector<MatrixEntry> entries) {
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols)
      throw std::invalid_argument("matrix entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                                  ") out of range");
  }
  std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  SparseIntMatrix m(rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].row == entries[i - 1].row && entries[i].col == entries[i - 1].col)
      throw std::invalid_argument("duplicate matrix entry (" + std::to_string(entries[i].row) + "," +
                                  std::to_string(entries[i].col) + ")");
  }
  for (auto& e : entries) {
    if (e.value == 0) continue;
    ++m.row_ptr_[e.row + 1];
    m.col_idx_.push_back(e.col);
    m.values_.push_back(std::move(e.value));
  }
  for (std::size_t r = 0; r < rows; ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];
  return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<Integer>>& dense, std::size_t cols) {
  std::vector<MatrixEntry> entries;
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != cols) throw DimensionMismatch("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c)
      if (dense[r][c] != 0) entries.push_back({r, c, dense[r][c]});
  }
  return from_entries(dense.size(), cols, std::move(entries));
}

SparseIntMatrix SparseIntMatrix::identity(std::size_t n) {
  SparseIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.row_ptr_[i + 1] = i + 1;
    m.col_idx_.push_back(i);
    m.values_.emplace_back(1);
  }
  return m;
}

bool SparseIntMatrix::is_identity() const {
  if (rows_ != cols_ || values_.size() != rows_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (row_ptr_[r + 1] - row_ptr_[r] != 1 || col_idx_[row_ptr_[r]] != r || values_[row_ptr_[r]] != 1) return false;
  }
  return true;
}

Integer SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  auto cols = row_cols(r);
  auto it = std::lower_bound(cols.begin(), cols.end(), c);
  if (it == cols.end() || *it != c) return Integer(0);
  return values_[row_ptr_[r] + static_cast<std::size_t>(it - cols.begin())];
}

std::vector<MatrixEntry> SparseIntMatrix::entries() const {
  std::vector<MatrixEntry> out;
  out.reserve(values_.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) out.push_back({r, col_idx_[k], values_[k]});
  return out;
}

std::vector<std::vector<Integer>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_, Integer(0)));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) out[r][col_idx_[k]] = values_[k];
  return out;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t(cols_, rows_);
  for (std::size_t c : col_idx_) ++t.row_ptr_[c + 1];
  for (std::size_t i = 0; i < cols_; ++i) t.row_ptr_[i + 1] += t.row_ptr_[i];
  t.col_idx_.resize(values_.size());
  t.values_.resize(values_.size());
  std::vector<std::size_t> fill(t.row_ptr_.begin(), t.row_ptr_.end() - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      std::size_t slot = fill[col_idx_[k]]++;
      t.col_idx_[slot] = r;
      t.values_[slot] = values_[k];
    }
  }
  return t;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product dimension mismatch");
  SparseIntMatrix out(rows_, rhs.cols_);
  std::vector<Integer> acc(rhs.cols_);
  std::vector<char> used(rhs.cols_, 0);
  std::vector<std::size_t> touched;
  for (std::size_t r = 0; r < rows_; ++r) {
    touched.clear();
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      std::size_t mid = col_idx_[k];
      for (std::size_t l = rhs.row_ptr_[mid]; l < rhs.row_ptr_[mid + 1]; ++l) {
        std::size_t c = rhs.col_idx_[l];
        if (!used[c]) {
          used[c] = 1;
          acc[c] = 0;
          touched.push_back(c);
        }
        acc[c] += values_[k] * rhs.values_[l];
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::size_t c : touched) {
      used[c] = 0;
      if (acc[c] == 0) continue;
      out.col_idx_.push_back(c);
      out.values_.push_back(acc[c]);
    }
    out.row_ptr_[r + 1] = out.values_.size();
  }
  return out;
}

std::vector<Integer> SparseIntMatrix::multiply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector dimension mismatch");
  std::vector<Integer> out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      if (x[col_idx_[k]] != 0) out[r] += values_[k] * x[col_idx_[k]];
  return out;
}

std::vector<Rational> SparseIntMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector dimension mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      if (x[col_idx_[k]] != 0) out[r] += Rational(values_[k]) * x[col_idx_[k]];
  return out;
}

SparseIntMatrix SparseIntMatrix::hconcat(const SparseIntMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw DimensionMismatch("hconcat row mismatch");
  SparseIntMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      out.col_idx_.push_back(col_idx_[k]);
      out.values_.push_back(values_[k]);
    }
    for (std::size_t k = rhs.row_ptr_[r]; k < rhs.row_ptr_[r + 1]; ++k) {
      out.col_idx_.push_back(cols_ + rhs.col_idx_[k]);
      out.values_.push_back(rhs.values_[k]);
    }
    out.row_ptr_[r + 1] = out.values_.size();
  }
  return out;
}

SparseIntMatrix SparseIntMatrix::select_columns(std::span<const std::size_t> columns) const {
  std::vector<std::vector<std::size_t>> where(cols_);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] >= cols_) throw std::out_of_range("column selection out of range");
    where[columns[i]].push_back(i);
  }
  std::vector<MatrixEntry> entries;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      for (std::size_t dest : where[col_idx_[k]]) entries.push_back({r, dest, values_[k]});
  return from_entries(rows_, columns.size(), std::move(entries));
}

std::vector<Integer> SparseIntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ptr_ == b.row_ptr_ && a.col_idx_ == b.col_idx_ &&
         a.values_ == b.values_;
}

SparseIntMatrix matrix_from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns) {
  std::vector<MatrixEntry> entries;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      if (columns[c][r] != 0) entries.push_back({r, c, columns[c][r]});
  }
  return SparseIntMatrix::from_entries(rows, columns.size(), std::move(entries));
}

}  // namespace dcoh
