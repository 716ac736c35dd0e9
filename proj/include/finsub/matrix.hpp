#pragma once

#include "finsub/integer.hpp"
#include "finsub/simplicial.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace finsub {

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  Integer value;
};

/// Column-major sparse integer matrix; no stored zeros, rows sorted within a column.
class SparseIntMatrix {
 public:
  using Entry = std::pair<Index, Integer>;
  using Column = std::vector<Entry>;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  /// Duplicate positions are summed; zero sums are dropped.
  static SparseIntMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  const Column& column(std::size_t c) const { return columns_[c]; }
  /// Replaces a column; entries must be sorted by row, in range and non-zero.
  void set_column(std::size_t c, Column entries);

  Integer at(std::size_t r, std::size_t c) const;
  std::vector<Triplet> triplets() const;
  SparseIntMatrix transpose() const;
  /// Rows and columns picked by index lists, in the given order.
  SparseIntMatrix submatrix(const std::vector<Index>& rows, const std::vector<Index>& cols) const;

  /// Dense vector times matrix-on-the-right: returns M * v.
  std::vector<Integer> apply(const std::vector<Integer>& v) const;

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Column> columns_;
};

/// Row-major dense integer matrix.
class DenseIntMatrix {
 public:
  DenseIntMatrix() = default;
  DenseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseIntMatrix identity(std::size_t n);
  static DenseIntMatrix from_sparse(const SparseIntMatrix& m);
  static DenseIntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_diagonal() const;
  std::vector<Integer> column(std::size_t c) const;
  std::vector<Integer> apply(const std::vector<Integer>& v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend DenseIntMatrix operator*(const DenseIntMatrix& a, const DenseIntMatrix& b);
  friend bool operator==(const DenseIntMatrix& a, const DenseIntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

}  // namespace finsub
