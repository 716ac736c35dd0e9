#pragma once

// Sparse integer elimination engine shared by the Smith normal form, rank and
// homology-basis code.

#include "finsub/matrix.hpp"

#include <functional>
#include <vector>

namespace finsub::detail {

class EliminationMatrix {
 public:
  using Column = SparseIntMatrix::Column;

  explicit EliminationMatrix(const SparseIntMatrix& m);

  std::size_t rows() const { return row_alive_.size(); }
  std::size_t cols() const { return cols_.size(); }
  const Column& column(Index c) const { return cols_[c]; }
  const std::vector<Index>& row(Index r) const { return rows_[r]; }
  bool row_alive(Index r) const { return row_alive_[r]; }
  bool col_alive(Index c) const { return col_alive_[c]; }
  Integer value(Index r, Index c) const;

  /// Removes every entry of row r and marks it dead; appends affected columns to `touched`.
  void drop_row(Index r, std::vector<Index>* touched = nullptr);
  void drop_col(Index c);

  /// Schur complement on a +-1 pivot, then drops the pivot row and column.
  void unit_pivot(Index r, Index c, std::vector<Index>* touched = nullptr);
  /// col_x <- a*col_x - b*col_c (content removed) for every other column in row r,
  /// then drops the pivot row and column. Preserves rank, not the lattice.
  void fraction_free_pivot(Index r, Index c, std::vector<Index>* touched = nullptr);

  /// Live rows and columns as a fresh matrix.
  SparseIntMatrix residual(std::vector<Index>* row_ids = nullptr, std::vector<Index>* col_ids = nullptr) const;

 private:
  void axpy(Index dst, Index src, const Integer& factor, const Integer& scale);
  void row_insert(Index r, Index c);
  void row_erase(Index r, Index c);

  std::vector<Column> cols_;
  std::vector<std::vector<Index>> rows_;
  std::vector<bool> row_alive_;
  std::vector<bool> col_alive_;
};

/// Repeatedly pivots on +-1 entries until none remain. `before_pivot(r, c)` runs
/// ahead of each pivot and may drop rows or columns of other matrices.
/// Returns the number of pivots.
std::size_t eliminate_units(EliminationMatrix& m, const std::function<void(Index, Index)>& before_pivot = {});

}  // namespace finsub::detail
