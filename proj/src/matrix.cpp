#include "finsub/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace finsub {

SparseIntMatrix SparseIntMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
  SparseIntMatrix m(rows, cols);
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  for (std::size_t i = 0; i < triplets.size();) {
    const auto& t = triplets[i];
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("triplet outside matrix shape");
    Integer sum = 0;
    std::size_t j = i;
    for (; j < triplets.size() && triplets[j].row == t.row && triplets[j].col == t.col; ++j) sum += triplets[j].value;
    if (sum != 0) m.columns_[t.col].emplace_back(static_cast<Index>(t.row), std::move(sum));
    i = j;
  }
  return m;
}

std::size_t SparseIntMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void SparseIntMatrix::set_column(std::size_t c, Column entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first >= rows_ || entries[i].second == 0 || (i > 0 && entries[i - 1].first >= entries[i].first)) {
      throw std::invalid_argument("set_column: entries must be sorted, in range and non-zero");
    }
  }
  columns_.at(c) = std::move(entries);
}

Integer SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.first < row; });
  return (it != col.end() && it->first == r) ? it->second : Integer(0);
}

std::vector<Triplet> SparseIntMatrix::triplets() const {
  std::vector<Triplet> out;
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const auto& [r, v] : columns_[c]) out.push_back({r, c, v});
  }
  return out;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(static_cast<Index>(c), v);
  }
  return t;
}

SparseIntMatrix SparseIntMatrix::submatrix(const std::vector<Index>& rows, const std::vector<Index>& cols) const {
  std::vector<Index> pos(rows_, kNoIndex);
  for (std::size_t i = 0; i < rows.size(); ++i) pos[rows[i]] = static_cast<Index>(i);
  SparseIntMatrix s(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Column col;
    for (const auto& [r, v] : columns_[cols[j]]) {
      if (pos[r] != kNoIndex) col.emplace_back(pos[r], v);
    }
    std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    s.columns_[j] = std::move(col);
  }
  return s;
}

std::vector<Integer> SparseIntMatrix::apply(const std::vector<Integer>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: vector length mismatch");
  std::vector<Integer> out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (const auto& [r, x] : columns_[c]) out[r] += x * v[c];
  }
  return out;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  SparseIntMatrix p(a.rows_, b.cols_);
  std::vector<Integer> acc(a.rows_);
  std::vector<Index> touched;
  std::vector<bool> mark(a.rows_, false);
  for (std::size_t c = 0; c < b.cols_; ++c) {
    touched.clear();
    for (const auto& [k, bv] : b.columns_[c]) {
      for (const auto& [r, av] : a.columns_[k]) {
        if (!mark[r]) {
          mark[r] = true;
          touched.push_back(r);
          acc[r] = 0;
        }
        acc[r] += av * bv;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (Index r : touched) {
      mark[r] = false;
      if (acc[r] != 0) p.columns_[c].emplace_back(r, acc[r]);
    }
  }
  return p;
}

DenseIntMatrix DenseIntMatrix::identity(std::size_t n) {
  DenseIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseIntMatrix DenseIntMatrix::from_sparse(const SparseIntMatrix& s) {
  DenseIntMatrix m(s.rows(), s.cols());
  for (std::size_t c = 0; c < s.cols(); ++c) {
    for (const auto& [r, v] : s.column(c)) m(r, c) = v;
  }
  return m;
}

DenseIntMatrix DenseIntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  DenseIntMatrix m(rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool DenseIntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && (*this)(r, c) != 0) return false;
    }
  }
  return true;
}

std::vector<Integer> DenseIntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Integer> DenseIntMatrix::apply(const std::vector<Integer>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: vector length mismatch");
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] != 0 && (*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

void DenseIntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void DenseIntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void DenseIntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    if ((*this)(src, c) != 0) (*this)(dst, c) += factor * (*this)(src, c);
  }
}

void DenseIntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    if ((*this)(r, src) != 0) (*this)(r, dst) += factor * (*this)(r, src);
  }
}

void DenseIntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

DenseIntMatrix operator*(const DenseIntMatrix& a, const DenseIntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  DenseIntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) p(i, j) += x * b(k, j);
      }
    }
  }
  return p;
}

}  // namespace finsub
