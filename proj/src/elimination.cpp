#include "elimination.hpp"

#include <algorithm>
#include <queue>

namespace finsub::detail {

EliminationMatrix::EliminationMatrix(const SparseIntMatrix& m)
    : cols_(m.cols()), rows_(m.rows()), row_alive_(m.rows(), true), col_alive_(m.cols(), true) {
  for (Index c = 0; c < m.cols(); ++c) {
    cols_[c] = m.column(c);
    for (const auto& e : cols_[c]) rows_[e.first].push_back(c);
  }
}

Integer EliminationMatrix::value(Index r, Index c) const {
  const auto& col = cols_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, Index row) { return e.first < row; });
  return (it != col.end() && it->first == r) ? it->second : Integer(0);
}

void EliminationMatrix::row_insert(Index r, Index c) {
  auto& row = rows_[r];
  row.insert(std::lower_bound(row.begin(), row.end(), c), c);
}

void EliminationMatrix::row_erase(Index r, Index c) {
  auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c);
  if (it != row.end() && *it == c) row.erase(it);
}

void EliminationMatrix::axpy(Index dst, Index src, const Integer& factor, const Integer& scale) {
  const Column& a = cols_[dst];
  const Column& b = cols_[src];
  Column out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, scale == 1 ? a[i].second : Integer(scale * a[i].second));
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -factor * b[j].second);
      row_insert(b[j].first, dst);
      ++j;
    } else {
      Integer v = scale * a[i].second - factor * b[j].second;
      if (v == 0) {
        row_erase(a[i].first, dst);
      } else {
        out.emplace_back(a[i].first, std::move(v));
      }
      ++i;
      ++j;
    }
  }
  cols_[dst] = std::move(out);
}

void EliminationMatrix::drop_row(Index r, std::vector<Index>* touched) {
  if (!row_alive_[r]) return;
  for (Index c : rows_[r]) {
    auto& col = cols_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, Index row) { return e.first < row; });
    col.erase(it);
    if (touched) touched->push_back(c);
  }
  rows_[r].clear();
  row_alive_[r] = false;
}

void EliminationMatrix::drop_col(Index c) {
  if (!col_alive_[c]) return;
  for (const auto& e : cols_[c]) row_erase(e.first, c);
  cols_[c].clear();
  col_alive_[c] = false;
}

void EliminationMatrix::unit_pivot(Index r, Index c, std::vector<Index>* touched) {
  const Integer u = value(r, c);
  const std::vector<Index> others = rows_[r];
  for (Index x : others) {
    if (x == c) continue;
    const Integer a = value(r, x);
    axpy(x, c, a * u, 1);
    if (touched) touched->push_back(x);
  }
  drop_col(c);
  drop_row(r);
}

void EliminationMatrix::fraction_free_pivot(Index r, Index c, std::vector<Index>* touched) {
  const Integer u = value(r, c);
  const std::vector<Index> others = rows_[r];
  for (Index x : others) {
    if (x == c) continue;
    const Integer a = value(r, x);
    axpy(x, c, a, u);
    Integer g = 0;
    for (const auto& e : cols_[x]) {
      g = gcd(g, e.second);
      if (g == 1) break;
    }
    if (g > 1) {
      for (auto& e : cols_[x]) e.second /= g;
    }
    if (touched) touched->push_back(x);
  }
  drop_col(c);
  drop_row(r);
}

SparseIntMatrix EliminationMatrix::residual(std::vector<Index>* row_ids, std::vector<Index>* col_ids) const {
  std::vector<Index> rpos(rows(), kNoIndex);
  std::vector<Index> rids;
  std::vector<Index> cids;
  for (Index r = 0; r < rows(); ++r) {
    if (row_alive_[r]) {
      rpos[r] = static_cast<Index>(rids.size());
      rids.push_back(r);
    }
  }
  for (Index c = 0; c < cols(); ++c) {
    if (col_alive_[c]) cids.push_back(c);
  }
  SparseIntMatrix out(rids.size(), cids.size());
  for (std::size_t j = 0; j < cids.size(); ++j) {
    Column col;
    for (const auto& e : cols_[cids[j]]) col.emplace_back(rpos[e.first], e.second);
    out.set_column(j, std::move(col));
  }
  if (row_ids) *row_ids = std::move(rids);
  if (col_ids) *col_ids = std::move(cids);
  return out;
}

std::size_t eliminate_units(EliminationMatrix& m, const std::function<void(Index, Index)>& before_pivot) {
  using Item = std::pair<std::size_t, Index>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (Index c = 0; c < m.cols(); ++c) {
    if (m.col_alive(c) && !m.column(c).empty()) heap.emplace(m.column(c).size(), c);
  }
  std::size_t pivots = 0;
  std::vector<Index> touched;
  while (!heap.empty()) {
    const auto [count, c] = heap.top();
    heap.pop();
    if (!m.col_alive(c) || m.column(c).empty()) continue;
    if (m.column(c).size() != count) {
      heap.emplace(m.column(c).size(), c);
      continue;
    }
    Index best = kNoIndex;
    std::size_t best_weight = 0;
    for (const auto& [r, v] : m.column(c)) {
      if (!is_unit(v)) continue;
      const std::size_t w = m.row(r).size();
      if (best == kNoIndex || w < best_weight) {
        best = r;
        best_weight = w;
      }
    }
    if (best == kNoIndex) continue;  // revisited only if a later pivot touches it
    if (before_pivot) before_pivot(best, c);
    touched.clear();
    m.unit_pivot(best, c, &touched);
    ++pivots;
    for (Index x : touched) {
      if (m.col_alive(x) && !m.column(x).empty()) heap.emplace(m.column(x).size(), x);
    }
  }
  return pivots;
}

}  // namespace finsub::detail
