#include "finsub/chain_complex.hpp"

#include "finsub/errors.hpp"

#include <stdexcept>

namespace finsub {

std::optional<std::size_t> ChainComplex::reported_top() const {
  if (dims.empty()) return std::nullopt;
  if (!truncated) return top();
  if (top() == 0) return std::nullopt;
  return top() - 1;
}

const SparseIntMatrix* ChainComplex::in(std::size_t k) const {
  if (orientation == Orientation::chain) return k + 1 <= top() ? &differentials[k + 1] : nullptr;
  return k >= 1 ? &differentials[k - 1] : nullptr;
}

std::optional<std::string> check_complex(const ChainComplex& c) {
  if (c.dims.size() != c.differentials.size()) return "differential count does not match degree count";
  for (std::size_t k = 0; k < c.dims.size(); ++k) {
    const auto& m = c.differentials[k];
    if (m.cols() != c.dims[k]) return "degree " + std::to_string(k) + ": differential has wrong column count";
    std::size_t rows = 0;
    if (c.orientation == Orientation::chain) {
      rows = k == 0 ? (c.augmented ? 1 : 0) : c.dims[k - 1];
    } else {
      rows = k < c.top() ? c.dims[k + 1] : m.rows();
    }
    if (m.rows() != rows) return "degree " + std::to_string(k) + ": differential has wrong row count";
  }
  for (std::size_t k = 0; k + 1 < c.dims.size(); ++k) {
    const bool zero = c.orientation == Orientation::chain ? (c.differentials[k] * c.differentials[k + 1]).is_zero()
                                                          : (c.differentials[k + 1] * c.differentials[k]).is_zero();
    if (!zero) return "d o d != 0 at degree " + std::to_string(c.orientation == Orientation::chain ? k + 1 : k);
  }
  return std::nullopt;
}

Split split(const ChainComplex& c, const CellMask& sub) {
  if (c.orientation != Orientation::chain) throw std::invalid_argument("split: chain orientation required");
  if (sub.size() != c.dims.size()) throw std::invalid_argument("split: mask degree count mismatch");
  Split s;
  const std::size_t nd = c.dims.size();
  s.sub_cells.resize(nd);
  s.quotient_cells.resize(nd);
  for (std::size_t k = 0; k < nd; ++k) {
    if (sub[k].size() != c.dims[k]) throw std::invalid_argument("split: mask size mismatch");
    for (Index b = 0; b < c.dims[k]; ++b) (sub[k][b] ? s.sub_cells[k] : s.quotient_cells[k]).push_back(b);
  }
  for (std::size_t k = 1; k < nd; ++k) {
    for (Index b : s.sub_cells[k]) {
      for (const auto& e : c.differentials[k].column(b)) {
        if (!sub[k - 1][e.first]) throw std::invalid_argument("split: flagged cells are not a subcomplex");
      }
    }
  }
  for (ChainComplex* part : {&s.sub, &s.quotient}) {
    part->orientation = Orientation::chain;
    part->truncated = c.truncated;
  }
  s.sub.augmented = c.augmented;
  s.quotient.augmented = false;
  const std::vector<Index> aug_row{0};
  const std::vector<Index> none;
  for (std::size_t k = 0; k < nd; ++k) {
    s.sub.dims.push_back(s.sub_cells[k].size());
    s.quotient.dims.push_back(s.quotient_cells[k].size());
    if (k == 0) {
      s.sub.differentials.push_back(c.differentials[0].submatrix(c.augmented ? aug_row : none, s.sub_cells[0]));
      s.quotient.differentials.emplace_back(0, s.quotient_cells[0].size());
    } else {
      s.sub.differentials.push_back(c.differentials[k].submatrix(s.sub_cells[k - 1], s.sub_cells[k]));
      s.quotient.differentials.push_back(c.differentials[k].submatrix(s.quotient_cells[k - 1], s.quotient_cells[k]));
    }
  }
  return s;
}

CellMask NormalizedChains::cell_mask(const std::vector<std::vector<bool>>& simplices) const {
  CellMask m(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    m[k].resize(basis[k].size());
    for (std::size_t b = 0; b < basis[k].size(); ++b) m[k][b] = simplices[k][basis[k][b]];
  }
  return m;
}

NormalizedChains normalized_complex(const SimplicialSet& x, bool reduced, std::optional<std::size_t> maxdeg,
                                    const std::vector<std::vector<bool>>* exclude,
                                    const BoundaryProvider& provider) {
  const std::size_t top = maxdeg ? std::min(*maxdeg + 1, x.trunc()) : x.trunc();
  NormalizedChains n;
  n.basis.resize(top + 1);
  n.position.resize(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    const auto degenerate = degenerate_mask(x, k);
    n.position[k].assign(x.size(k), kNoIndex);
    for (Index s = 0; s < x.size(k); ++s) {
      if (degenerate[s] || (exclude && (*exclude)[k][s])) continue;
      n.position[k][s] = static_cast<Index>(n.basis[k].size());
      n.basis[k].push_back(s);
    }
  }
  ChainComplex& c = n.complex;
  c.orientation = Orientation::chain;
  c.augmented = reduced;
  c.truncated = true;
  for (std::size_t k = 0; k <= top; ++k) {
    c.dims.push_back(n.basis[k].size());
    if (k == 0) {
      std::vector<Triplet> t;
      if (reduced) {
        for (std::size_t b = 0; b < n.basis[0].size(); ++b) t.push_back({0, b, 1});
      }
      c.differentials.push_back(SparseIntMatrix::from_triplets(reduced ? 1 : 0, n.basis[0].size(), std::move(t)));
      continue;
    }
    auto build = [&, k] {
      std::vector<Triplet> t;
      for (std::size_t b = 0; b < n.basis[k].size(); ++b) {
        for (std::size_t i = 0; i <= k; ++i) {
          const Index p = n.position[k - 1][x.face(k, i, n.basis[k][b])];
          if (p != kNoIndex) t.push_back({p, b, (i % 2 == 0) ? 1 : -1});
        }
      }
      return SparseIntMatrix::from_triplets(n.basis[k - 1].size(), n.basis[k].size(), std::move(t));
    };
    SparseIntMatrix d = provider ? provider(k, build) : build();
    if (d.rows() != n.basis[k - 1].size() || d.cols() != n.basis[k].size()) {
      throw std::runtime_error("normalized_complex: supplied boundary matrix has the wrong shape");
    }
    c.differentials.push_back(std::move(d));
  }
  return n;
}

NormalizedChains relative_complex(const SimplicialSet& x, const std::vector<std::vector<bool>>& a,
                                  std::optional<std::size_t> maxdeg) {
  if (a.size() < x.trunc() + 1) throw std::invalid_argument("relative_complex: mask has too few levels");
  for (std::size_t k = 1; k <= x.trunc(); ++k) {
    for (Index s = 0; s < x.size(k); ++s) {
      if (!a[k][s]) continue;
      for (std::size_t i = 0; i <= k; ++i) {
        if (!a[k - 1][x.face(k, i, s)]) {
          throw ValidationError("relative_complex: subspace not closed under d_" + std::to_string(i) + " at level " +
                                std::to_string(k) + ", simplex " + std::to_string(s));
        }
      }
    }
  }
  return normalized_complex(x, false, maxdeg, &a);
}

NormalizedChains relative_complex(const SimplicialSet& x, const SimplicialMap& a, std::optional<std::size_t> maxdeg) {
  if (!(a.target == x)) throw ValidationError("relative_complex: map does not land in X");
  if (!validate(a).empty()) throw ValidationError("relative_complex: map is not simplicial");
  if (!a.is_injective()) throw ValidationError("relative_complex: map is not injective");
  return relative_complex(x, a.image_mask(), maxdeg);
}

SparseIntMatrix chain_map(const SimplicialMap& f, const NormalizedChains& source, const NormalizedChains& target,
                          std::size_t k) {
  std::vector<Triplet> t;
  for (std::size_t b = 0; b < source.basis[k].size(); ++b) {
    const Index p = target.position[k][f(k, source.basis[k][b])];
    if (p != kNoIndex) t.push_back({p, b, 1});
  }
  return SparseIntMatrix::from_triplets(target.basis[k].size(), source.basis[k].size(), std::move(t));
}

long long euler_characteristic(const ChainComplex& c) {
  long long chi = c.augmented ? -1 : 0;
  for (std::size_t k = 0; k < c.dims.size(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(c.dims[k]);
  }
  return chi;
}

}  // namespace finsub
