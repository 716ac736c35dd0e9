#include "finsub/homology.hpp"

#include "elimination.hpp"
#include "finsub/errors.hpp"
#include "finsub/smith.hpp"
#include "parallel.hpp"

#include <sstream>
#include <stdexcept>

namespace finsub {

std::string HomologyGroup::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  if (rank == 1) parts.emplace_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.str());
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
  return s;
}

std::vector<HomologyGroup> homology(const ChainComplex& c, Coefficients coeffs, unsigned jobs) {
  const auto top = c.reported_top();
  if (!top) return {};
  const bool chain = c.orientation == Orientation::chain;
  const std::size_t last = chain ? std::min(*top + 1, c.top()) : *top;

  struct Reduced {
    std::size_t rank = 0;
    std::vector<Integer> factors;
  };
  std::vector<Reduced> red(last + 1);
  detail::parallel_for(last + 1, jobs, [&](std::size_t i) {
    const auto& m = c.differentials[i];
    if (coeffs == Coefficients::integer) {
      red[i].factors = invariant_factors(m);
      red[i].rank = red[i].factors.size();
    } else {
      red[i].rank = rational_rank(m);
    }
  });

  std::vector<HomologyGroup> out;
  for (std::size_t k = 0; k <= *top; ++k) {
    HomologyGroup g;
    std::size_t r = c.dims[k] - red[k].rank;
    if (c.in(k)) {
      const std::size_t in = chain ? k + 1 : k - 1;
      r -= red[in].rank;
      for (const auto& f : red[in].factors) {
        if (f > 1) g.torsion.push_back(f);
      }
    }
    g.rank = r;
    out.push_back(std::move(g));
  }
  return out;
}

HomologyBasis::HomologyBasis(const ChainComplex& c, std::size_t k) : degree_(k) {
  if (c.orientation != Orientation::chain) throw std::invalid_argument("HomologyBasis: chain orientation required");
  const auto top = c.reported_top();
  if (!top || k > *top) throw std::invalid_argument("HomologyBasis: degree " + std::to_string(k) + " not available");
  dim_ = c.dims[k];
  const SparseIntMatrix& a = c.out(k);
  const SparseIntMatrix b = c.in(k) ? *c.in(k) : SparseIntMatrix(dim_, 0);

  detail::EliminationMatrix ea(a);
  detail::EliminationMatrix eb(b);
  detail::eliminate_units(eb, [&](Index row, Index col) {
    projections_.push_back({row, eb.value(row, col), eb.column(col)});
    ea.drop_col(row);
  });
  detail::eliminate_units(ea, [&](Index row, Index col) {
    RowStep step{col, ea.value(row, col), {}};
    for (Index x : ea.row(row)) {
      if (x != col) step.row.emplace_back(x, ea.value(row, x));
    }
    inclusions_.push_back(std::move(step));
    eb.drop_row(col);
  });

  std::vector<Index> a_cols;
  const SparseIntMatrix ar = ea.residual(nullptr, &a_cols);
  std::vector<Index> b_rows;
  const SparseIntMatrix br = eb.residual(&b_rows, nullptr);
  if (a_cols != b_rows) throw std::logic_error("HomologyBasis: residual bases disagree");
  residual_cells_ = a_cols;
  const std::size_t n = a_cols.size();

  const DenseSmith sa = dense_smith(DenseIntMatrix::from_sparse(ar), true);
  const std::size_t r = sa.factors.size();
  const DenseIntMatrix vb = sa.right_inverse * DenseIntMatrix::from_sparse(br);
  DenseIntMatrix bt(n - r, vb.cols());
  DenseIntMatrix vinv_low(n - r, n);
  for (std::size_t i = r; i < n; ++i) {
    for (std::size_t j = 0; j < vb.cols(); ++j) bt(i - r, j) = vb(i, j);
    for (std::size_t j = 0; j < n; ++j) vinv_low(i - r, j) = sa.right_inverse(i, j);
  }
  const DenseSmith sb = dense_smith(bt, true);
  to_coords_ = sb.left * vinv_low;

  const std::size_t s = sb.factors.size();
  for (std::size_t i = 0; i < n - r; ++i) {
    const bool torsion = i < s && sb.factors[i] > 1;
    if (i < s && !torsion) continue;
    kept_rows_.push_back(i);
    orders_.push_back(torsion ? sb.factors[i] : Integer(0));
    if (torsion) {
      group_.torsion.push_back(sb.factors[i]);
    } else {
      ++group_.rank;
    }
    // K * P^-1 e_i, K = V[:, r..]
    std::vector<Integer> y(n - r);
    for (std::size_t j = 0; j < n - r; ++j) y[j] = sb.left_inverse(j, i);
    std::vector<Integer> g(dim_);
    for (std::size_t row = 0; row < n; ++row) {
      Integer v = 0;
      for (std::size_t j = 0; j < n - r; ++j) {
        if (y[j] != 0) v += sa.right(row, r + j) * y[j];
      }
      g[a_cols[row]] = std::move(v);
    }
    for (auto it = inclusions_.rbegin(); it != inclusions_.rend(); ++it) {
      Integer dot = 0;
      for (const auto& [x, v] : it->row) dot += v * g[x];
      g[it->pivot_col] = -it->pivot * dot;
    }
    generators_.push_back(std::move(g));
  }
}

std::vector<Integer> HomologyBasis::coordinates(const std::vector<Integer>& cycle) const {
  if (cycle.size() != dim_) throw std::invalid_argument("coordinates: vector length mismatch");
  std::vector<Integer> z = cycle;
  for (const auto& step : projections_) {
    if (z[step.pivot_row] == 0) continue;
    const Integer f = z[step.pivot_row] * step.pivot;
    for (const auto& [row, v] : step.column) z[row] -= f * v;
  }
  std::vector<Integer> x(residual_cells_.size());
  for (std::size_t i = 0; i < residual_cells_.size(); ++i) x[i] = z[residual_cells_[i]];
  const std::vector<Integer> y = to_coords_.apply(x);
  std::vector<Integer> out;
  out.reserve(kept_rows_.size());
  for (std::size_t i = 0; i < kept_rows_.size(); ++i) {
    out.push_back(orders_[i] == 0 ? y[kept_rows_[i]] : mod_floor(y[kept_rows_[i]], orders_[i]));
  }
  return out;
}

bool HomologyMapDescription::is_zero() const {
  for (const auto& img : images) {
    for (const auto& v : img) {
      if (v != 0) return false;
    }
  }
  return true;
}

std::string HomologyMapDescription::to_string() const {
  std::ostringstream os;
  os << "H_" << source_degree << " = " << source.to_string() << " -> H_" << target_degree << " = "
     << target.to_string() << ", free block [";
  for (std::size_t i = 0; i < free_matrix.size(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < free_matrix[i].size(); ++j) os << (j ? " " : "") << free_matrix[i][j];
  }
  os << "], rank " << rank;
  return os.str();
}

HomologyMapDescription describe_map(const HomologyBasis& source, const HomologyBasis& target,
                                    const SparseIntMatrix& chain_map) {
  if (chain_map.cols() != source.dimension() || chain_map.rows() != target.dimension()) {
    throw std::invalid_argument("describe_map: chain map shape mismatch");
  }
  HomologyMapDescription d;
  d.source_degree = source.degree();
  d.target_degree = target.degree();
  d.source = source.group();
  d.target = target.group();
  for (std::size_t i = 0; i < source.size(); ++i) {
    d.images.push_back(target.coordinates(chain_map.apply(source.generator(i))));
  }
  const std::size_t st = source.torsion_count();
  const std::size_t tt = target.torsion_count();
  std::vector<Triplet> t;
  d.free_matrix.assign(d.target.rank, std::vector<Integer>(d.source.rank));
  for (std::size_t j = 0; j < d.source.rank; ++j) {
    for (std::size_t i = 0; i < d.target.rank; ++i) {
      const Integer& v = d.images[st + j][tt + i];
      d.free_matrix[i][j] = v;
      if (v != 0) t.push_back({i, j, v});
    }
  }
  const SparseIntMatrix fm = SparseIntMatrix::from_triplets(d.target.rank, d.source.rank, std::move(t));
  d.free_factors = invariant_factors(fm);
  d.rank = d.free_factors.size();
  return d;
}

HomologyMapDescription induced_map(const SimplicialMap& f, std::size_t k, bool reduced) {
  const NormalizedChains src = normalized_complex(f.source, reduced, k);
  const NormalizedChains tgt = normalized_complex(f.target, reduced, k);
  return describe_map(HomologyBasis(src.complex, k), HomologyBasis(tgt.complex, k), chain_map(f, src, tgt, k));
}

HomologyMapDescription connecting_map(const ChainComplex& total, const CellMask& sub, std::size_t k) {
  if (k == 0) throw std::invalid_argument("connecting_map: degree must be at least 1");
  const Split s = split(total, sub);
  const HomologyBasis source(s.quotient, k);
  const HomologyBasis target(s.sub, k - 1);
  return describe_map(source, target, total.differentials[k].submatrix(s.sub_cells[k - 1], s.quotient_cells[k]));
}

HomologyMapDescription connecting_map(const SimplicialSet& x, const SimplicialMap& a, std::size_t k) {
  if (!(a.target == x) || !validate(a).empty() || !a.is_injective()) {
    throw ValidationError("connecting_map: A must be an injective simplicial map into X");
  }
  const NormalizedChains c = normalized_complex(x, true, k);
  return connecting_map(c.complex, c.cell_mask(a.image_mask()), k);
}

HomologyMapDescription connecting_map(const SimplicialSet& x, const std::vector<std::vector<bool>>& a,
                                      const std::vector<std::vector<bool>>& l, std::size_t k) {
  for (std::size_t lv = 0; lv <= x.trunc(); ++lv) {
    for (Index s = 0; s < x.size(lv); ++s) {
      if (l[lv][s] && !a[lv][s]) throw ValidationError("connecting_map: L is not contained in A");
    }
  }
  const NormalizedChains rel = relative_complex(x, l, k);
  return connecting_map(rel.complex, rel.cell_mask(a), k);
}

namespace {

SparseIntMatrix inclusion_matrix(std::size_t big, const std::vector<Index>& cells) {
  std::vector<Triplet> t;
  for (std::size_t b = 0; b < cells.size(); ++b) t.push_back({cells[b], b, 1});
  return SparseIntMatrix::from_triplets(big, cells.size(), std::move(t));
}

}  // namespace

LesReport les_check(const ChainComplex& total, const CellMask& sub) {
  ChainComplex c = total;
  if (c.augmented) {
    c.augmented = false;
    c.differentials[0] = SparseIntMatrix(0, c.dims[0]);
  }
  const Split s = split(c, sub);
  LesReport rep;
  const auto top = c.reported_top();
  if (!top) return rep;
  const std::size_t tk = *top;

  std::vector<HomologyBasis> ha, hx, hq;
  std::vector<SparseIntMatrix> inc, proj, bd;
  for (std::size_t k = 0; k <= tk; ++k) {
    ha.emplace_back(s.sub, k);
    hx.emplace_back(c, k);
    hq.emplace_back(s.quotient, k);
    inc.push_back(inclusion_matrix(c.dims[k], s.sub_cells[k]));
    proj.push_back(inclusion_matrix(c.dims[k], s.quotient_cells[k]).transpose());
    bd.push_back(k == 0 ? SparseIntMatrix()
                        : c.differentials[k].submatrix(s.sub_cells[k - 1], s.quotient_cells[k]));
  }
  std::vector<HomologyMapDescription> mi, mj, md;
  for (std::size_t k = 0; k <= tk; ++k) {
    mi.push_back(describe_map(ha[k], hx[k], inc[k]));
    mj.push_back(describe_map(hx[k], hq[k], proj[k]));
    md.push_back(k == 0 ? HomologyMapDescription{} : describe_map(hq[k], ha[k - 1], bd[k]));
  }

  auto fail = [&](const std::string& msg) {
    rep.lines.push_back("FAIL " + msg);
    if (rep.exact) {
      rep.exact = false;
      rep.first_failure = msg;
    }
  };
  auto rank_check = [&](const std::string& node, std::size_t lhs, std::size_t betti) {
    if (lhs != betti) {
      fail(node + ": image rank + outgoing rank = " + std::to_string(lhs) + ", Betti number " +
           std::to_string(betti));
    }
  };

  for (std::size_t kk = tk + 1; kk-- > 0;) {
    const std::string ks = std::to_string(kk);
    rep.lines.push_back("H_" + ks + "(A) = " + ha[kk].group().to_string() + "  H_" + ks +
                        "(X) = " + hx[kk].group().to_string() + "  H_" + ks + "(X,A) = " + hq[kk].group().to_string());
    rep.lines.push_back("  rank i_" + ks + " = " + std::to_string(mi[kk].rank) + ", rank j_" + ks + " = " +
                        std::to_string(mj[kk].rank) +
                        (kk > 0 ? ", rank d_" + ks + " = " + std::to_string(md[kk].rank) : std::string()));
    if (kk < tk) rank_check("H_" + ks + "(A)", md[kk + 1].rank + mi[kk].rank, ha[kk].group().rank);
    rank_check("H_" + ks + "(X)", mi[kk].rank + mj[kk].rank, hx[kk].group().rank);
    rank_check("H_" + ks + "(X,A)", mj[kk].rank + (kk > 0 ? md[kk].rank : 0), hq[kk].group().rank);

    if (!describe_map(ha[kk], hq[kk], proj[kk] * inc[kk]).is_zero()) fail("j o i != 0 in degree " + ks);
    if (kk > 0) {
      if (!describe_map(hx[kk], ha[kk - 1], bd[kk] * proj[kk]).is_zero()) fail("d o j != 0 in degree " + ks);
      if (!describe_map(hq[kk], hx[kk - 1], inc[kk - 1] * bd[kk]).is_zero()) fail("i o d != 0 in degree " + ks);
    }
  }
  return rep;
}

LesReport les_check(const SimplicialSet& x, const SimplicialMap& a) {
  if (!(a.target == x) || !validate(a).empty() || !a.is_injective()) {
    throw ValidationError("les_check: A must be an injective simplicial map into X");
  }
  const NormalizedChains c = normalized_complex(x, false);
  return les_check(c.complex, c.cell_mask(a.image_mask()));
}

}  // namespace finsub
