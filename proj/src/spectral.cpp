#include "finsub/spectral.hpp"

#include "finsub/smith.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace finsub {

std::size_t FilteredComplex::filtered_size(std::size_t m, int p) const {
  std::size_t n = 0;
  for (int l : levels[m]) n += l <= p;
  return n;
}

std::optional<std::string> check_filtration(const FilteredComplex& f) {
  const auto& c = f.complex;
  for (std::size_t m = 1; m < c.dims.size(); ++m) {
    for (std::size_t b = 0; b < c.dims[m]; ++b) {
      for (const auto& e : c.differentials[m].column(b)) {
        if (f.levels[m - 1][e.first] > f.levels[m][b]) {
          return "degree " + std::to_string(m) + ", cell " + std::to_string(b) + " (level " +
                 std::to_string(f.levels[m][b]) + ") has a boundary term of level " +
                 std::to_string(f.levels[m - 1][e.first]);
        }
      }
    }
  }
  return std::nullopt;
}

FilteredComplex filtered_from_tower(const FiltrationTower& t, std::optional<std::size_t> maxdeg) {
  if (t.spaces.empty()) throw std::invalid_argument("filtered_from_tower: empty tower");
  const std::size_t last = t.spaces.size() - 1;
  const BasedSimplicialSet& top = t.spaces[last].space;
  const NormalizedChains chains = normalized_complex(top.space, true, maxdeg);

  FilteredComplex f;
  f.complex = chains.complex;
  f.max_level = static_cast<int>(t.spaces.size());
  f.levels.resize(chains.basis.size());
  for (std::size_t m = 0; m < chains.basis.size(); ++m) f.levels[m].assign(chains.basis[m].size(), -1);
  for (std::size_t j = 0; j <= last; ++j) {
    const auto mask = t.inclusion(j, last).image_mask();
    for (std::size_t m = 0; m < chains.basis.size(); ++m) {
      for (std::size_t b = 0; b < chains.basis[m].size(); ++b) {
        if (f.levels[m][b] < 0 && mask[m][chains.basis[m][b]]) f.levels[m][b] = static_cast<int>(j + 1);
      }
    }
  }
  if (!chains.basis.empty()) {
    const Index bp = chains.position[0][top.basepoint];
    if (bp != kNoIndex) f.levels[0][bp] = 0;
  }
  for (const auto& lv : f.levels) {
    if (std::find(lv.begin(), lv.end(), -1) != lv.end()) {
      throw std::logic_error("filtered_from_tower: a cell lies in no stage of the tower");
    }
  }
  return f;
}

std::size_t Page::dim(int p, int q) const {
  for (const auto& e : entries) {
    if (e.p == p && e.q == q) return e.dim;
  }
  return 0;
}

std::size_t Page::rank_from(int p, int q) const {
  for (const auto& d : differentials) {
    if (d.p == p && d.q == q) return d.rank;
  }
  return 0;
}

std::vector<std::size_t> Page::totals() const {
  std::vector<std::size_t> t(top_degree + 1, 0);
  for (const auto& e : entries) {
    const int m = e.p + e.q;
    if (m >= 0 && static_cast<std::size_t>(m) <= top_degree) t[m] += e.dim;
  }
  return t;
}

namespace {

/// Ranks of blocks of the differential d_m: rows of level > a, columns of level <= c.
class BlockRanks {
 public:
  explicit BlockRanks(const FilteredComplex& f) : f_(f) {}

  using Key = std::tuple<std::size_t, int, int>;

  Key normalize(std::size_t m, int a, int c) const {
    return {m, std::clamp(a, -1, f_.max_level), std::min(c, f_.max_level)};
  }

  void request(std::size_t m, int a, int c) {
    const Key k = normalize(m, a, c);
    if (trivial(k)) return;
    values_.emplace(k, 0);
  }

  void compute(unsigned jobs) {
    std::vector<Key> keys;
    for (const auto& [k, v] : values_) keys.push_back(k);
    std::vector<std::size_t> out(keys.size());
    detail::parallel_for(keys.size(), jobs, [&](std::size_t i) { out[i] = evaluate(keys[i]); });
    for (std::size_t i = 0; i < keys.size(); ++i) values_[keys[i]] = out[i];
  }

  std::size_t get(std::size_t m, int a, int c) const {
    const Key k = normalize(m, a, c);
    if (trivial(k)) return 0;
    return values_.at(k);
  }

 private:
  bool trivial(const Key& k) const {
    const auto [m, a, c] = k;
    return c < 0 || a >= f_.max_level || m >= f_.complex.differentials.size();
  }

  std::size_t evaluate(const Key& k) const {
    const auto [m, a, c] = k;
    const auto& d = f_.complex.differentials[m];
    std::vector<Index> rows;
    std::vector<Index> cols;
    for (Index b = 0; b < d.cols(); ++b) {
      if (f_.levels[m][b] <= c) cols.push_back(b);
    }
    for (Index r = 0; r < d.rows(); ++r) {
      const int level = m == 0 ? 0 : f_.levels[m - 1][r];
      if (level > a) rows.push_back(r);
    }
    return rational_rank(d.submatrix(rows, cols));
  }

  const FilteredComplex& f_;
  std::map<Key, std::size_t> values_;
};

/// Evaluates the page formulas against a rank source; with `collect` set it
/// only records the blocks it needs.
template <class Ranks>
struct PageAlgebra {
  const FilteredComplex& f;
  Ranks& ranks;
  bool collect;

  long long R(std::size_t m, int a, int c) {
    if (collect) {
      ranks.request(m, a, c);
      return 0;
    }
    return static_cast<long long>(ranks.get(m, a, c));
  }
  // dim { x in F_p C_m : d x in F_{p-r} }
  long long z(int r, int p, std::size_t m) {
    if (p < 0) return 0;
    return static_cast<long long>(f.filtered_size(m, p)) - R(m, p - r, p);
  }
  // dim (F_p C_m  intersect  d F_{p+r} C_{m+1})
  long long b(int r, int p, std::size_t m) {
    if (p < 0) return 0;
    return R(m + 1, -1, p + r) - R(m + 1, p, p + r);
  }
  long long dim(int r, int p, std::size_t m) {
    return z(r, p, m) - z(r - 1, p - 1, m) - b(r - 1, p, m) + b(r, p - 1, m);
  }
  long long rank_from(int r, int p, std::size_t m) {
    const int q = p - r;
    if (q < 0 || m == 0) return 0;
    return b(r, q, m - 1) - b(r + 1, q - 1, m - 1) - b(r - 1, q, m - 1) + b(r, q - 1, m - 1);
  }
};

}  // namespace

Page page(const FilteredComplex& f, std::size_t r, unsigned jobs) {
  if (r == 0) throw std::invalid_argument("page: r must be at least 1");
  const auto top = f.complex.reported_top();
  Page pg;
  pg.r = r;
  if (!top) return pg;
  pg.top_degree = *top;
  const int ri = static_cast<int>(r);

  BlockRanks ranks(f);
  for (bool collect : {true, false}) {
    PageAlgebra<BlockRanks> alg{f, ranks, collect};
    pg.entries.clear();
    pg.differentials.clear();
    for (int p = 0; p <= f.max_level; ++p) {
      for (std::size_t m = 0; m <= *top; ++m) {
        const long long d = alg.dim(ri, p, m);
        const long long k = alg.rank_from(ri, p, m);
        if (collect) continue;
        if (d < 0 || k < 0) throw std::logic_error("page: negative dimension");
        const int q = static_cast<int>(m) - p;
        if (d > 0) pg.entries.push_back({p, q, static_cast<std::size_t>(d)});
        if (k > 0) pg.differentials.push_back({p, q, static_cast<std::size_t>(k)});
      }
    }
    if (collect) ranks.compute(jobs);
  }
  auto by_pq = [](const auto& x, const auto& y) { return std::tie(x.p, x.q) < std::tie(y.p, y.q); };
  std::sort(pg.entries.begin(), pg.entries.end(), by_pq);
  std::sort(pg.differentials.begin(), pg.differentials.end(), by_pq);
  return pg;
}

Page e1_page(const FilteredComplex& f, unsigned jobs) { return page(f, 1, jobs); }

Page advance(const Page& p, const FilteredComplex& f, unsigned jobs) { return page(f, p.r + 1, jobs); }

Page einfty_page(const FilteredComplex& f, unsigned jobs) {
  return page(f, static_cast<std::size_t>(std::max(f.max_level, 0)) + 1, jobs);
}

std::vector<std::size_t> einfty_totals(const FilteredComplex& f, unsigned jobs) {
  return einfty_page(f, jobs).totals();
}

}  // namespace finsub
