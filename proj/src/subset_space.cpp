#include "finsub/subset_space.hpp"

#include "finsub/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace finsub {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t binomial(std::uint64_t m, std::uint64_t j) {
  if (j > m) return 0;
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= j; ++i) {
    c = c * (m - j + i) / i;
    if (c > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(c);
}

/// Lexicographic rank of sorted subsets (size 1..n) of an m-element set.
class SubsetRanker {
 public:
  SubsetRanker(std::size_t m, std::size_t n) : m_(m), prefix_(n + 1) {
    // within(a, t): subsets of size <= t of a elements, empty included
    auto within = [](std::size_t a, std::size_t t) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j <= t; ++j) s = sat_add(s, binomial(a, j));
      return s;
    };
    for (std::size_t t = 1; t <= n; ++t) {
      prefix_[t].assign(m + 1, 0);
      for (std::size_t b = 0; b < m; ++b) prefix_[t][b + 1] = prefix_[t][b] + within(m - b - 1, t - 1);
    }
  }

  std::uint64_t rank(std::span<const Index> s) const {
    std::uint64_t r = 0;
    std::size_t lo = 0;
    std::size_t t = prefix_.size() - 1;
    for (std::size_t p = 0; p < s.size(); ++p) {
      r += prefix_[t][s[p]] - prefix_[t][lo];
      if (p + 1 < s.size()) r += 1;
      lo = s[p] + 1;
      --t;
    }
    return r;
  }

 private:
  std::size_t m_;
  std::vector<std::vector<std::uint64_t>> prefix_;
};

void enumerate_subsets(std::size_t m, std::size_t n, SubsetTable& out) {
  std::vector<Index> cur;
  // iterative depth-first walk in lexicographic order
  auto rec = [&](auto&& self, Index start) -> void {
    for (Index a = start; a < m; ++a) {
      cur.push_back(a);
      out.push_back(cur);
      if (cur.size() < n) self(self, a + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

std::string key_of(std::span<const Index> members) {
  return {reinterpret_cast<const char*>(members.data()), members.size() * sizeof(Index)};
}

SubsetSpace carry_members(const SubsetSpace& from, const SimplicialMap& inclusion, BasedSimplicialSet space) {
  SubsetSpace out{std::move(space), {}};
  out.members.resize(inclusion.maps.size());
  for (std::size_t k = 0; k < inclusion.maps.size(); ++k) {
    for (Index x : inclusion.maps[k]) out.members[k].push_back(from.members[k][x]);
  }
  return out;
}

}  // namespace

std::uint64_t subset_count(std::uint64_t m, std::size_t n) {
  std::uint64_t s = 0;
  for (std::size_t j = 1; j <= n; ++j) s = sat_add(s, binomial(m, j));
  return s;
}

void SubsetTable::push_back(std::span<const Index> members) {
  members_.insert(members_.end(), members.begin(), members.end());
  offsets_.push_back(members_.size());
}

void SubsetTable::reserve(std::size_t simplices, std::size_t entries) {
  offsets_.reserve(simplices + 1);
  members_.reserve(entries);
}

SubsetSpace exp_n(const BasedSimplicialSet& x, std::size_t n, std::size_t trunc, const Budget& budget) {
  if (n == 0) throw std::invalid_argument("exp_n needs n >= 1");
  if (trunc > x.trunc()) {
    throw std::invalid_argument("exp_n: truncation " + std::to_string(trunc) + " exceeds the base truncation " +
                                std::to_string(x.trunc()));
  }
  for (std::size_t k = 0; k <= trunc; ++k) {
    const std::uint64_t count = subset_count(x.space.size(k), n);
    if (count > budget.max_simplices_per_level) {
      throw BudgetError("exp_" + std::to_string(n) + " level " + std::to_string(k) + " would hold " +
                        (count == kSaturated ? std::string("more than 2^64") : std::to_string(count)) +
                        " simplices (ceiling " + std::to_string(budget.max_simplices_per_level) + ")");
    }
  }
  const SimplicialSet& base = x.space;
  SubsetSpace out;
  out.members.resize(trunc + 1);
  std::vector<SubsetRanker> rankers;
  SimplicialSet::Tables t;
  for (std::size_t k = 0; k <= trunc; ++k) {
    const std::size_t m = base.size(k);
    out.members[k].reserve(subset_count(m, n), subset_count(m, n) * n);
    enumerate_subsets(m, n, out.members[k]);
    rankers.emplace_back(m, n);
    t.sizes.push_back(out.members[k].size());
  }
  t.faces.resize(trunc + 1);
  t.degeneracies.resize(trunc);
  std::vector<Index> image;
  auto apply = [&](const SubsetTable& table, std::span<const Index> map, const SubsetRanker& ranker,
                   std::vector<Index>& dst) {
    dst.resize(table.size());
    for (std::size_t s = 0; s < table.size(); ++s) {
      image.clear();
      for (Index v : table[s]) image.push_back(map[v]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      dst[s] = static_cast<Index>(ranker.rank(image));
    }
  };
  for (std::size_t k = 1; k <= trunc; ++k) {
    t.faces[k].resize(k + 1);
    for (std::size_t i = 0; i <= k; ++i) apply(out.members[k], base.face_table(k, i), rankers[k - 1], t.faces[k][i]);
  }
  for (std::size_t k = 0; k < trunc; ++k) {
    t.degeneracies[k].resize(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
      apply(out.members[k], base.degeneracy_table(k, j), rankers[k + 1], t.degeneracies[k][j]);
    }
  }
  const Index bp = x.basepoint;
  out.space = BasedSimplicialSet{SimplicialSet(std::move(t)), static_cast<Index>(rankers[0].rank({&bp, 1}))};
  return out;
}

SubsetSpaceWithMap restrict_subsets(const SubsetSpace& x, const std::vector<std::vector<bool>>& keep) {
  auto [sub, inc] = restrict_to(x.space.space, keep);
  const Index old_bp = x.space.basepoint;
  if (!keep[0][old_bp]) throw std::invalid_argument("restrict_subsets: basepoint must be kept");
  Index bp = 0;
  for (Index i = 0; i < inc.maps[0].size(); ++i) {
    if (inc.maps[0][i] == old_bp) bp = i;
  }
  SubsetSpace out = carry_members(x, inc, BasedSimplicialSet{sub, bp});
  return {std::move(out), std::move(inc)};
}

SubsetSpaceWithMap quotient_subsets(const SubsetSpace& x, const SimplicialMap& a) {
  auto [q, qmap] = quotient(x.space.space, a);
  SubsetSpace out{q, {}};
  out.members.resize(qmap.maps.size());
  for (std::size_t k = 0; k < qmap.maps.size(); ++k) {
    std::vector<Index> preimage(q.space.size(k), kNoIndex);
    for (Index s = 0; s < qmap.maps[k].size(); ++s) {
      if (qmap.maps[k][s] != 0) preimage[qmap.maps[k][s]] = s;
    }
    out.members[k].push_back({});
    for (std::size_t p = 1; p < preimage.size(); ++p) out.members[k].push_back(x.members[k][preimage[p]]);
  }
  return {std::move(out), std::move(qmap)};
}

SimplicialMap subset_inclusion(const SubsetSpace& small, const SubsetSpace& big) {
  const std::size_t top = small.space.trunc();
  if (big.space.trunc() < top) throw std::invalid_argument("subset_inclusion: target truncated too low");
  SimplicialMap f{small.space.space, big.space.space, {}};
  f.maps.resize(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    std::unordered_map<std::string, Index> lookup;
    lookup.reserve(big.members[k].size());
    for (Index s = 0; s < big.members[k].size(); ++s) lookup.emplace(key_of(big.members[k][s]), s);
    f.maps[k].reserve(small.members[k].size());
    for (Index s = 0; s < small.members[k].size(); ++s) {
      auto it = lookup.find(key_of(small.members[k][s]));
      if (it == lookup.end()) {
        throw std::invalid_argument("subset_inclusion: simplex " + std::to_string(s) + " at level " +
                                    std::to_string(k) + " has no counterpart");
      }
      f.maps[k].push_back(it->second);
    }
  }
  return f;
}

namespace {

std::vector<std::vector<bool>> mask_where(const SubsetSpace& x, auto&& pred) {
  std::vector<std::vector<bool>> keep(x.space.trunc() + 1);
  for (std::size_t k = 0; k <= x.space.trunc(); ++k) {
    keep[k].resize(x.members[k].size());
    for (Index s = 0; s < x.members[k].size(); ++s) keep[k][s] = pred(k, s);
  }
  return keep;
}

std::vector<std::vector<bool>> based_mask(const SubsetSpace& e, const BasedSimplicialSet& x) {
  std::vector<Index> star(e.space.trunc() + 1);
  for (std::size_t k = 0; k < star.size(); ++k) star[k] = x.degenerate_basepoint(k);
  return mask_where(e, [&](std::size_t k, Index s) {
    const auto m = e.members[k][s];
    return std::binary_search(m.begin(), m.end(), star[k]);
  });
}

SubsetSpace bar_of(const SubsetSpace& e, const BasedSimplicialSet& x) {
  auto based = restrict_subsets(e, based_mask(e, x));
  return quotient_subsets(e, based.map).space;
}

}  // namespace

SubsetSpaceWithMap exp_based(const BasedSimplicialSet& x, std::size_t n, std::size_t trunc, const Budget& budget) {
  const SubsetSpace e = exp_n(x, n, trunc, budget);
  return restrict_subsets(e, based_mask(e, x));
}

SubsetSpaceWithMap exp_bar(const BasedSimplicialSet& x, std::size_t n, std::size_t trunc, const Budget& budget) {
  const SubsetSpace e = exp_n(x, n, trunc, budget);
  auto based = restrict_subsets(e, based_mask(e, x));
  return quotient_subsets(e, based.map);
}

SubsetSpace conf_plus(const BasedSimplicialSet& x, std::size_t n, ConfModel model, std::size_t trunc,
                      const Budget& budget) {
  if (n == 0) throw std::invalid_argument("conf_plus needs n >= 1");
  if (model == ConfModel::based) {
    const SubsetSpace top = exp_based(x, n + 1, trunc, budget).space;
    auto lower = restrict_subsets(top, mask_where(top, [&](std::size_t k, Index s) {
                                    return top.cardinality(k, s) <= n;
                                  }));
    return quotient_subsets(top, lower.map).space;
  }
  const SubsetSpace top = exp_bar(x, n, trunc, budget).space;
  // the collapsed class has no members, so it stays in the lower stage
  auto lower = restrict_subsets(top, mask_where(top, [&](std::size_t k, Index s) {
                                  return top.cardinality(k, s) <= n - 1;
                                }));
  return quotient_subsets(top, lower.map).space;
}

SimplicialMap FiltrationTower::inclusion(std::size_t from, std::size_t to) const {
  if (from > to || to >= spaces.size()) throw std::invalid_argument("tower inclusion out of range");
  SimplicialMap f = identity_map(spaces[from].space.space);
  for (std::size_t k = from; k < to; ++k) f = compose(inclusions[k], f);
  return f;
}

FiltrationTower tower(const BasedSimplicialSet& x, std::size_t n, TowerVariant variant, std::size_t trunc,
                      const Budget& budget) {
  if (n == 0) throw std::invalid_argument("tower needs n >= 1");
  FiltrationTower t;
  t.variant = variant;
  const SubsetSpace top = exp_n(x, n, trunc, budget);
  for (std::size_t stage = 1; stage <= n; ++stage) {
    SubsetSpace e = stage == n ? top
                               : restrict_subsets(top, mask_where(top, [&](std::size_t k, Index s) {
                                   return top.cardinality(k, s) <= stage;
                                 })).space;
    switch (variant) {
      case TowerVariant::exp:
        t.spaces.push_back(std::move(e));
        break;
      case TowerVariant::based:
        t.spaces.push_back(restrict_subsets(e, based_mask(e, x)).space);
        break;
      case TowerVariant::bar:
        t.spaces.push_back(bar_of(e, x));
        break;
    }
  }
  for (std::size_t k = 0; k + 1 < n; ++k) t.inclusions.push_back(subset_inclusion(t.spaces[k], t.spaces[k + 1]));
  return t;
}

}  // namespace finsub
