#pragma once

#include "finsub/simplicial.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace finsub {

/// Resource ceiling for subset-space constructions.
struct Budget {
  std::size_t max_simplices_per_level = 5'000'000;
};

/// Number of non-empty subsets of size at most n of an m-element set,
/// saturating at UINT64_MAX.
std::uint64_t subset_count(std::uint64_t m, std::size_t n);

/// Flat table of sorted member lists, one per simplex of a level.
class SubsetTable {
 public:
  std::size_t size() const { return offsets_.size() - 1; }
  std::span<const Index> operator[](std::size_t x) const {
    return {members_.data() + offsets_[x], members_.data() + offsets_[x + 1]};
  }
  void push_back(std::span<const Index> members);
  void reserve(std::size_t simplices, std::size_t entries);

 private:
  std::vector<Index> members_;
  std::vector<std::uint64_t> offsets_{0};
};

/// A space built from subsets of a based simplicial set, together with the
/// underlying subset of every simplex. A collapsed class has no members.
struct SubsetSpace {
  BasedSimplicialSet space;
  std::vector<SubsetTable> members;

  std::size_t cardinality(std::size_t level, Index x) const { return members[level][x].size(); }
};

/// A subset space with a map into or out of it.
struct SubsetSpaceWithMap {
  SubsetSpace space;
  SimplicialMap map;
};

/// Levelwise finite subset space: level k holds the non-empty subsets of X_k of
/// size at most n in lexicographic order of their sorted member lists, with
/// d_i(S) = {d_i x : x in S} and likewise for degeneracies. Based at {*}.
/// Throws std::invalid_argument for n = 0 and BudgetError past the ceiling.
SubsetSpace exp_n(const BasedSimplicialSet& x, std::size_t n, std::size_t trunc, const Budget& budget = {});

/// Subsets containing the totally degenerate basepoint simplex, with the
/// inclusion into exp_n(X).
SubsetSpaceWithMap exp_based(const BasedSimplicialSet& x, std::size_t n, std::size_t trunc,
                             const Budget& budget = {});

/// exp_n(X) with the based subsets collapsed, with the quotient map from exp_n(X).
SubsetSpaceWithMap exp_bar(const BasedSimplicialSet& x, std::size_t n, std::size_t trunc,
                           const Budget& budget = {});

enum class ConfModel { based, bar };

/// One-point compactified unordered configuration space of n points in X minus
/// the basepoint, modelled either as exp_{n+1}(X,*)/exp_n(X,*) or as
/// bar-exp_n X / bar-exp_{n-1} X.
SubsetSpace conf_plus(const BasedSimplicialSet& x, std::size_t n, ConfModel model, std::size_t trunc,
                      const Budget& budget = {});

enum class TowerVariant { exp, based, bar };

/// spaces[k] is the (k+1)-point stage; inclusions[k] maps spaces[k] into spaces[k+1].
struct FiltrationTower {
  TowerVariant variant = TowerVariant::exp;
  std::vector<SubsetSpace> spaces;
  std::vector<SimplicialMap> inclusions;

  /// Composite inclusion spaces[from] -> spaces[to], from <= to.
  SimplicialMap inclusion(std::size_t from, std::size_t to) const;
};

FiltrationTower tower(const BasedSimplicialSet& x, std::size_t n, TowerVariant variant, std::size_t trunc,
                      const Budget& budget = {});

/// Sub-space of a subset space on the flagged simplices, members carried along.
SubsetSpaceWithMap restrict_subsets(const SubsetSpace& x, const std::vector<std::vector<bool>>& keep);

/// Quotient of a subset space by an injective map, members carried along.
SubsetSpaceWithMap quotient_subsets(const SubsetSpace& x, const SimplicialMap& a);

/// Inclusion matching simplices by their member lists. Throws
/// std::invalid_argument when some simplex of `small` has no counterpart.
SimplicialMap subset_inclusion(const SubsetSpace& small, const SubsetSpace& big);

}  // namespace finsub
