#pragma once

#include "finsub/chain_complex.hpp"
#include "finsub/subset_space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace finsub {

/// Augmented chain complex with a filtration level per basis cell; the
/// augmentation sits at level 0. Ranks are taken over Q.
struct FilteredComplex {
  ChainComplex complex;
  /// levels[m][b] for basis cell b in degree m.
  std::vector<std::vector<int>> levels;
  int max_level = 0;

  /// Number of cells of level <= p in degree m.
  std::size_t filtered_size(std::size_t m, int p) const;
};

/// Description of the first boundary term raising the filtration, if any.
std::optional<std::string> check_filtration(const FilteredComplex& f);

/// Reduced normalized chains of the top space of the tower, each cell at the
/// least stage (1-based) containing it. The basepoint vertex sits at level 0.
FilteredComplex filtered_from_tower(const FiltrationTower& t, std::optional<std::size_t> maxdeg = {});

/// E^r page in (p, q) coordinates, total degree p + q. Only non-zero entries
/// are listed, ordered by (p, q).
struct Page {
  struct Entry {
    int p = 0;
    int q = 0;
    std::size_t dim = 0;
  };
  /// d_r leaving (p, q) towards (p - r, q + r - 1).
  struct Differential {
    int p = 0;
    int q = 0;
    std::size_t rank = 0;
  };

  std::size_t r = 1;
  /// Highest total degree covered.
  std::size_t top_degree = 0;
  std::vector<Entry> entries;
  std::vector<Differential> differentials;

  std::size_t dim(int p, int q) const;
  std::size_t rank_from(int p, int q) const;
  /// Sum of dims per total degree 0..top_degree.
  std::vector<std::size_t> totals() const;
};

/// The E^r page (r >= 1) with the ranks of d_r.
Page page(const FilteredComplex& f, std::size_t r, unsigned jobs = 1);
Page e1_page(const FilteredComplex& f, unsigned jobs = 1);
/// E^{r+1} for a page computed from f.
Page advance(const Page& p, const FilteredComplex& f, unsigned jobs = 1);
/// The page from which all differentials vanish.
Page einfty_page(const FilteredComplex& f, unsigned jobs = 1);
/// Total-degree dims of E^infinity.
std::vector<std::size_t> einfty_totals(const FilteredComplex& f, unsigned jobs = 1);

}  // namespace finsub
