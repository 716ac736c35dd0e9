#pragma once

#include "finsub/matrix.hpp"
#include "finsub/simplicial.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace finsub {

enum class Orientation { chain, cochain };

/// Free complex of finite rank in degrees 0..top.
///
/// Chain orientation: differentials[k] maps degree k to degree k-1 for k >= 1;
/// differentials[0] is the augmentation (1 x dims[0]) when `augmented`, else an
/// empty 0 x dims[0] matrix. Cochain orientation: differentials[k] maps degree k
/// to degree k+1, the last one has zero rows.
///
/// When `truncated` is set the map entering the top degree from above is
/// missing, so the top degree is not reported by `homology`.
struct ChainComplex {
  Orientation orientation = Orientation::chain;
  std::vector<std::size_t> dims;
  std::vector<SparseIntMatrix> differentials;
  bool augmented = false;
  bool truncated = true;

  std::size_t top() const { return dims.size() - 1; }
  /// Highest degree with a trustworthy homology group, or nullopt when none.
  std::optional<std::size_t> reported_top() const;

  /// Differential leaving degree k.
  const SparseIntMatrix& out(std::size_t k) const { return differentials[k]; }
  /// Differential arriving in degree k, or nullptr when it does not exist.
  const SparseIntMatrix* in(std::size_t k) const;
};

/// Shape consistency plus d o d = 0. Returns a description of the first failure.
std::optional<std::string> check_complex(const ChainComplex& c);

/// One flag per basis element per degree.
using CellMask = std::vector<std::vector<bool>>;

/// The subcomplex on the flagged cells and the quotient on the rest, with
/// position lists into the parent basis. Throws std::invalid_argument when the
/// flagged cells are not closed under the differential.
struct Split {
  ChainComplex sub;
  ChainComplex quotient;
  std::vector<std::vector<Index>> sub_cells;
  std::vector<std::vector<Index>> quotient_cells;
};

/// The subcomplex keeps the augmentation of `c`; the quotient never carries one.
Split split(const ChainComplex& c, const CellMask& sub);

/// Normalized chains of a simplicial set, with the map between basis positions
/// and simplices.
struct NormalizedChains {
  ChainComplex complex;
  /// basis[k][b] is the level-k simplex of basis position b.
  std::vector<std::vector<Index>> basis;
  /// position[k][x] is the basis position of simplex x, kNoIndex when x is
  /// degenerate or excluded.
  std::vector<std::vector<Index>> position;

  /// Flags the basis cells whose simplices are flagged in a levelwise mask.
  CellMask cell_mask(const std::vector<std::vector<bool>>& simplices) const;
};

/// Hook for the boundary matrix of degree k >= 1: either returns a stored
/// matrix or calls `build` (and may store its result).
using BoundaryProvider =
    std::function<SparseIntMatrix(std::size_t k, const std::function<SparseIntMatrix()>& build)>;

/// Degrees 0..maxdeg+1 are built (capped at the truncation). Basis in degree k
/// is the non-degenerate level-k simplices not flagged in `exclude`; boundary
/// terms landing on degenerate or excluded simplices are dropped.
NormalizedChains normalized_complex(const SimplicialSet& x, bool reduced, std::optional<std::size_t> maxdeg = {},
                                    const std::vector<std::vector<bool>>* exclude = nullptr,
                                    const BoundaryProvider& provider = {});

/// Chains of X relative to a levelwise-closed mask.
NormalizedChains relative_complex(const SimplicialSet& x, const std::vector<std::vector<bool>>& a,
                                  std::optional<std::size_t> maxdeg = {});
/// Chains of X relative to the image of an injective simplicial map.
/// Throws ValidationError when A is invalid.
NormalizedChains relative_complex(const SimplicialSet& x, const SimplicialMap& a,
                                  std::optional<std::size_t> maxdeg = {});

/// Chain map induced by f on normalized chains, degree k: a dims_k(target) x
/// dims_k(source) matrix.
SparseIntMatrix chain_map(const SimplicialMap& f, const NormalizedChains& source, const NormalizedChains& target,
                          std::size_t k);

/// Alternating sum of basis sizes over all stored degrees; the augmentation
/// counts as one cell in degree -1.
long long euler_characteristic(const ChainComplex& c);

}  // namespace finsub
