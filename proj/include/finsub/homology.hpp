#pragma once

#include "finsub/chain_complex.hpp"
#include "finsub/integer.hpp"

#include <string>
#include <vector>

namespace finsub {

/// Finitely generated abelian group Z^rank + Z/t_1 + ... with t_1 | t_2 | ..., all t_i >= 2.
struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2", ...
  std::string to_string() const;

  static HomologyGroup free(std::size_t rank) { return {rank, {}}; }

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

enum class Coefficients { integer, rational };

/// Groups in degrees 0..reported_top(). Rational mode leaves torsion empty.
/// Differentials are reduced concurrently on up to `jobs` threads.
std::vector<HomologyGroup> homology(const ChainComplex& c, Coefficients coeffs = Coefficients::integer,
                                    unsigned jobs = 1);

/// Integral homology in one degree together with explicit generators.
///
/// Generators are cycles of the complex, torsion generators first (orders
/// ascending as in the Smith form) then free ones. The basis is fixed by the
/// deterministic reduction: unit pivots are eliminated sparsely and the
/// remainder is put in Smith form with tracked transforms.
class HomologyBasis {
 public:
  HomologyBasis(const ChainComplex& c, std::size_t k);

  std::size_t degree() const { return degree_; }
  /// Basis size of the complex in degree k.
  std::size_t dimension() const { return dim_; }
  const HomologyGroup& group() const { return group_; }
  std::size_t size() const { return generators_.size(); }
  /// Cycle representing generator i, in the basis of degree k.
  const std::vector<Integer>& generator(std::size_t i) const { return generators_[i]; }
  /// Order of generator i; 0 for free generators.
  const Integer& order(std::size_t i) const { return orders_[i]; }
  std::size_t torsion_count() const { return group_.torsion.size(); }

  /// Coordinates of the class of a cycle; torsion coordinates reduced to [0, order).
  std::vector<Integer> coordinates(const std::vector<Integer>& cycle) const;

 private:
  struct ColumnStep {
    Index pivot_row;
    Integer pivot;
    SparseIntMatrix::Column column;
  };
  struct RowStep {
    Index pivot_col;
    Integer pivot;
    std::vector<std::pair<Index, Integer>> row;
  };

  std::size_t degree_ = 0;
  std::size_t dim_ = 0;
  HomologyGroup group_;
  std::vector<ColumnStep> projections_;
  std::vector<RowStep> inclusions_;
  std::vector<Index> residual_cells_;
  DenseIntMatrix to_coords_;
  std::vector<std::size_t> kept_rows_;
  std::vector<std::vector<Integer>> generators_;
  std::vector<Integer> orders_;
};

/// A homomorphism of homology groups written in the generator bases of both sides.
struct HomologyMapDescription {
  std::size_t source_degree = 0;
  std::size_t target_degree = 0;
  HomologyGroup source;
  HomologyGroup target;
  /// images[i] = coordinates of the image of source generator i.
  std::vector<std::vector<Integer>> images;
  /// Target free rank x source free rank block of the map.
  std::vector<std::vector<Integer>> free_matrix;
  /// Rank over Q.
  std::size_t rank = 0;
  /// Invariant factors of the free block: kernel rank is source.rank - rank,
  /// cokernel of the free block is Z^(target.rank - rank) + sum Z/f.
  std::vector<Integer> free_factors;

  bool is_zero() const;
  std::string to_string() const;
};

/// Pushes a chain map (target dims x source dims in degree k) into homology bases.
HomologyMapDescription describe_map(const HomologyBasis& source, const HomologyBasis& target,
                                    const SparseIntMatrix& chain_map);

/// Map induced on H_k by a simplicial map (reduced homology by default).
HomologyMapDescription induced_map(const SimplicialMap& f, std::size_t k, bool reduced = true);

/// Connecting homomorphism H_k(total / sub) -> H_{k-1}(sub) of a subcomplex,
/// from lifting a relative cycle and taking its boundary.
HomologyMapDescription connecting_map(const ChainComplex& total, const CellMask& sub, std::size_t k);

/// Pair (X, A): H_k(X, A) -> reduced H_{k-1}(A).
HomologyMapDescription connecting_map(const SimplicialSet& x, const SimplicialMap& a, std::size_t k);

/// Triple X > A > L given as closed levelwise masks on X: H_k(X, A) -> H_{k-1}(A, L).
HomologyMapDescription connecting_map(const SimplicialSet& x, const std::vector<std::vector<bool>>& a,
                                      const std::vector<std::vector<bool>>& l, std::size_t k);

struct LesReport {
  bool exact = true;
  /// Empty when exact.
  std::string first_failure;
  /// One line per node and map, in sequence order.
  std::vector<std::string> lines;
};

/// Long exact sequence H_k(A) -> H_k(X) -> H_k(X, A) -> H_{k-1}(A) of unreduced
/// homology. Checks rank exactness over Q at every node with a known neighbour
/// and that consecutive integral composites vanish on every generator.
LesReport les_check(const ChainComplex& total, const CellMask& sub);
LesReport les_check(const SimplicialSet& x, const SimplicialMap& a);

}  // namespace finsub
