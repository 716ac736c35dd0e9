#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace finsub {

using Index = std::uint32_t;
inline constexpr Index kNoIndex = std::numeric_limits<Index>::max();

/// A simplex addressed by its level and its position in that level's table.
struct SimplexRef {
  std::size_t level = 0;
  Index index = 0;

  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

/// Finite truncated simplicial set stored as dense face and degeneracy tables.
///
/// Levels 0..trunc are stored. `faces[k][i][x]` is d_i of simplex x at level k
/// (k >= 1, 0 <= i <= k); `degeneracies[k][j][x]` is s_j of simplex x at level k
/// (k < trunc, 0 <= j <= k). The tables are immutable once constructed and shared
/// between copies.
class SimplicialSet {
 public:
  struct Tables {
    std::vector<std::size_t> sizes;
    std::vector<std::vector<std::vector<Index>>> faces;
    std::vector<std::vector<std::vector<Index>>> degeneracies;
    /// Either empty or one label list per level.
    std::vector<std::vector<std::string>> labels;
  };

  SimplicialSet();
  /// Checks table shapes and index ranges; simplicial identities are checked by `validate`.
  explicit SimplicialSet(Tables tables);

  std::size_t trunc() const { return t_->sizes.size() - 1; }
  std::size_t size(std::size_t level) const { return t_->sizes[level]; }
  const std::vector<std::size_t>& level_sizes() const { return t_->sizes; }

  Index face(std::size_t level, std::size_t i, Index x) const { return t_->faces[level][i][x]; }
  Index degeneracy(std::size_t level, std::size_t j, Index x) const {
    return t_->degeneracies[level][j][x];
  }
  std::span<const Index> face_table(std::size_t level, std::size_t i) const {
    return t_->faces[level][i];
  }
  std::span<const Index> degeneracy_table(std::size_t level, std::size_t j) const {
    return t_->degeneracies[level][j];
  }

  bool has_labels() const { return !t_->labels.empty(); }
  /// Empty string when no label is attached.
  const std::string& label(std::size_t level, Index x) const;

  const Tables& tables() const { return *t_; }

  /// Table equality; labels do not participate.
  friend bool operator==(const SimplicialSet& a, const SimplicialSet& b);

 private:
  std::shared_ptr<const Tables> t_;
};

/// A simplicial set together with a vertex chosen as basepoint.
struct BasedSimplicialSet {
  SimplicialSet space;
  Index basepoint = 0;

  /// The iterated degeneracy s_0^k of the basepoint at level k.
  Index degenerate_basepoint(std::size_t level) const;
  std::size_t trunc() const { return space.trunc(); }
};

/// Levelwise map between simplicial sets; `maps[k][x]` is the image of x at level k.
struct SimplicialMap {
  SimplicialSet source;
  SimplicialSet target;
  std::vector<std::vector<Index>> maps;

  Index operator()(std::size_t level, Index x) const { return maps[level][x]; }
  bool is_injective() const;
  /// Levelwise image as a membership mask on the target.
  std::vector<std::vector<bool>> image_mask() const;
};

SimplicialMap identity_map(const SimplicialSet& x);
/// g after f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

struct Violation {
  std::string identity;
  std::size_t level = 0;
  Index index = 0;
};

/// Checks every simplicial identity on every stored simplex.
std::vector<Violation> validate(const SimplicialSet& x);
/// Checks that f commutes with all stored face and degeneracy maps and stays in range.
std::vector<Violation> validate(const SimplicialMap& f);

/// Level-k simplices that are not in the image of any degeneracy from level k-1.
std::vector<SimplexRef> nondegenerate(const SimplicialSet& x, std::size_t k);
std::vector<Index> nondegenerate_indices(const SimplicialSet& x, std::size_t k);
/// mask[x] is true when x is the image of some degeneracy.
std::vector<bool> degenerate_mask(const SimplicialSet& x, std::size_t k);

/// Alternating sum of non-degenerate counts over all stored levels.
long long euler_characteristic(const SimplicialSet& x);

// Builders ------------------------------------------------------------------

/// Delta[d]/boundary: one vertex (the basepoint) and one non-degenerate d-simplex.
///
/// Level k holds the collapsed simplex at index 0 followed by the monotone
/// surjections [k] -> [d] in lexicographic order of their value sequences.
BasedSimplicialSet sphere_model(std::size_t d, std::size_t trunc);

/// Levelwise product of two circle models.
BasedSimplicialSet torus_model(std::size_t trunc);

/// The one-simplex-per-level space.
BasedSimplicialSet point_model(std::size_t trunc);

/// Levelwise Cartesian product, truncated to the smaller of the two truncations.
/// Simplex (a, b) at level k has index a * |Y_k| + b.
SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y);
BasedSimplicialSet product(const BasedSimplicialSet& x, const BasedSimplicialSet& y);

/// Same simplices, levels above `trunc` dropped.
SimplicialSet truncate(const SimplicialSet& x, std::size_t trunc);

/// Sub-simplicial set on the simplices flagged in `keep`, with its inclusion.
/// Throws ValidationError when the flagged simplices are not closed under the
/// structure maps. Relative order of kept simplices is preserved.
std::pair<SimplicialSet, SimplicialMap> restrict_to(const SimplicialSet& x,
                                                    const std::vector<std::vector<bool>>& keep);

/// Smallest sub-simplicial set containing `seeds`, as a membership mask.
std::vector<std::vector<bool>> generated_mask(const SimplicialSet& x,
                                              const std::vector<SimplexRef>& seeds);

/// X/A: the image of the injective map A is collapsed levelwise to one simplex.
///
/// The collapsed simplex takes index 0 at each level and the remaining simplices
/// follow in their original order. Returns the based quotient and the quotient
/// map X -> X/A. Throws ValidationError when A is not injective or not simplicial.
std::pair<BasedSimplicialSet, SimplicialMap> quotient(const SimplicialSet& x, const SimplicialMap& a);

/// Inclusion of the totally degenerate basepoint simplices as a one-point space.
SimplicialMap basepoint_inclusion(const BasedSimplicialSet& x);

}  // namespace finsub
