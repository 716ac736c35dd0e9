#pragma once

#include "finsub/chain_complex.hpp"
#include "finsub/homology.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace finsub {

/// Bijection of {0..n-1} in one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint8_t> images);
  static Permutation identity(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  std::uint8_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint8_t>& images() const { return images_; }
  bool is_identity() const;
  /// +1 or -1.
  int sign() const;
  std::string to_string() const;

  /// Composition: (g * h)(i) = g(h(i)).
  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// All n! permutations in lexicographic one-line order; the identity comes first.
std::vector<Permutation> all_permutations(std::size_t n);

enum class Action { trivial, sign };

std::string to_string(Action a);

struct GroupBudget {
  std::size_t max_n = 4;
  std::size_t max_degree = 3;
  /// Ceiling on the basis size of the largest cochain group built.
  std::size_t max_cells = 300'000;
};

/// Normalized bar cochains of S_n with coefficients Z (trivial) or Z (sign):
/// degree r has one basis element per r-tuple of non-identity permutations,
/// tuples in lexicographic order. Degrees 0..maxdeg+1 are built so that
/// degrees 0..maxdeg are reported. Throws BudgetError past the ceilings.
ChainComplex bar_cochain_complex(std::size_t n, Action action, std::size_t maxdeg, const GroupBudget& budget = {});

/// H^0..H^maxdeg of S_n.
std::vector<HomologyGroup> group_cohomology(std::size_t n, Action action, std::size_t maxdeg,
                                            const GroupBudget& budget = {}, unsigned jobs = 1);

}  // namespace finsub
