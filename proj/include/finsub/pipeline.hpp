#pragma once

#include "finsub/cache.hpp"
#include "finsub/homology.hpp"
#include "finsub/subset_space.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace finsub {

/// Base space selector: a sphere model, the torus, or a space file.
struct SpaceSpec {
  enum class Kind { sphere, torus, file };
  Kind kind = Kind::sphere;
  std::size_t d = 2;
  std::filesystem::path path;

  /// "sphere", "torus" or "file:PATH".
  std::string tag() const;
  /// Dimension of the top cell: d, 2, or the highest stored level of a file
  /// holding a non-degenerate simplex.
  std::size_t dimension() const;
  /// Truncation available without limit for models, the file's truncation otherwise.
  std::optional<std::size_t> max_trunc() const;
  BasedSimplicialSet build(std::size_t trunc) const;

  /// Parses "sphere", "torus" or "file:PATH"; throws std::invalid_argument.
  static SpaceSpec parse(const std::string& text, std::size_t d);
};

enum class Construction { expn, based, bar, conf };

std::string to_string(Construction c);
Construction parse_construction(const std::string& s);

/// exp_n and bar constructions report reduced homology of quotients, exp_n and
/// the based subspace report unreduced homology.
bool is_reduced(Construction c);

struct PipelineOptions {
  Coefficients coeffs = Coefficients::integer;
  unsigned jobs = 1;
  Budget budget;
  ConfModel model = ConfModel::bar;
  const BoundaryCache* cache = nullptr;
};

/// Chain complex of a construction on X, truncated at `trunc`. Quotients are
/// computed as relative complexes of exp_n X rather than materialized.
ChainComplex construction_complex(const BasedSimplicialSet& x, Construction c, std::size_t n, std::size_t trunc,
                                  const PipelineOptions& opts = {});

/// Homology in degrees 0..trunc-1.
std::vector<HomologyGroup> construction_homology(const BasedSimplicialSet& x, Construction c, std::size_t n,
                                                 std::size_t trunc, const PipelineOptions& opts = {});

/// Levelwise masks on exp_n X: subsets containing the basepoint simplex, and
/// subsets of cardinality at most m.
std::vector<std::vector<bool>> based_mask(const SubsetSpace& e, const BasedSimplicialSet& x);
std::vector<std::vector<bool>> cardinality_mask(const SubsetSpace& e, std::size_t m);
std::vector<std::vector<bool>> mask_union(const std::vector<std::vector<bool>>& a,
                                          const std::vector<std::vector<bool>>& b);

}  // namespace finsub
