#pragma once

#include "finsub/matrix.hpp"

#include <optional>
#include <vector>

namespace finsub {

/// Smith normal form of a dense matrix with the unimodular transforms and
/// their inverses: left * M * right == diagonal, left * left_inverse == I.
struct DenseSmith {
  DenseIntMatrix diagonal;
  DenseIntMatrix left;
  DenseIntMatrix left_inverse;
  DenseIntMatrix right;
  DenseIntMatrix right_inverse;
  /// Positive diagonal entries d_1 | d_2 | ... | d_r, r = rank over Q.
  std::vector<Integer> factors;
};

/// When `track` is false only `diagonal` and `factors` are filled in.
DenseSmith dense_smith(DenseIntMatrix m, bool track = true);

struct SmithForm {
  std::vector<Integer> factors;
  /// Present when transforms were requested: left * M * right is diagonal.
  std::optional<DenseIntMatrix> left;
  std::optional<DenseIntMatrix> right;
};

/// Invariant factors of M. Large matrices are first reduced by sparse
/// elimination on +-1 pivots (fewest-entries column, lightest row), the
/// remainder goes to dense elimination, modulo a multiple of the product of
/// the factors when exact entries grow too large. Transforms are computed densely.
SmithForm smith_normal_form(const SparseIntMatrix& m, bool with_transforms = false);

std::vector<Integer> invariant_factors(const SparseIntMatrix& m);

/// Rank over Q by fraction-free sparse elimination.
std::size_t rational_rank(const SparseIntMatrix& m);

}  // namespace finsub
