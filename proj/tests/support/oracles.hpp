#pragma once

// Independent reference implementations used to derive and freeze expected
// values. They share only data types with the library.

#include "finsub/chain_complex.hpp"
#include "finsub/homology.hpp"
#include "finsub/integer.hpp"
#include "finsub/simplicial.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using finsub::Integer;
using Dense = std::vector<std::vector<Integer>>;

Dense to_dense(const finsub::SparseIntMatrix& m);
finsub::SparseIntMatrix to_sparse(const Dense& m);

/// Determinant by Bareiss elimination.
Integer determinant(Dense m);

/// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1} where D_k
/// is the gcd of all k x k minors. Exponential; meant for matrices up to 8 x 8.
std::vector<Integer> divisor_factors(const Dense& m);

/// Textbook Smith reduction with no sparse phase and no transforms.
std::vector<Integer> naive_snf(Dense m);

/// Rank over Q by Gaussian elimination on rationals.
std::size_t naive_rank(const Dense& m);

/// Integral homology of a chain complex from dense reductions of each differential.
std::vector<finsub::HomologyGroup> naive_homology(const finsub::ChainComplex& c);

Dense random_matrix(std::mt19937_64& rng, std::size_t max_dim, int bound);

/// exp_n by brute force: sorted member lists per level in lexicographic order
/// and the induced face tables, faces[k][i][s].
struct BruteExp {
  std::vector<std::vector<std::vector<finsub::Index>>> members;
  std::vector<std::vector<std::vector<finsub::Index>>> faces;
};
BruteExp brute_exp(const finsub::SimplicialSet& x, std::size_t n);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace oracle
