#pragma once

#include "finsub/chain_complex.hpp"
#include "finsub/simplicial.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace finsub {

/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheEnv = "FINSUB_CACHE_DIR";

/// Content-addressed store of boundary matrices, one triplet file per
/// (space digest, degree). Writes go to a temporary file and are renamed into
/// place, so concurrent writers never expose partial files.
class BoundaryCache {
 public:
  explicit BoundaryCache(std::filesystem::path dir);

  /// Directory from the environment variable, if set and non-empty.
  static std::optional<std::filesystem::path> from_environment();

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<SparseIntMatrix> load(const std::string& digest, std::size_t degree) const;
  void store(const std::string& digest, std::size_t degree, const SparseIntMatrix& m) const;

  struct Stats {
    std::size_t entries = 0;
    std::uintmax_t bytes = 0;
  };
  Stats stats() const;
  /// Removes every cache entry; returns the number removed.
  std::size_t clear() const;

  /// Provider for normalized_complex backed by this cache.
  BoundaryProvider provider(const std::string& digest) const;

 private:
  std::filesystem::path file(const std::string& digest, std::size_t degree) const;
  std::filesystem::path dir_;
};

/// Hex SHA-256 over the face and degeneracy tables, the reduced flag and the
/// excluded simplices: everything the normalized boundary matrices depend on.
std::string chains_digest(const SimplicialSet& x, bool reduced, const std::vector<std::vector<bool>>* exclude = nullptr);

}  // namespace finsub
