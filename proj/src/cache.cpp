#include "finsub/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fs = std::filesystem;

namespace finsub {

namespace {

constexpr const char* kExtension = ".tri";
constexpr const char* kMagic = "finsub-triplets 1";

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1) throw std::runtime_error("sha256 init failed");
  }
  ~Sha256() { EVP_MD_CTX_free(ctx_); }
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(const void* data, std::size_t n) { EVP_DigestUpdate(ctx_, data, n); }
  void update_u64(std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    update(b, 8);
  }
  std::string hex() {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_, md, &len);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
  }

 private:
  EVP_MD_CTX* ctx_;
};

}  // namespace

std::string chains_digest(const SimplicialSet& x, bool reduced, const std::vector<std::vector<bool>>* exclude) {
  Sha256 h;
  const std::string tag = "finsub-normalized-chains-v1";
  h.update(tag.data(), tag.size());
  h.update_u64(reduced ? 1 : 0);
  h.update_u64(x.trunc());
  for (std::size_t k = 0; k <= x.trunc(); ++k) h.update_u64(x.size(k));
  for (std::size_t k = 1; k <= x.trunc(); ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      auto t = x.face_table(k, i);
      h.update(t.data(), t.size_bytes());
    }
  }
  for (std::size_t k = 0; k < x.trunc(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      auto t = x.degeneracy_table(k, j);
      h.update(t.data(), t.size_bytes());
    }
  }
  h.update_u64(exclude ? 1 : 0);
  if (exclude) {
    for (const auto& level : *exclude) {
      h.update_u64(level.size());
      std::vector<unsigned char> bits((level.size() + 7) / 8);
      for (std::size_t i = 0; i < level.size(); ++i) {
        if (level[i]) bits[i / 8] |= static_cast<unsigned char>(1u << (i % 8));
      }
      h.update(bits.data(), bits.size());
    }
  }
  return h.hex();
}

BoundaryCache::BoundaryCache(fs::path dir) : dir_(std::move(dir)) {}

std::optional<fs::path> BoundaryCache::from_environment() {
  const char* v = std::getenv(kCacheEnv);
  if (!v || !*v) return std::nullopt;
  return fs::path(v);
}

fs::path BoundaryCache::file(const std::string& digest, std::size_t degree) const {
  return dir_ / (digest + "-d" + std::to_string(degree) + kExtension);
}

std::optional<SparseIntMatrix> BoundaryCache::load(const std::string& digest, std::size_t degree) const {
  std::ifstream in(file(digest, degree));
  if (!in) return std::nullopt;
  std::string magic;
  std::getline(in, magic);
  if (magic != kMagic) return std::nullopt;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t nnz = 0;
  if (!(in >> rows >> cols >> nnz)) return std::nullopt;
  std::vector<Triplet> t;
  t.reserve(nnz);
  for (std::size_t e = 0; e < nnz; ++e) {
    Triplet tr;
    std::string v;
    if (!(in >> tr.row >> tr.col >> v)) return std::nullopt;
    try {
      tr.value = Integer(v);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (tr.row >= rows || tr.col >= cols) return std::nullopt;
    t.push_back(std::move(tr));
  }
  return SparseIntMatrix::from_triplets(rows, cols, std::move(t));
}

void BoundaryCache::store(const std::string& digest, std::size_t degree, const SparseIntMatrix& m) const {
  fs::create_directories(dir_);
  const fs::path target = file(digest, degree);
  std::random_device rd;
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid()) + "." +
                       std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "." +
                       std::to_string(rd());
  {
    std::ofstream out(tmp);
    out << kMagic << '\n' << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
    for (const auto& t : m.triplets()) out << t.row << ' ' << t.col << ' ' << t.value << '\n';
    if (!out) throw std::runtime_error("cache: failed to write " + tmp.string());
  }
  fs::rename(tmp, target);
}

BoundaryCache::Stats BoundaryCache::stats() const {
  Stats s;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return s;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.is_regular_file() && e.path().extension() == kExtension) {
      ++s.entries;
      s.bytes += e.file_size();
    }
  }
  return s;
}

std::size_t BoundaryCache::clear() const {
  std::size_t n = 0;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return 0;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.is_regular_file() && e.path().extension() == kExtension) {
      fs::remove(e.path());
      ++n;
    }
  }
  return n;
}

BoundaryProvider BoundaryCache::provider(const std::string& digest) const {
  return [this, digest](std::size_t k, const std::function<SparseIntMatrix()>& build) {
    if (auto m = load(digest, k)) return *m;
    SparseIntMatrix m = build();
    store(digest, k, m);
    return m;
  };
}

}  // namespace finsub
