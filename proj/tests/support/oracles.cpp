#include "oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

using boost::multiprecision::cpp_rational;

Dense to_dense(const finsub::SparseIntMatrix& m) {
  Dense d(m.rows(), std::vector<Integer>(m.cols(), 0));
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.column(c)) d[r][c] = v;
  }
  return d;
}

finsub::SparseIntMatrix to_sparse(const Dense& m) {
  std::vector<finsub::Triplet> t;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (m[r][c] != 0) t.push_back({r, c, m[r][c]});
    }
  }
  return finsub::SparseIntMatrix::from_triplets(m.size(), cols, std::move(t));
}

Integer determinant(Dense m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

}  // namespace

std::vector<Integer> divisor_factors(const Dense& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Integer> factors;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs;
    std::vector<std::vector<std::size_t>> cs;
    combinations(rows, k, rs);
    combinations(cols, k, cs);
    Integer g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        Dense minor(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[r[i]][c[j]];
        }
        g = finsub::gcd(g, abs_int(determinant(std::move(minor))));
        if (g == 1) break;
      }
      if (g == 1) break;
    }
    if (g == 0) break;
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

std::vector<Integer> naive_snf(Dense m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // smallest non-zero entry of the remaining block goes to (t, t)
      std::size_t pr = rows;
      std::size_t pc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (m[r][c] != 0 && (pr == rows || abs_int(m[r][c]) < abs_int(m[pr][pc]))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) {
        std::sort(diag.begin(), diag.end());
        return diag;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const Integer q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        clean = clean && m[r][t] == 0;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const Integer q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        clean = clean && m[t][c] == 0;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m[r][c] % m[t][t] != 0) {
            for (std::size_t j = t; j < cols; ++j) m[t][j] += m[r][j];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(abs_int(m[t][t]));
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

std::size_t naive_rank(const Dense& in) {
  const std::size_t rows = in.size();
  const std::size_t cols = rows ? in[0].size() : 0;
  std::vector<std::vector<cpp_rational>> m(rows, std::vector<cpp_rational>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = cpp_rational(in[r][c]);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const cpp_rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<finsub::HomologyGroup> naive_homology(const finsub::ChainComplex& c) {
  const auto top = c.reported_top();
  std::vector<finsub::HomologyGroup> out;
  if (!top) return out;
  const bool chain = c.orientation == finsub::Orientation::chain;
  auto entering = [&](std::size_t k) -> const finsub::SparseIntMatrix* {
    if (chain) return k + 1 < c.differentials.size() ? &c.differentials[k + 1] : nullptr;
    return k == 0 ? nullptr : &c.differentials[k - 1];
  };
  for (std::size_t k = 0; k <= *top; ++k) {
    const std::size_t leaving = naive_rank(to_dense(c.differentials[k]));
    finsub::HomologyGroup g;
    std::size_t image = 0;
    if (const auto* in = entering(k)) {
      for (const auto& f : naive_snf(to_dense(*in))) {
        ++image;
        if (f > 1) g.torsion.push_back(f);
      }
    }
    g.rank = c.dims[k] - leaving - image;
    out.push_back(std::move(g));
  }
  return out;
}

Dense random_matrix(std::mt19937_64& rng, std::size_t max_dim, int bound) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-bound, bound);
  std::uniform_int_distribution<int> sparsity(0, 3);
  const std::size_t rows = dim(rng);
  const std::size_t cols = dim(rng);
  const int zero_weight = sparsity(rng);
  Dense m(rows, std::vector<Integer>(cols, 0));
  for (auto& row : m) {
    for (auto& v : row) {
      if (std::uniform_int_distribution<int>(0, 3)(rng) < zero_weight) continue;
      v = entry(rng);
    }
  }
  return m;
}

BruteExp brute_exp(const finsub::SimplicialSet& x, std::size_t n) {
  BruteExp b;
  for (std::size_t k = 0; k <= x.trunc(); ++k) {
    std::set<std::vector<finsub::Index>> subsets;
    const std::size_t m = x.size(k);
    // all non-empty subsets of size <= n by bitmask over small levels
    std::vector<std::vector<finsub::Index>> frontier = {{}};
    for (std::size_t size = 1; size <= n; ++size) {
      std::vector<std::vector<finsub::Index>> next;
      for (const auto& s : frontier) {
        const finsub::Index start = s.empty() ? 0 : s.back() + 1;
        for (finsub::Index v = start; v < m; ++v) {
          auto t = s;
          t.push_back(v);
          subsets.insert(t);
          next.push_back(std::move(t));
        }
      }
      frontier = std::move(next);
    }
    b.members.emplace_back(subsets.begin(), subsets.end());
  }
  b.faces.resize(x.trunc() + 1);
  for (std::size_t k = 1; k <= x.trunc(); ++k) {
    const auto& below = b.members[k - 1];
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<finsub::Index> table;
      for (const auto& s : b.members[k]) {
        std::set<finsub::Index> image;
        for (auto v : s) image.insert(x.face(k, i, v));
        const std::vector<finsub::Index> img(image.begin(), image.end());
        table.push_back(static_cast<finsub::Index>(std::lower_bound(below.begin(), below.end(), img) - below.begin()));
      }
      b.faces[k].push_back(std::move(table));
    }
  }
  return b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
