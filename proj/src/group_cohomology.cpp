#include "finsub/group_cohomology.hpp"

#include "finsub/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace finsub {

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint8_t> v(n);
  std::iota(v.begin(), v.end(), std::uint8_t{0});
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

int Permutation::sign() const {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) inversions += images_[i] > images_[j];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) s += (i ? " " : "") + std::to_string(images_[i]);
  return s + "]";
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("Permutation: degree mismatch");
  std::vector<std::uint8_t> v(g.degree());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g(h(i));
  return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::uint8_t> v(n);
  std::iota(v.begin(), v.end(), std::uint8_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::string to_string(Action a) { return a == Action::trivial ? "trivial" : "sign"; }

ChainComplex bar_cochain_complex(std::size_t n, Action action, std::size_t maxdeg, const GroupBudget& budget) {
  if (n == 0) throw std::invalid_argument("bar_cochain_complex: n must be positive");
  if (n > budget.max_n) {
    throw BudgetError("bar_cochain_complex: n = " + std::to_string(n) + " exceeds the ceiling " +
                      std::to_string(budget.max_n));
  }
  if (maxdeg > budget.max_degree) {
    throw BudgetError("bar_cochain_complex: degree " + std::to_string(maxdeg) + " exceeds the ceiling " +
                      std::to_string(budget.max_degree));
  }
  const auto perms = all_permutations(n);
  const std::size_t order = perms.size();
  const std::size_t m = order - 1;
  std::vector<std::size_t> dims{1};
  for (std::size_t r = 1; r <= maxdeg + 1; ++r) {
    if (m != 0 && dims.back() > budget.max_cells / m) {
      throw BudgetError("bar_cochain_complex: degree " + std::to_string(r) + " exceeds " +
                        std::to_string(budget.max_cells) + " cells");
    }
    dims.push_back(dims.back() * m);
  }

  std::vector<std::vector<std::size_t>> mult(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const Permutation p = perms[a] * perms[b];
      mult[a][b] = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
    }
  }
  std::vector<int> act(order);
  for (std::size_t a = 0; a < order; ++a) act[a] = action == Action::trivial ? 1 : perms[a].sign();

  ChainComplex c;
  c.orientation = Orientation::cochain;
  c.dims = dims;
  c.truncated = true;
  std::vector<std::size_t> digits;
  for (std::size_t r = 0; r <= maxdeg; ++r) {
    // rows: (r+1)-tuples, columns: r-tuples; digit value t stands for perms[t + 1]
    std::vector<Triplet> t;
    auto encode = [&](const std::vector<std::size_t>& g) {
      std::size_t idx = 0;
      for (auto x : g) idx = idx * m + (x - 1);
      return idx;
    };
    digits.assign(r + 1, 0);
    std::vector<std::size_t> g(r + 1);
    std::vector<std::size_t> face;
    for (std::size_t row = 0; row < dims[r + 1]; ++row) {
      std::size_t rem = row;
      for (std::size_t i = r + 1; i-- > 0;) {
        g[i] = rem % m + 1;
        rem /= m;
      }
      face.assign(g.begin() + 1, g.end());
      t.push_back({row, encode(face), act[g[0]]});
      for (std::size_t i = 0; i < r; ++i) {
        const std::size_t p = mult[g[i]][g[i + 1]];
        if (p == 0) continue;
        face.clear();
        for (std::size_t j = 0; j < i; ++j) face.push_back(g[j]);
        face.push_back(p);
        for (std::size_t j = i + 2; j <= r; ++j) face.push_back(g[j]);
        t.push_back({row, encode(face), (i + 1) % 2 == 0 ? 1 : -1});
      }
      face.assign(g.begin(), g.end() - 1);
      t.push_back({row, encode(face), (r + 1) % 2 == 0 ? 1 : -1});
    }
    c.differentials.push_back(SparseIntMatrix::from_triplets(dims[r + 1], dims[r], std::move(t)));
  }
  c.differentials.emplace_back(0, dims[maxdeg + 1]);
  return c;
}

std::vector<HomologyGroup> group_cohomology(std::size_t n, Action action, std::size_t maxdeg,
                                            const GroupBudget& budget, unsigned jobs) {
  return homology(bar_cochain_complex(n, action, maxdeg, budget), Coefficients::integer, jobs);
}

}  // namespace finsub
