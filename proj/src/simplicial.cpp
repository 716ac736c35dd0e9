#include "finsub/simplicial.hpp"

#include "finsub/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace finsub {

namespace {

std::string identity_name(const char* pattern, std::size_t i, std::size_t j) {
  std::string s = pattern;
  auto put = [&s](char key, std::size_t value) {
    for (std::size_t pos = s.find(key); pos != std::string::npos; pos = s.find(key, pos)) {
      s.replace(pos, 1, std::to_string(value));
    }
  };
  put('I', i);
  put('J', j);
  return s;
}

const std::string kEmptyLabel;

}  // namespace

SimplicialSet::SimplicialSet() : SimplicialSet(Tables{{0}, {{}}, {}, {}}) {}

SimplicialSet::SimplicialSet(Tables tables) {
  const std::size_t levels = tables.sizes.size();
  if (levels == 0) throw std::invalid_argument("simplicial set needs at least one level");
  if (tables.faces.size() != levels) throw std::invalid_argument("face table count must equal level count");
  if (tables.degeneracies.size() != levels - 1) {
    throw std::invalid_argument("degeneracy table count must equal trunc");
  }
  for (std::size_t k = 0; k < levels; ++k) {
    const std::size_t expected = k == 0 ? 0 : k + 1;
    if (tables.faces[k].size() != expected) {
      throw std::invalid_argument("level " + std::to_string(k) + " must have " + std::to_string(expected) +
                                  " face maps");
    }
    for (const auto& f : tables.faces[k]) {
      if (f.size() != tables.sizes[k]) throw std::invalid_argument("face table size mismatch at level " + std::to_string(k));
      for (Index v : f) {
        if (v >= tables.sizes[k - 1]) throw std::invalid_argument("face index out of range at level " + std::to_string(k));
      }
    }
  }
  for (std::size_t k = 0; k + 1 < levels; ++k) {
    if (tables.degeneracies[k].size() != k + 1) {
      throw std::invalid_argument("level " + std::to_string(k) + " must have " + std::to_string(k + 1) +
                                  " degeneracy maps");
    }
    for (const auto& s : tables.degeneracies[k]) {
      if (s.size() != tables.sizes[k]) {
        throw std::invalid_argument("degeneracy table size mismatch at level " + std::to_string(k));
      }
      for (Index v : s) {
        if (v >= tables.sizes[k + 1]) {
          throw std::invalid_argument("degeneracy index out of range at level " + std::to_string(k));
        }
      }
    }
  }
  if (!tables.labels.empty()) {
    if (tables.labels.size() != levels) throw std::invalid_argument("label table needs one entry per level");
    for (std::size_t k = 0; k < levels; ++k) {
      if (tables.labels[k].size() != tables.sizes[k]) throw std::invalid_argument("label count mismatch");
    }
  }
  t_ = std::make_shared<const Tables>(std::move(tables));
}

const std::string& SimplicialSet::label(std::size_t level, Index x) const {
  if (t_->labels.empty()) return kEmptyLabel;
  return t_->labels[level][x];
}

bool operator==(const SimplicialSet& a, const SimplicialSet& b) {
  if (a.t_ == b.t_) return true;
  return a.t_->sizes == b.t_->sizes && a.t_->faces == b.t_->faces && a.t_->degeneracies == b.t_->degeneracies;
}

Index BasedSimplicialSet::degenerate_basepoint(std::size_t level) const {
  Index x = basepoint;
  for (std::size_t k = 0; k < level; ++k) x = space.degeneracy(k, 0, x);
  return x;
}

bool SimplicialMap::is_injective() const {
  for (std::size_t k = 0; k < maps.size(); ++k) {
    std::vector<bool> seen(target.size(k), false);
    for (Index y : maps[k]) {
      if (y >= seen.size() || seen[y]) return false;
      seen[y] = true;
    }
  }
  return true;
}

std::vector<std::vector<bool>> SimplicialMap::image_mask() const {
  std::vector<std::vector<bool>> mask(target.trunc() + 1);
  for (std::size_t k = 0; k <= target.trunc(); ++k) {
    mask[k].assign(target.size(k), false);
    if (k < maps.size()) {
      for (Index y : maps[k]) mask[k][y] = true;
    }
  }
  return mask;
}

SimplicialMap identity_map(const SimplicialSet& x) {
  SimplicialMap f{x, x, {}};
  f.maps.resize(x.trunc() + 1);
  for (std::size_t k = 0; k <= x.trunc(); ++k) {
    f.maps[k].resize(x.size(k));
    for (Index i = 0; i < x.size(k); ++i) f.maps[k][i] = i;
  }
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap h{f.source, g.target, {}};
  h.maps.resize(f.maps.size());
  for (std::size_t k = 0; k < f.maps.size(); ++k) {
    h.maps[k].resize(f.maps[k].size());
    for (std::size_t x = 0; x < f.maps[k].size(); ++x) h.maps[k][x] = g.maps[k][f.maps[k][x]];
  }
  return h;
}

std::vector<Violation> validate(const SimplicialSet& x) {
  std::vector<Violation> out;
  const std::size_t top = x.trunc();
  // d_i d_j = d_{j-1} d_i for i < j
  for (std::size_t k = 2; k <= top; ++k) {
    for (std::size_t j = 1; j <= k; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        for (Index s = 0; s < x.size(k); ++s) {
          if (x.face(k - 1, i, x.face(k, j, s)) != x.face(k - 1, j - 1, x.face(k, i, s))) {
            out.push_back({identity_name("d_I d_J = d_{J-1} d_I", i, j), k, s});
          }
        }
      }
    }
  }
  // s_i s_j = s_{j+1} s_i for i <= j
  for (std::size_t k = 0; k + 2 <= top; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        for (Index s = 0; s < x.size(k); ++s) {
          if (x.degeneracy(k + 1, i, x.degeneracy(k, j, s)) != x.degeneracy(k + 1, j + 1, x.degeneracy(k, i, s))) {
            out.push_back({identity_name("s_I s_J = s_{J+1} s_I", i, j), k, s});
          }
        }
      }
    }
  }
  // mixed identities
  for (std::size_t k = 0; k + 1 <= top; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      for (std::size_t i = 0; i <= k + 1; ++i) {
        for (Index s = 0; s < x.size(k); ++s) {
          const Index lhs = x.face(k + 1, i, x.degeneracy(k, j, s));
          Index rhs;
          const char* name;
          if (i < j) {
            rhs = x.degeneracy(k - 1, j - 1, x.face(k, i, s));
            name = "d_I s_J = s_{J-1} d_I";
          } else if (i == j || i == j + 1) {
            rhs = s;
            name = "d_I s_J = id";
          } else {
            rhs = x.degeneracy(k - 1, j, x.face(k, i - 1, s));
            name = "d_I s_J = s_J d_{I-1}";
          }
          if (lhs != rhs) out.push_back({identity_name(name, i, j), k, s});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> validate(const SimplicialMap& f) {
  std::vector<Violation> out;
  const std::size_t top = f.source.trunc();
  if (f.maps.size() != top + 1 || f.target.trunc() < top) {
    out.push_back({"map level count", f.maps.size(), 0});
    return out;
  }
  for (std::size_t k = 0; k <= top; ++k) {
    if (f.maps[k].size() != f.source.size(k)) {
      out.push_back({"map table size", k, 0});
      return out;
    }
    for (Index s = 0; s < f.maps[k].size(); ++s) {
      if (f.maps[k][s] >= f.target.size(k)) {
        out.push_back({"map index in range", k, s});
        return out;
      }
    }
  }
  for (std::size_t k = 1; k <= top; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      for (Index s = 0; s < f.source.size(k); ++s) {
        if (f.maps[k - 1][f.source.face(k, i, s)] != f.target.face(k, i, f.maps[k][s])) {
          out.push_back({identity_name("f d_I = d_I f", i, 0), k, s});
        }
      }
    }
  }
  for (std::size_t k = 0; k < top; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      for (Index s = 0; s < f.source.size(k); ++s) {
        if (f.maps[k + 1][f.source.degeneracy(k, j, s)] != f.target.degeneracy(k, j, f.maps[k][s])) {
          out.push_back({identity_name("f s_J = s_J f", 0, j), k, s});
        }
      }
    }
  }
  return out;
}

std::vector<bool> degenerate_mask(const SimplicialSet& x, std::size_t k) {
  std::vector<bool> mask(x.size(k), false);
  if (k == 0) return mask;
  for (std::size_t j = 0; j < k; ++j) {
    for (Index y : x.degeneracy_table(k - 1, j)) mask[y] = true;
  }
  return mask;
}

std::vector<Index> nondegenerate_indices(const SimplicialSet& x, std::size_t k) {
  const auto mask = degenerate_mask(x, k);
  std::vector<Index> out;
  for (Index s = 0; s < mask.size(); ++s) {
    if (!mask[s]) out.push_back(s);
  }
  return out;
}

std::vector<SimplexRef> nondegenerate(const SimplicialSet& x, std::size_t k) {
  std::vector<SimplexRef> out;
  for (Index s : nondegenerate_indices(x, k)) out.push_back({k, s});
  return out;
}

long long euler_characteristic(const SimplicialSet& x) {
  long long chi = 0;
  for (std::size_t k = 0; k <= x.trunc(); ++k) {
    const auto count = static_cast<long long>(nondegenerate_indices(x, k).size());
    chi += (k % 2 == 0) ? count : -count;
  }
  return chi;
}

BasedSimplicialSet sphere_model(std::size_t d, std::size_t trunc) {
  if (d == 0) throw std::invalid_argument("sphere dimension must be positive");
  SimplicialSet::Tables t;
  // Value sequences of monotone surjections [k] -> [d], per level.
  std::vector<std::vector<std::vector<int>>> seqs(trunc + 1);
  std::vector<std::map<std::vector<int>, Index>> lookup(trunc + 1);
  for (std::size_t k = 0; k <= trunc; ++k) {
    if (k >= d) {
      // choose the d positions in 1..k where the value steps up
      std::vector<bool> pick(k, false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d), true);
      do {
        std::vector<int> f(k + 1, 0);
        for (std::size_t i = 1; i <= k; ++i) f[i] = f[i - 1] + (pick[i - 1] ? 1 : 0);
        seqs[k].push_back(std::move(f));
      } while (std::prev_permutation(pick.begin(), pick.end()));
      std::sort(seqs[k].begin(), seqs[k].end());
    }
    for (std::size_t s = 0; s < seqs[k].size(); ++s) lookup[k][seqs[k][s]] = static_cast<Index>(s + 1);
    t.sizes.push_back(seqs[k].size() + 1);
  }
  auto index_of = [&](std::size_t level, const std::vector<int>& f) -> Index {
    for (std::size_t v = 0; v <= d; ++v) {
      if (std::find(f.begin(), f.end(), static_cast<int>(v)) == f.end()) return 0;
    }
    return lookup[level].at(f);
  };
  t.faces.resize(trunc + 1);
  t.degeneracies.resize(trunc);
  t.labels.resize(trunc + 1);
  for (std::size_t k = 0; k <= trunc; ++k) {
    t.labels[k].push_back("*");
    for (const auto& f : seqs[k]) {
      std::string lab;
      for (int v : f) lab += std::to_string(v);
      t.labels[k].push_back(lab);
    }
    if (k > 0) {
      t.faces[k].assign(k + 1, std::vector<Index>(t.sizes[k], 0));
      for (std::size_t i = 0; i <= k; ++i) {
        for (std::size_t s = 0; s < seqs[k].size(); ++s) {
          std::vector<int> g = seqs[k][s];
          g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
          t.faces[k][i][s + 1] = index_of(k - 1, g);
        }
      }
    }
    if (k < trunc) {
      t.degeneracies[k].assign(k + 1, std::vector<Index>(t.sizes[k], 0));
      for (std::size_t j = 0; j <= k; ++j) {
        for (std::size_t s = 0; s < seqs[k].size(); ++s) {
          std::vector<int> g = seqs[k][s];
          g.insert(g.begin() + static_cast<std::ptrdiff_t>(j), g[j]);
          t.degeneracies[k][j][s + 1] = index_of(k + 1, g);
        }
      }
    }
  }
  return {SimplicialSet(std::move(t)), 0};
}

BasedSimplicialSet point_model(std::size_t trunc) {
  SimplicialSet::Tables t;
  t.sizes.assign(trunc + 1, 1);
  t.faces.resize(trunc + 1);
  t.degeneracies.resize(trunc);
  for (std::size_t k = 1; k <= trunc; ++k) t.faces[k].assign(k + 1, std::vector<Index>{0});
  for (std::size_t k = 0; k < trunc; ++k) t.degeneracies[k].assign(k + 1, std::vector<Index>{0});
  return {SimplicialSet(std::move(t)), 0};
}

SimplicialSet truncate(const SimplicialSet& x, std::size_t trunc) {
  if (trunc >= x.trunc()) return x;
  SimplicialSet::Tables t;
  const auto& src = x.tables();
  t.sizes.assign(src.sizes.begin(), src.sizes.begin() + static_cast<std::ptrdiff_t>(trunc + 1));
  t.faces.assign(src.faces.begin(), src.faces.begin() + static_cast<std::ptrdiff_t>(trunc + 1));
  t.degeneracies.assign(src.degeneracies.begin(), src.degeneracies.begin() + static_cast<std::ptrdiff_t>(trunc));
  if (!src.labels.empty()) {
    t.labels.assign(src.labels.begin(), src.labels.begin() + static_cast<std::ptrdiff_t>(trunc + 1));
  }
  return SimplicialSet(std::move(t));
}

SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y) {
  const std::size_t top = std::min(x.trunc(), y.trunc());
  SimplicialSet::Tables t;
  t.faces.resize(top + 1);
  t.degeneracies.resize(top);
  const bool labelled = x.has_labels() && y.has_labels();
  if (labelled) t.labels.resize(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    const std::size_t ny = y.size(k);
    t.sizes.push_back(x.size(k) * ny);
    if (labelled) {
      for (Index a = 0; a < x.size(k); ++a) {
        for (Index b = 0; b < ny; ++b) t.labels[k].push_back("(" + x.label(k, a) + "," + y.label(k, b) + ")");
      }
    }
    if (k > 0) {
      const std::size_t ny_lo = y.size(k - 1);
      t.faces[k].assign(k + 1, std::vector<Index>(t.sizes[k]));
      for (std::size_t i = 0; i <= k; ++i) {
        for (Index a = 0; a < x.size(k); ++a) {
          for (Index b = 0; b < ny; ++b) {
            t.faces[k][i][a * ny + b] = static_cast<Index>(x.face(k, i, a) * ny_lo + y.face(k, i, b));
          }
        }
      }
    }
  }
  for (std::size_t k = 0; k < top; ++k) {
    const std::size_t ny = y.size(k);
    const std::size_t ny_hi = y.size(k + 1);
    t.degeneracies[k].assign(k + 1, std::vector<Index>(t.sizes[k]));
    for (std::size_t j = 0; j <= k; ++j) {
      for (Index a = 0; a < x.size(k); ++a) {
        for (Index b = 0; b < ny; ++b) {
          t.degeneracies[k][j][a * ny + b] =
              static_cast<Index>(x.degeneracy(k, j, a) * ny_hi + y.degeneracy(k, j, b));
        }
      }
    }
  }
  return SimplicialSet(std::move(t));
}

BasedSimplicialSet product(const BasedSimplicialSet& x, const BasedSimplicialSet& y) {
  SimplicialSet p = product(x.space, y.space);
  return {std::move(p), static_cast<Index>(x.basepoint * y.space.size(0) + y.basepoint)};
}

BasedSimplicialSet torus_model(std::size_t trunc) {
  const auto circle = sphere_model(1, trunc);
  return product(circle, circle);
}

std::pair<SimplicialSet, SimplicialMap> restrict_to(const SimplicialSet& x,
                                                    const std::vector<std::vector<bool>>& keep) {
  const std::size_t top = x.trunc();
  if (keep.size() != top + 1) throw std::invalid_argument("restrict_to: mask level count mismatch");
  std::vector<std::vector<Index>> renumber(top + 1);
  SimplicialMap inc;
  inc.maps.resize(top + 1);
  SimplicialSet::Tables t;
  for (std::size_t k = 0; k <= top; ++k) {
    if (keep[k].size() != x.size(k)) throw std::invalid_argument("restrict_to: mask size mismatch");
    renumber[k].assign(x.size(k), kNoIndex);
    for (Index s = 0; s < x.size(k); ++s) {
      if (keep[k][s]) {
        renumber[k][s] = static_cast<Index>(inc.maps[k].size());
        inc.maps[k].push_back(s);
      }
    }
    t.sizes.push_back(inc.maps[k].size());
  }
  t.faces.resize(top + 1);
  t.degeneracies.resize(top);
  if (x.has_labels()) t.labels.resize(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    if (x.has_labels()) {
      for (Index s : inc.maps[k]) t.labels[k].push_back(x.label(k, s));
    }
    if (k > 0) {
      t.faces[k].assign(k + 1, {});
      for (std::size_t i = 0; i <= k; ++i) {
        for (Index s : inc.maps[k]) {
          const Index f = renumber[k - 1][x.face(k, i, s)];
          if (f == kNoIndex) {
            throw ValidationError("subspace not closed under d_" + std::to_string(i) + " at level " +
                                  std::to_string(k) + ", simplex " + std::to_string(s));
          }
          t.faces[k][i].push_back(f);
        }
      }
    }
    if (k < top) {
      t.degeneracies[k].assign(k + 1, {});
      for (std::size_t j = 0; j <= k; ++j) {
        for (Index s : inc.maps[k]) {
          const Index g = renumber[k + 1][x.degeneracy(k, j, s)];
          if (g == kNoIndex) {
            throw ValidationError("subspace not closed under s_" + std::to_string(j) + " at level " +
                                  std::to_string(k) + ", simplex " + std::to_string(s));
          }
          t.degeneracies[k][j].push_back(g);
        }
      }
    }
  }
  inc.source = SimplicialSet(std::move(t));
  inc.target = x;
  return {inc.source, inc};
}

std::vector<std::vector<bool>> generated_mask(const SimplicialSet& x, const std::vector<SimplexRef>& seeds) {
  const std::size_t top = x.trunc();
  std::vector<std::vector<bool>> mask(top + 1);
  for (std::size_t k = 0; k <= top; ++k) mask[k].assign(x.size(k), false);
  for (const auto& s : seeds) {
    if (s.level > top || s.index >= x.size(s.level)) throw std::invalid_argument("seed out of range");
    mask[s.level][s.index] = true;
  }
  for (std::size_t k = top; k >= 1; --k) {
    for (Index s = 0; s < x.size(k); ++s) {
      if (!mask[k][s]) continue;
      for (std::size_t i = 0; i <= k; ++i) mask[k - 1][x.face(k, i, s)] = true;
    }
  }
  for (std::size_t k = 0; k < top; ++k) {
    for (Index s = 0; s < x.size(k); ++s) {
      if (!mask[k][s]) continue;
      for (std::size_t j = 0; j <= k; ++j) mask[k + 1][x.degeneracy(k, j, s)] = true;
    }
  }
  return mask;
}

std::pair<BasedSimplicialSet, SimplicialMap> quotient(const SimplicialSet& x, const SimplicialMap& a) {
  if (!(a.target.level_sizes() == x.level_sizes())) {
    throw ValidationError("quotient: map target does not match the space");
  }
  if (!a.is_injective()) throw ValidationError("quotient: collapsed map is not injective");
  if (auto v = validate(a); !v.empty()) {
    throw ValidationError("quotient: image not closed under structure maps (" + v.front().identity + " at level " +
                          std::to_string(v.front().level) + ", simplex " + std::to_string(v.front().index) + ")");
  }
  const std::size_t top = x.trunc();
  const auto in_image = a.image_mask();
  SimplicialMap q;
  q.source = x;
  q.maps.resize(top + 1);
  SimplicialSet::Tables t;
  std::vector<std::vector<Index>> kept(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    q.maps[k].assign(x.size(k), 0);
    for (Index s = 0; s < x.size(k); ++s) {
      if (!in_image[k][s]) {
        kept[k].push_back(s);
        q.maps[k][s] = static_cast<Index>(kept[k].size());
      }
    }
    t.sizes.push_back(kept[k].size() + 1);
  }
  t.faces.resize(top + 1);
  t.degeneracies.resize(top);
  if (x.has_labels()) t.labels.resize(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    if (x.has_labels()) {
      t.labels[k].push_back("[A]");
      for (Index s : kept[k]) t.labels[k].push_back(x.label(k, s));
    }
    if (k > 0) {
      t.faces[k].assign(k + 1, std::vector<Index>(t.sizes[k], 0));
      for (std::size_t i = 0; i <= k; ++i) {
        for (std::size_t p = 0; p < kept[k].size(); ++p) {
          t.faces[k][i][p + 1] = q.maps[k - 1][x.face(k, i, kept[k][p])];
        }
      }
    }
    if (k < top) {
      t.degeneracies[k].assign(k + 1, std::vector<Index>(t.sizes[k], 0));
      for (std::size_t j = 0; j <= k; ++j) {
        for (std::size_t p = 0; p < kept[k].size(); ++p) {
          t.degeneracies[k][j][p + 1] = q.maps[k + 1][x.degeneracy(k, j, kept[k][p])];
        }
      }
    }
  }
  q.target = SimplicialSet(std::move(t));
  return {BasedSimplicialSet{q.target, 0}, q};
}

SimplicialMap basepoint_inclusion(const BasedSimplicialSet& x) {
  const auto pt = point_model(x.trunc());
  SimplicialMap f{pt.space, x.space, {}};
  f.maps.resize(x.trunc() + 1);
  for (std::size_t k = 0; k <= x.trunc(); ++k) f.maps[k] = {x.degenerate_basepoint(k)};
  return f;
}

}  // namespace finsub
