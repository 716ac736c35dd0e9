#include "finsub/pipeline.hpp"

#include "finsub/space_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace finsub {

std::string SpaceSpec::tag() const {
  switch (kind) {
    case Kind::sphere:
      return "sphere";
    case Kind::torus:
      return "torus";
    case Kind::file:
      return "file:" + path.string();
  }
  return {};
}

std::size_t SpaceSpec::dimension() const {
  switch (kind) {
    case Kind::sphere:
      return d;
    case Kind::torus:
      return 2;
    case Kind::file: {
      const auto x = load_space(path);
      for (std::size_t k = x.trunc(); k > 0; --k) {
        if (!nondegenerate_indices(x.space, k).empty()) return k;
      }
      return 0;
    }
  }
  return 0;
}

std::optional<std::size_t> SpaceSpec::max_trunc() const {
  if (kind == Kind::file) return load_space(path).trunc();
  return std::nullopt;
}

BasedSimplicialSet SpaceSpec::build(std::size_t trunc) const {
  switch (kind) {
    case Kind::sphere:
      return sphere_model(d, trunc);
    case Kind::torus:
      return torus_model(trunc);
    case Kind::file: {
      BasedSimplicialSet x = load_space(path);
      if (trunc > x.trunc()) {
        throw std::invalid_argument("space file stores levels up to " + std::to_string(x.trunc()) +
                                    ", truncation " + std::to_string(trunc) + " requested");
      }
      x.space = truncate(x.space, trunc);
      return x;
    }
  }
  throw std::logic_error("unknown space kind");
}

SpaceSpec SpaceSpec::parse(const std::string& text, std::size_t d) {
  SpaceSpec s;
  s.d = d;
  if (text == "sphere") {
    if (d == 0) throw std::invalid_argument("sphere dimension must be positive");
    s.kind = Kind::sphere;
  } else if (text == "torus") {
    s.kind = Kind::torus;
  } else if (text.rfind("file:", 0) == 0 && text.size() > 5) {
    s.kind = Kind::file;
    s.path = text.substr(5);
  } else {
    throw std::invalid_argument("unknown space '" + text + "' (expected sphere, torus or file:PATH)");
  }
  return s;
}

std::string to_string(Construction c) {
  switch (c) {
    case Construction::expn:
      return "expn";
    case Construction::based:
      return "based";
    case Construction::bar:
      return "bar";
    case Construction::conf:
      return "conf";
  }
  return {};
}

Construction parse_construction(const std::string& s) {
  if (s == "expn") return Construction::expn;
  if (s == "based") return Construction::based;
  if (s == "bar") return Construction::bar;
  if (s == "conf") return Construction::conf;
  throw std::invalid_argument("unknown construction '" + s + "' (expected expn, based, bar or conf)");
}

bool is_reduced(Construction c) { return c == Construction::bar || c == Construction::conf; }

std::vector<std::vector<bool>> based_mask(const SubsetSpace& e, const BasedSimplicialSet& x) {
  const std::size_t trunc = e.space.trunc();
  std::vector<std::vector<bool>> m(trunc + 1);
  for (std::size_t k = 0; k <= trunc; ++k) {
    const Index bp = x.degenerate_basepoint(k);
    m[k].resize(e.space.space.size(k));
    for (std::size_t s = 0; s < m[k].size(); ++s) {
      const auto mem = e.members[k][s];
      m[k][s] = std::binary_search(mem.begin(), mem.end(), bp);
    }
  }
  return m;
}

std::vector<std::vector<bool>> cardinality_mask(const SubsetSpace& e, std::size_t max_card) {
  const std::size_t trunc = e.space.trunc();
  std::vector<std::vector<bool>> m(trunc + 1);
  for (std::size_t k = 0; k <= trunc; ++k) {
    m[k].resize(e.space.space.size(k));
    for (std::size_t s = 0; s < m[k].size(); ++s) m[k][s] = e.cardinality(k, static_cast<Index>(s)) <= max_card;
  }
  return m;
}

std::vector<std::vector<bool>> mask_union(const std::vector<std::vector<bool>>& a,
                                          const std::vector<std::vector<bool>>& b) {
  auto m = a;
  for (std::size_t k = 0; k < m.size(); ++k) {
    for (std::size_t s = 0; s < m[k].size(); ++s) m[k][s] = m[k][s] || b[k][s];
  }
  return m;
}

namespace {

ChainComplex chains(const SimplicialSet& x, bool reduced, const std::vector<std::vector<bool>>* exclude,
                    const PipelineOptions& opts) {
  BoundaryProvider provider;
  if (opts.cache) provider = opts.cache->provider(chains_digest(x, reduced, exclude));
  if (exclude) {
    // closure check, discards the result
    (void)relative_complex(x, *exclude, 0);
  }
  return normalized_complex(x, reduced, std::nullopt, exclude, provider).complex;
}

}  // namespace

ChainComplex construction_complex(const BasedSimplicialSet& x, Construction c, std::size_t n, std::size_t trunc,
                                  const PipelineOptions& opts) {
  switch (c) {
    case Construction::expn: {
      const SubsetSpace e = exp_n(x, n, trunc, opts.budget);
      return chains(e.space.space, false, nullptr, opts);
    }
    case Construction::based: {
      const SubsetSpaceWithMap b = exp_based(x, n, trunc, opts.budget);
      return chains(b.space.space.space, false, nullptr, opts);
    }
    case Construction::bar: {
      const SubsetSpace e = exp_n(x, n, trunc, opts.budget);
      const auto mask = based_mask(e, x);
      return chains(e.space.space, false, &mask, opts);
    }
    case Construction::conf: {
      if (opts.model == ConfModel::bar) {
        const SubsetSpace e = exp_n(x, n, trunc, opts.budget);
        const auto mask = mask_union(based_mask(e, x), cardinality_mask(e, n - 1));
        return chains(e.space.space, false, &mask, opts);
      }
      const SubsetSpaceWithMap b = exp_based(x, n + 1, trunc, opts.budget);
      const auto mask = cardinality_mask(b.space, n);
      return chains(b.space.space.space, false, &mask, opts);
    }
  }
  throw std::logic_error("unknown construction");
}

std::vector<HomologyGroup> construction_homology(const BasedSimplicialSet& x, Construction c, std::size_t n,
                                                 std::size_t trunc, const PipelineOptions& opts) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  return homology(construction_complex(x, c, n, trunc, opts), opts.coeffs, opts.jobs);
}

}  // namespace finsub
