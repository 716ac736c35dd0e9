#include "finsub/verify.hpp"

#include "finsub/errors.hpp"
#include "finsub/group_cohomology.hpp"
#include "finsub/spectral.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

namespace finsub {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::match:
      return "match";
    case Verdict::mismatch:
      return "mismatch";
    case Verdict::adjudicated:
      return "adjudicated";
  }
  return {};
}

namespace {

using Groups = std::vector<HomologyGroup>;

struct Case {
  std::size_t n;
  std::size_t d;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string groups_string(const Groups& g, std::size_t from = 0) {
  std::string s = "(";
  for (std::size_t k = from; k < g.size(); ++k) {
    if (k > from) s += ", ";
    s += g[k].to_string();
  }
  return s + ")";
}

std::string betti_string(const std::vector<std::size_t>& b) {
  std::string s = "(";
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(b[k]);
  }
  return s + ")";
}

std::vector<std::size_t> ranks(const Groups& g) {
  std::vector<std::size_t> r;
  for (const auto& h : g) r.push_back(h.rank);
  return r;
}

Integer torsion_order(const HomologyGroup& g) {
  Integer o = 1;
  for (const auto& t : g.torsion) o *= t;
  return o;
}

HomologyGroup plus_z(HomologyGroup g) {
  ++g.rank;
  return g;
}

HomologyGroup cyclic(std::size_t order) {
  HomologyGroup g;
  if (order >= 2) g.torsion.push_back(Integer(order));
  return g;
}

class Runner {
 public:
  Runner(std::optional<std::size_t> n, std::optional<std::size_t> d, const VerifyOptions& o)
      : n_(n), d_(d), opts_(o) {}

  /// Cases of a claim: the suite unless n or d narrows it; an explicit case
  /// outside the suite is checked against the n*d ceiling.
  std::vector<Case> cases(const std::vector<Case>& suite) const {
    if (!n_ && !d_) return suite;
    std::vector<Case> out;
    for (const Case& c : suite) {
      if ((!n_ || c.n == *n_) && (!d_ || c.d == *d_)) out.push_back(c);
    }
    if (out.empty()) {
      const Case c{n_.value_or(suite.front().n), d_.value_or(suite.front().d)};
      if (c.n * c.d > opts_.max_nd) {
        throw BudgetError("n*d = " + std::to_string(c.n * c.d) + " exceeds the ceiling " +
                          std::to_string(opts_.max_nd) + " (raise --max-nd)");
      }
      out.push_back(c);
    }
    return out;
  }

  PipelineOptions pipeline(Coefficients coeffs = Coefficients::integer) const {
    PipelineOptions p;
    p.coeffs = coeffs;
    p.jobs = opts_.jobs;
    p.budget = opts_.budget;
    p.cache = opts_.cache;
    return p;
  }

  /// Homology of a construction on S^d in degrees 0..maxdeg.
  Groups sphere(Construction c, const Case& k, std::size_t maxdeg,
                Coefficients coeffs = Coefficients::integer) const {
    return construction_homology(sphere_model(k.d, maxdeg + 1), c, k.n, maxdeg + 1, pipeline(coeffs));
  }

  Groups cohomology(std::size_t n, Action a, std::size_t maxdeg) const {
    return group_cohomology(n, a, maxdeg, GroupBudget{}, opts_.jobs);
  }

  const VerifyOptions& options() const { return opts_; }

 private:
  std::optional<std::size_t> n_;
  std::optional<std::size_t> d_;
  const VerifyOptions& opts_;
};

VerificationReport start(const std::string& claim, const std::string& anchor, const Case& c) {
  VerificationReport r;
  r.claim = claim;
  r.anchor = anchor;
  r.parameters["n"] = std::to_string(c.n);
  r.parameters["d"] = std::to_string(c.d);
  r.parameters["space"] = "sphere";
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_n(const Case& c, std::size_t min) {
  require(c.n >= min, "n must be at least " + std::to_string(min));
}

// ---- claims

std::vector<VerificationReport> circle(const Runner& run) {
  std::vector<VerificationReport> out;
  for (const Case& c : run.cases({{2, 1}, {3, 1}, {4, 1}, {5, 1}})) {
    require(c.d == 1, "circle: d must be 1");
    require_n(c, 1);
    Stopwatch sw;
    auto r = start("circle", "exp_n S^1 is homotopy equivalent to S^n for n odd and to S^(n-1) for n even", c);
    const std::size_t top = c.n % 2 ? c.n : c.n - 1;
    Groups expected(c.n + 1);
    expected[0] = HomologyGroup::free(1);
    expected[top] = HomologyGroup::free(1);
    const Groups g = run.sphere(Construction::expn, c, c.n);
    r.expected.push_back({"homology of S^" + std::to_string(top), groups_string(expected), "claim"});
    r.computed = groups_string(g);
    r.verdict = g == expected ? Verdict::match : Verdict::mismatch;
    r.seconds = sw.seconds();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> tuffley_s2(const Runner& run) {
  std::vector<VerificationReport> out;
  for (const Case& c : run.cases({{2, 2}, {3, 2}, {4, 2}})) {
    require(c.d == 2, "tuffley-s2: d must be 2");
    require_n(c, 2);
    Stopwatch sw;
    auto r = start("tuffley-s2",
                   "H_k(exp_n S^2) is Z for k = 2n, 0 for k = 2n-1, Z + Z/(n-1) for k = 2n-2, and the rational "
                   "homology vanishes in the remaining positive degrees",
                   c);
    const std::size_t n = c.n;
    const Groups g = run.sphere(Construction::expn, c, 2 * n);
    HomologyGroup low = plus_z(cyclic(n - 1));
    bool ok = g[2 * n] == HomologyGroup::free(1) && g[2 * n - 1].is_zero() && g[2 * n - 2] == low &&
              g[0] == HomologyGroup::free(1);
    for (std::size_t k = 1; k + 2 < 2 * n; ++k) ok = ok && g[k].rank == 0;
    r.expected.push_back({"stated",
                          "H_" + std::to_string(2 * n) + " = Z, H_" + std::to_string(2 * n - 1) + " = 0, H_" +
                              std::to_string(2 * n - 2) + " = " + low.to_string() +
                              ", rank 0 in degrees 1.." + std::to_string(2 * n - 3),
                          "claim"});
    r.computed = groups_string(g);
    r.verdict = ok ? Verdict::match : Verdict::mismatch;
    r.seconds = sw.seconds();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> thm1(const Runner& run) {
  std::vector<VerificationReport> out;
  for (const Case& c : run.cases({{3, 2}})) {
    require(c.d >= 2, "thm1: d must be at least 2");
    require_n(c, 1);
    Stopwatch sw;
    auto r = start("thm1",
                   "exp_n S^d has the rational homology of S^(nd) v S^((n-1)d) for d even and of "
                   "S^([(n+1)/2](d+1)-1) for d > 1 odd",
                   c);
    const std::size_t top = c.n * c.d;
    std::vector<std::size_t> expected(top + 1, 0);
    expected[0] = 1;
    if (c.d % 2 == 0) {
      expected[top] += 1;
      if (c.n > 1) expected[(c.n - 1) * c.d] += 1;
    } else {
      expected[((c.n + 1) / 2) * (c.d + 1) - 1] += 1;
    }
    const auto got = ranks(run.sphere(Construction::expn, c, top, Coefficients::rational));
    r.expected.push_back({"Betti numbers", betti_string(expected), "claim"});
    r.computed = betti_string(got);
    r.verdict = got == expected ? Verdict::match : Verdict::mismatch;
    r.seconds = sw.seconds();
    out.push_back(std::move(r));
  }
  return out;
}

const char* kThm2Anchor =
    "for r < d, H_(nd-r)(exp_n S^d) is H^r(S_n; Z) for d even and H^r(S_n; sgn) for d odd, with an extra Z "
    "summand when d is odd, r = d-1 and n is 2 or 3";

void thm2_case(const Runner& run, const Case& c, const std::string& claim, std::vector<VerificationReport>& out) {
  require_n(c, 1);
  require(c.d >= 2, claim + ": d must be at least 2");
  Stopwatch sw;
  const std::size_t top = c.n * c.d;
  const Action action = c.d % 2 ? Action::sign : Action::trivial;
  const Groups h = run.sphere(Construction::expn, c, top);
  const Groups coh = run.cohomology(c.n, action, c.d - 1);
  const double shared = sw.seconds();
  for (std::size_t r = 0; r < c.d; ++r) {
    Stopwatch each;
    auto rep = start(claim, kThm2Anchor, c);
    rep.parameters["r"] = std::to_string(r);
    rep.parameters["degree"] = std::to_string(top - r);
    const HomologyGroup& got = h[top - r];
    rep.computed = "H_" + std::to_string(top - r) + " = " + got.to_string();
    const std::string coh_name = "H^" + std::to_string(r) + "(S_" + std::to_string(c.n) + "; " +
                                 (action == Action::sign ? "sgn" : "Z") + ")";
    const bool special = c.d % 2 == 1 && r + 1 == c.d && (c.n == 2 || c.n == 3);
    const HomologyGroup stated = special ? plus_z(coh[r]) : coh[r];
    rep.expected.push_back({special ? coh_name + " + Z" : coh_name, stated.to_string(), "oracle"});
    if (special && c.n == 2) {
      std::vector<std::size_t> betti(top + 1, 0);
      betti[((c.n + 1) / 2) * (c.d + 1) - 1] = 1;
      const std::size_t predicted_rank = betti[top - r];
      rep.expected.push_back({"rational prediction for d odd", "rank " + std::to_string(predicted_rank), "claim"});
      rep.verdict = Verdict::adjudicated;
      std::string holds;
      if (got == stated) holds = "the extra Z summand holds";
      if (got.rank == predicted_rank) holds += std::string(holds.empty() ? "" : " and ") + "the rational prediction holds";
      if (holds.empty()) holds = "neither prediction holds";
      rep.note = "the two statements disagree at n = 2; computed " + got.to_string() + ": " + holds;
    } else {
      rep.verdict = got == stated ? Verdict::match : Verdict::mismatch;
    }
    rep.seconds = each.seconds() + (r == 0 ? shared : 0);
    out.push_back(std::move(rep));
  }
}

std::vector<VerificationReport> thm2(const Runner& run) {
  std::vector<VerificationReport> out;
  for (const Case& c : run.cases({{3, 2}})) thm2_case(run, c, "thm2", out);
  return out;
}

std::vector<VerificationReport> generaltwo(const Runner& run) {
  std::vector<VerificationReport> out;
  for (const Case& c : run.cases({{2, 2}, {3, 2}, {4, 2}, {2, 3}, {2, 4}})) {
    thm2_case(run, c, "generaltwo", out);
  }
  return out;
}

std::vector<VerificationReport> thm2a_partial(const Runner& run) {
  std::vector<VerificationReport> out;
  for (const Case& c : run.cases({{3, 2}, {4, 2}, {3, 3}})) {
    require_n(c, 3);
    require(c.d >= 2, "thm2a-partial: d must be at least 2");
    Stopwatch sw;
    auto r = start("thm2a-partial",
                   "for n >= 3, H_(nd-d)(exp_n S^d) is an extension of H^d(C_n(R^d); Z) by Z + Z/(n-1) for d "
                   "even and a subgroup of index at most 4 in H^d(C_n(R^d); Z_sgn) for d > 1 odd; H^d(C_n) is "
                   "read as the reduced homology of C_n(R^d)+ in degree nd-d",
                   c);
    const std::size_t deg = c.n * c.d - c.d;
    const HomologyGroup g = run.sphere(Construction::expn, c, deg)[deg];
    const HomologyGroup h = run.sphere(Construction::conf, c, deg)[deg];
    r.parameters["degree"] = std::to_string(deg);
    r.computed = "H_" + std::to_string(deg) + "(exp_n S^d) = " + g.to_string() + ", H~_" + std::to_string(deg) +
                 "(C_n+) = " + h.to_string();
    const Integer m(c.n - 1);
    const Integer tg = torsion_order(g);
    const Integer th = torsion_order(h);
    bool ok;
    if (c.d % 2 == 0) {
      r.expected.push_back({"rank", "rank H~(C_n+) + 1 = " + std::to_string(h.rank + 1), "claim"});
      r.expected.push_back({"torsion", "order divisible by n-1 and dividing (n-1)*|tors H~(C_n+)|, exponent "
                                       "divisible by n-1", "claim"});
      const Integer exponent = g.torsion.empty() ? Integer(1) : g.torsion.back();
      ok = g.rank == h.rank + 1 && tg % m == 0 && (m * th) % tg == 0 && exponent % m == 0;
      r.note = "necessary conditions for the extension; the extension class is not determined";
    } else {
      r.expected.push_back({"rank", "equal ranks", "claim"});
      r.expected.push_back({"index", "at most 4", "claim"});
      ok = g.rank == h.rank;
      if (ok && g.rank == 0) {
        ok = th % tg == 0 && th / tg <= 4;
        if (th % tg == 0) r.note = "index " + Integer(th / tg).str();
      } else {
        r.note = "index not determined from the isomorphism types alone";
      }
    }
    r.verdict = ok ? Verdict::match : Verdict::mismatch;
    r.seconds = sw.seconds();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> lemma_quo(const Runner& run) {
  const VerifyOptions& o = run.options();
  const SpaceSpec space = o.space.value_or(SpaceSpec{});
  std::vector<Case> suite;
  if (space.kind == SpaceSpec::Kind::sphere) {
    suite = {{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}};
  } else {
    suite = {{2, space.dimension()}};
  }
  std::vector<VerificationReport> out;
  for (Case c : run.cases(suite)) {
    require_n(c, 1);
    SpaceSpec s = space;
    if (s.kind == SpaceSpec::Kind::sphere) {
      s.d = c.d;
    } else {
      c.d = s.dimension();
    }
    Stopwatch sw;
    auto r = start("lemma-quo",
                   "exp_(n+1)(X,*) modulo its subsets of at most n points and exp_n X modulo its based and smaller "
                   "subsets are both models of C_n(Y)+, Y = X minus the basepoint",
                   c);
    r.parameters["space"] = s.tag();
    const std::size_t trunc = c.n * c.d + 1;
    if (const auto mt = s.max_trunc(); mt && *mt < trunc) {
      throw BudgetError("space file stores levels up to " + std::to_string(*mt) + ", lemma-quo needs " +
                        std::to_string(trunc));
    }
    const BasedSimplicialSet x = s.build(trunc);
    PipelineOptions p = run.pipeline();
    p.model = ConfModel::based;
    const Groups based = construction_homology(x, Construction::conf, c.n, trunc, p);
    p.model = ConfModel::bar;
    const Groups bar = construction_homology(x, Construction::conf, c.n, trunc, p);
    r.expected.push_back({"based model", groups_string(based), "oracle"});
    r.computed = groups_string(bar);
    r.verdict = based == bar ? Verdict::match : Verdict::mismatch;
    r.seconds = sw.seconds();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> connectivity(const Runner& run) {
  std::vector<VerificationReport> out;
  const std::vector<Case> suite = {{2, 1}, {3, 1}, {4, 1}, {5, 1}, {2, 2}, {3, 2},
                                   {4, 2}, {2, 3}, {3, 3}, {2, 4}};
  for (const Case& c : run.cases(suite)) {
    require_n(c, 1);
    require(c.d >= 1, "d must be positive");
    Stopwatch sw;
    auto r = start("connectivity",
                   "exp_n X is (m+n-2)-connected for m-connected X; S^d is (d-1)-connected, so reduced homology of "
                   "exp_n S^d vanishes through degree n+d-3",
                   c);
    const std::size_t top = c.n * c.d;
    const Groups g = run.sphere(Construction::expn, c, top);
    const long long bound = static_cast<long long>(c.n + c.d) - 3;
    bool ok = true;
    long long first = -1;
    for (std::size_t k = 0; k <= top; ++k) {
      const HomologyGroup reduced = k == 0 ? HomologyGroup{g[0].rank - 1, g[0].torsion} : g[k];
      if (!reduced.is_zero() && first < 0) first = static_cast<long long>(k);
      if (static_cast<long long>(k) <= bound && !reduced.is_zero()) ok = false;
    }
    r.expected.push_back({"vanishing range", bound < 0 ? "empty" : "degrees 0.." + std::to_string(bound), "claim"});
    r.computed = first < 0 ? "reduced homology vanishes" : "first non-zero reduced degree " + std::to_string(first);
    r.verdict = ok ? Verdict::match : Verdict::mismatch;
    r.seconds = sw.seconds();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> connecting(const Runner& run) {
  std::vector<VerificationReport> out;
  for (const Case& c : run.cases({{2, 2}, {3, 2}, {4, 2}})) {
    require_n(c, 2);
    require(c.d % 2 == 0, "connecting: d must be even");
    Stopwatch sw;
    auto r = start("connecting",
                   "the connecting map from the free part of H~_(nd-d+1)(C_n+) to H~_(nd-d)(C_(n-1)+) is "
                   "multiplication by n-1",
                   c);
    const std::size_t k = c.n * c.d - c.d + 1;
    const BasedSimplicialSet x = sphere_model(c.d, k + 1);
    const SubsetSpace e = exp_n(x, c.n, k + 1, run.options().budget);
    const auto based = based_mask(e, x);
    const auto a = mask_union(based, cardinality_mask(e, c.n - 1));
    const auto l = mask_union(based, cardinality_mask(e, c.n - 2));
    const HomologyMapDescription m = connecting_map(e.space.space, a, l, k);
    r.parameters["degree"] = std::to_string(k);
    r.expected.push_back({"free block", "+-" + std::to_string(c.n - 1), "claim"});
    r.computed = m.to_string();
    bool ok = m.source.rank == 1 && m.target.rank == 1 && m.free_matrix.size() == 1 && m.free_matrix[0].size() == 1;
    if (ok) {
      const Integer v = m.free_matrix[0][0];
      ok = v == Integer(c.n - 1) || v == -Integer(c.n - 1);
    } else {
      r.note = "free parts are not both of rank 1";
    }
    r.verdict = ok ? Verdict::match : Verdict::mismatch;
    r.seconds = sw.seconds();
    out.push_back(std::move(r));
  }
  return out;
}

std::string page_string(const Page& p) {
  std::string s;
  for (const auto& e : p.entries) {
    if (!s.empty()) s += " ";
    s += "(" + std::to_string(e.p) + "," + std::to_string(e.q) + "):" + std::to_string(e.dim);
  }
  return s.empty() ? "0" : s;
}

std::vector<VerificationReport> e1_collapse(const Runner& run) {
  std::vector<VerificationReport> out;
  for (const Case& c : run.cases({{2, 2}, {3, 2}, {2, 3}, {3, 1}})) {
    require_n(c, 1);
    require(c.d >= 1, "d must be positive");
    const std::size_t top = c.n * c.d;
    Stopwatch sw;
    const BasedSimplicialSet x = sphere_model(c.d, top + 1);
    const FiltrationTower t = tower(x, c.n, TowerVariant::bar, top + 1, run.options().budget);
    const FilteredComplex f = filtered_from_tower(t);
    const unsigned jobs = run.options().jobs;
    const Page e1 = e1_page(f, jobs);
    const Page e2 = page(f, 2, jobs);
    const Page einf = einfty_page(f, jobs);
    const double shared = sw.seconds();

    {
      Stopwatch each;
      auto r = start("e1-collapse", "E^1_(p,q) of the filtration of exp_n S^d modulo based subsets by number of "
                                    "points is the reduced homology of C_p(R^d)+ in degree p+q",
                     c);
      r.parameters["part"] = "e1";
      std::string expected;
      bool ok = true;
      for (std::size_t p = 1; p <= c.n; ++p) {
        const Groups h = run.sphere(Construction::conf, {p, c.d}, top, Coefficients::rational);
        for (std::size_t m = 0; m < h.size(); ++m) {
          if (h[m].rank == 0) continue;
          const int q = static_cast<int>(m) - static_cast<int>(p);
          if (!expected.empty()) expected += " ";
          expected += "(" + std::to_string(p) + "," + std::to_string(q) + "):" + std::to_string(h[m].rank);
          ok = ok && e1.dim(static_cast<int>(p), q) == h[m].rank;
        }
      }
      std::size_t listed = 0;
      for (const auto& e : e1.entries) listed += e.p >= 1;
      std::size_t expected_count = static_cast<std::size_t>(std::count(expected.begin(), expected.end(), '('));
      ok = ok && listed == expected_count && e1.dim(0, 0) == 0;
      r.expected.push_back({"rational homology of C_p+", expected.empty() ? "0" : expected, "oracle"});
      r.computed = page_string(e1);
      r.verdict = ok ? Verdict::match : Verdict::mismatch;
      r.seconds = shared + each.seconds();
      out.push_back(std::move(r));
    }
    {
      auto r = start("e1-collapse", "the spectral sequence collapses at the E^2 term", c);
      r.parameters["part"] = "collapse";
      r.expected.push_back({"E^infinity", page_string(einf), "oracle"});
      r.computed = page_string(e2);
      bool ok = e2.entries.size() == einf.entries.size();
      for (const auto& e : e2.entries) ok = ok && einf.dim(e.p, e.q) == e.dim;
      r.verdict = ok ? Verdict::match : Verdict::mismatch;
      out.push_back(std::move(r));
    }
    {
      Stopwatch each;
      auto r = start("e1-collapse",
                     "exp_n S^d modulo based subsets is rationally S^(nd) for d even, S^((n+1)(d+1)/2-1) for d "
                     "and n odd, and rationally a point for d odd and n even",
                     c);
      r.parameters["part"] = "limit";
      std::vector<std::size_t> expected(top + 1, 0);
      if (c.d % 2 == 0) {
        expected[top] = 1;
      } else if (c.n % 2 == 1) {
        expected[(c.n + 1) * (c.d + 1) / 2 - 1] = 1;
      }
      const auto totals = einf.totals();
      const auto direct = ranks(run.sphere(Construction::bar, c, top, Coefficients::rational));
      r.expected.push_back({"stated", betti_string(expected), "claim"});
      r.expected.push_back({"reduced Betti numbers of the top space", betti_string(direct), "oracle"});
      r.computed = betti_string(totals);
      r.verdict = totals == expected && totals == direct ? Verdict::match : Verdict::mismatch;
      r.seconds = each.seconds();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<VerificationReport> groupcoh_xcheck(const Runner& run) {
  std::vector<VerificationReport> out;
  for (const Case& c : run.cases({{2, 3}, {3, 3}})) {
    require_n(c, 1);
    require(c.d > 2, "groupcoh-xcheck: d must be at least 3");
    Stopwatch sw;
    const std::size_t top = c.n * c.d;
    const Action action = c.d % 2 ? Action::sign : Action::trivial;
    const Groups h = run.sphere(Construction::conf, c, top);
    const Groups coh = run.cohomology(c.n, action, c.d - 1);
    const double shared = sw.seconds();
    for (std::size_t r = 0; r < c.d; ++r) {
      Stopwatch each;
      auto rep = start("groupcoh-xcheck",
                       "for r < d, H~_(nd-r)(C_n(R^d)+) is H^r(S_n; Z) for d even and H^r(S_n; sgn) for d odd, plus "
                       "a Z summand at r = d-1 when d is even or n is 2 or 3",
                       c);
      rep.parameters["r"] = std::to_string(r);
      rep.parameters["degree"] = std::to_string(top - r);
      const bool extra = r + 1 == c.d && (c.d % 2 == 0 || c.n == 2 || c.n == 3);
      const HomologyGroup expected = extra ? plus_z(coh[r]) : coh[r];
      const std::string name = "H^" + std::to_string(r) + "(S_" + std::to_string(c.n) + "; " +
                               (action == Action::sign ? "sgn" : "Z") + ")" + (extra ? " + Z" : "");
      rep.expected.push_back({name, expected.to_string(), "oracle"});
      rep.computed = "H~_" + std::to_string(top - r) + " = " + h[top - r].to_string();
      rep.verdict = h[top - r] == expected ? Verdict::match : Verdict::mismatch;
      rep.seconds = each.seconds() + (r == 0 ? shared : 0);
      out.push_back(std::move(rep));
    }
  }
  return out;
}

using ClaimFn = std::function<std::vector<VerificationReport>(const Runner&)>;

const std::vector<std::pair<std::string, ClaimFn>>& registry() {
  static const std::vector<std::pair<std::string, ClaimFn>> r = {
      {"thm1", thm1},
      {"thm2", thm2},
      {"thm2a-partial", thm2a_partial},
      {"tuffley-s2", tuffley_s2},
      {"circle", circle},
      {"lemma-quo", lemma_quo},
      {"connectivity", connectivity},
      {"connecting", connecting},
      {"e1-collapse", e1_collapse},
      {"groupcoh-xcheck", groupcoh_xcheck},
      {"generaltwo", generaltwo},
  };
  return r;
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

std::vector<VerificationReport> verify(const std::string& claim, std::optional<std::size_t> n,
                                       std::optional<std::size_t> d, const VerifyOptions& opts) {
  if (claim == "all") {
    const Runner run(std::nullopt, std::nullopt, opts);
    std::vector<VerificationReport> all;
    for (const auto& [id, fn] : registry()) {
      auto part = fn(run);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
  }
  const Runner run(n, d, opts);
  for (const auto& [id, fn] : registry()) {
    if (id == claim) return fn(run);
  }
  throw std::invalid_argument("unknown claim '" + claim + "'");
}

int exit_code(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.verdict == Verdict::mismatch) return 1;
  }
  return 0;
}

}  // namespace finsub
