#include "cli.hpp"

#include "finsub/cache.hpp"
#include "finsub/errors.hpp"
#include "finsub/group_cohomology.hpp"
#include "finsub/pipeline.hpp"
#include "finsub/space_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace finsub::cli {

using nlohmann::json;

namespace {

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

}  // namespace

json groups_json(const std::vector<HomologyGroup>& groups) {
  json a = json::array();
  for (std::size_t k = 0; k < groups.size(); ++k) {
    json t = json::array();
    for (const auto& m : groups[k].torsion) t.push_back(integer_json(m));
    a.push_back({{"degree", k}, {"rank", groups[k].rank}, {"torsion", t}});
  }
  return a;
}

json page_json(const Page& p) {
  json e = json::array();
  for (const auto& x : p.entries) e.push_back({{"p", x.p}, {"q", x.q}, {"dim", x.dim}});
  json d = json::array();
  for (const auto& x : p.differentials) d.push_back({{"from", {x.p, x.q}}, {"rank", x.rank}});
  return {{"r", p.r}, {"top_degree", p.top_degree}, {"entries", e}, {"differentials", d}};
}

json report_json(const VerificationReport& r, bool timing) {
  json expected = json::array();
  for (const auto& e : r.expected) expected.push_back({{"label", e.label}, {"value", e.value}, {"origin", e.origin}});
  json j = {{"claim", r.claim},       {"anchor", r.anchor},     {"parameters", r.parameters},
            {"expected", expected},   {"computed", r.computed}, {"verdict", to_string(r.verdict)}};
  if (!r.note.empty()) j["note"] = r.note;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

std::string report_text(const VerificationReport& r, bool timing) {
  std::ostringstream s;
  s << "[" << to_string(r.verdict) << "] " << r.claim;
  for (const auto& [k, v] : r.parameters) s << " " << k << "=" << v;
  if (timing) s << " (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
  s << "\n  statement: " << r.anchor << "\n";
  for (const auto& e : r.expected) s << "  expected (" << e.origin << ", " << e.label << "): " << e.value << "\n";
  s << "  computed: " << r.computed << "\n";
  if (!r.note.empty()) s << "  note: " << r.note << "\n";
  return s.str();
}

namespace {

struct Common {
  unsigned jobs = 1;
  std::string cache_dir;
  std::string out;
  std::size_t max_simplices = Budget{}.max_simplices_per_level;
  std::size_t max_nd = 8;
};

struct SpaceArgs {
  std::string space = "sphere";
  std::size_t d = 2;
  std::size_t n = 0;
};

void add_common(CLI::App* c, Common& o, bool with_cache = true) {
  c->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  if (with_cache) c->add_option("--cache-dir", o.cache_dir, std::string("Boundary cache directory (default $") + kCacheEnv + ")");
  c->add_option("--out", o.out, "Write the result to this file instead of stdout");
  c->add_option("--max-simplices", o.max_simplices, "Ceiling on simplices per level");
  c->add_option("--max-nd", o.max_nd, "Ceiling on n*d");
}

void add_space(CLI::App* c, SpaceArgs& s, bool need_n) {
  c->add_option("--space", s.space, "sphere, torus or file:PATH");
  c->add_option("--d", s.d, "Sphere dimension")->check(CLI::PositiveNumber);
  auto* n = c->add_option("--n", s.n, "Number of points")->check(CLI::PositiveNumber);
  if (need_n) n->required();
}

std::unique_ptr<BoundaryCache> open_cache(const Common& o) {
  if (!o.cache_dir.empty()) return std::make_unique<BoundaryCache>(o.cache_dir);
  if (auto dir = BoundaryCache::from_environment()) return std::make_unique<BoundaryCache>(*dir);
  return nullptr;
}

Budget budget(const Common& o) { return Budget{o.max_simplices}; }

void check_nd(std::size_t n, std::size_t dim, const Common& o) {
  if (n * dim > o.max_nd) {
    throw BudgetError("n*d = " + std::to_string(n * dim) + " exceeds the ceiling " + std::to_string(o.max_nd) +
                      " (raise --max-nd)");
  }
}

void emit(const std::string& text, const Common& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + o.out);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Coefficients parse_coeffs(const std::string& s) {
  if (s == "Z") return Coefficients::integer;
  if (s == "Q") return Coefficients::rational;
  throw std::invalid_argument("unknown coefficients '" + s + "' (expected Z or Q)");
}

ConfModel parse_model(const std::string& s) {
  if (s == "bar") return ConfModel::bar;
  if (s == "based") return ConfModel::based;
  throw std::invalid_argument("unknown model '" + s + "' (expected bar or based)");
}

TowerVariant parse_variant(const std::string& s) {
  if (s == "exp") return TowerVariant::exp;
  if (s == "based") return TowerVariant::based;
  if (s == "bar") return TowerVariant::bar;
  throw std::invalid_argument("unknown variant '" + s + "' (expected exp, based or bar)");
}

Action parse_action(const std::string& s) {
  if (s == "trivial") return Action::trivial;
  if (s == "sign") return Action::sign;
  throw std::invalid_argument("unknown action '" + s + "' (expected trivial or sign)");
}

/// Truncation and reported top degree from --trunc / --max-degree with a default top.
std::pair<std::size_t, std::size_t> degrees(std::optional<std::size_t> trunc, std::optional<std::size_t> maxdeg,
                                            std::size_t default_top) {
  if (trunc && *trunc == 0) throw std::invalid_argument("--trunc must be positive");
  const std::size_t top = maxdeg ? *maxdeg : trunc ? *trunc - 1 : default_top;
  const std::size_t t = trunc ? *trunc : top + 1;
  if (t < top + 1) throw std::invalid_argument("--trunc must exceed --max-degree");
  return {t, top};
}

std::size_t default_top(const SpaceSpec& s, std::size_t n) {
  const std::size_t top = n * s.dimension();
  if (const auto mt = s.max_trunc(); mt && *mt <= top) return *mt == 0 ? 0 : *mt - 1;
  return top;
}

// ---- commands

struct HomologyArgs {
  SpaceArgs space;
  std::string construction = "expn";
  std::string model = "bar";
  std::string coeffs = "Z";
  std::optional<std::size_t> maxdeg;
  std::optional<std::size_t> trunc;
};

int cmd_homology(const HomologyArgs& a, const Common& o, std::ostream& out) {
  const SpaceSpec spec = SpaceSpec::parse(a.space.space, a.space.d);
  const Construction c = parse_construction(a.construction);
  const auto [trunc, top] = degrees(a.trunc, a.maxdeg, default_top(spec, a.space.n));
  check_nd(a.space.n, spec.dimension(), o);
  const auto cache = open_cache(o);
  PipelineOptions p;
  p.coeffs = parse_coeffs(a.coeffs);
  p.jobs = o.jobs;
  p.budget = budget(o);
  p.model = parse_model(a.model);
  p.cache = cache.get();
  auto groups = construction_homology(spec.build(trunc), c, a.space.n, trunc, p);
  groups.resize(std::min(groups.size(), top + 1));
  json j = {{"space", spec.tag()},
            {"construction", to_string(c)},
            {"n", a.space.n},
            {"d", spec.dimension()},
            {"reduced", is_reduced(c)},
            {"coeffs", a.coeffs},
            {"groups", groups_json(groups)}};
  if (c == Construction::conf) j["model"] = a.model;
  emit(dump(j), o, out);
  return exit_ok;
}

struct GroupArgs {
  std::size_t n = 0;
  std::string action = "trivial";
  std::size_t maxdeg = 2;
};

int cmd_groupcoh(const GroupArgs& a, const Common& o, std::ostream& out) {
  const Action act = parse_action(a.action);
  const auto groups = group_cohomology(a.n, act, a.maxdeg, GroupBudget{}, o.jobs);
  const json j = {{"group", "S_" + std::to_string(a.n)},
                  {"action", to_string(act)},
                  {"coeffs", "Z"},
                  {"groups", groups_json(groups)}};
  emit(dump(j), o, out);
  return exit_ok;
}

struct PageArgs {
  SpaceArgs space;
  std::string variant = "bar";
  std::string r = "1";
  std::optional<std::size_t> maxdeg;
};

int cmd_page(const PageArgs& a, const Common& o, std::ostream& out) {
  const SpaceSpec spec = SpaceSpec::parse(a.space.space, a.space.d);
  const TowerVariant v = parse_variant(a.variant);
  const auto [trunc, top] = degrees(std::nullopt, a.maxdeg, default_top(spec, a.space.n));
  check_nd(a.space.n, spec.dimension(), o);
  const FiltrationTower t = tower(spec.build(trunc), a.space.n, v, trunc, budget(o));
  const FilteredComplex f = filtered_from_tower(t, top);
  Page pg;
  if (a.r == "inf") {
    pg = einfty_page(f, o.jobs);
  } else {
    std::size_t r = 0;
    std::size_t used = 0;
    try {
      r = std::stoul(a.r, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != a.r.size() || r == 0) throw std::invalid_argument("--r must be a positive integer or 'inf'");
    pg = page(f, r, o.jobs);
  }
  json j = page_json(pg);
  j["space"] = spec.tag();
  j["d"] = spec.dimension();
  j["n"] = a.space.n;
  j["variant"] = a.variant;
  j["einfty_totals"] = einfty_totals(f, o.jobs);
  emit(dump(j), o, out);
  return exit_ok;
}

struct VerifyArgs {
  std::string claim;
  std::optional<std::size_t> n;
  std::optional<std::size_t> d;
  std::string space;
  bool json_out = false;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a, const Common& o, std::ostream& out) {
  const auto cache = open_cache(o);
  VerifyOptions v;
  v.jobs = o.jobs;
  v.budget = budget(o);
  v.max_nd = o.max_nd;
  v.cache = cache.get();
  if (!a.space.empty()) v.space = SpaceSpec::parse(a.space, a.d.value_or(2));
  const auto reports = verify(a.claim, a.n, a.d, v);
  std::string text;
  if (a.json_out) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r, a.timing));
    text = dump(arr);
  } else {
    for (const auto& r : reports) text += report_text(r, a.timing);
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& r : reports) ++counts[static_cast<int>(r.verdict)];
    text += std::to_string(reports.size()) + " report(s): " + std::to_string(counts[0]) + " match, " +
            std::to_string(counts[1]) + " mismatch, " + std::to_string(counts[2]) + " adjudicated\n";
  }
  emit(text, o, out);
  return exit_code(reports);
}

struct BuildArgs {
  SpaceArgs space;
  std::string construction = "space";
  std::string model = "bar";
  std::optional<std::size_t> trunc;
};

int cmd_build(const BuildArgs& a, const Common& o, std::ostream& out) {
  const SpaceSpec spec = SpaceSpec::parse(a.space.space, a.space.d);
  const std::size_t n = a.space.n == 0 ? 1 : a.space.n;
  const std::size_t trunc = a.trunc.value_or(
      a.construction == "space" ? spec.max_trunc().value_or(spec.dimension() + 1) : default_top(spec, n) + 1);
  const BasedSimplicialSet x = spec.build(trunc);
  BasedSimplicialSet result;
  if (a.construction == "space") {
    result = x;
  } else {
    check_nd(n, spec.dimension(), o);
    switch (parse_construction(a.construction)) {
      case Construction::expn:
        result = exp_n(x, n, trunc, budget(o)).space;
        break;
      case Construction::based:
        result = exp_based(x, n, trunc, budget(o)).space.space;
        break;
      case Construction::bar:
        result = exp_bar(x, n, trunc, budget(o)).space.space;
        break;
      case Construction::conf:
        result = conf_plus(x, n, parse_model(a.model), trunc, budget(o)).space;
        break;
    }
  }
  emit(space_to_json(result) + "\n", o, out);
  return exit_ok;
}

int cmd_cache(const std::string& action, const Common& o, std::ostream& out) {
  const auto cache = open_cache(o);
  if (!cache) throw std::invalid_argument(std::string("no cache directory: pass --cache-dir or set ") + kCacheEnv);
  json j = {{"dir", cache->dir().string()}};
  if (action == "stats") {
    const auto s = cache->stats();
    j["entries"] = s.entries;
    j["bytes"] = s.bytes;
  } else {
    j["removed"] = cache->clear();
  }
  emit(dump(j), o, out);
  return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homology of finite subset spaces of simplicial sets", "finsub"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Common common;

  HomologyArgs hom;
  auto* homology = app.add_subcommand("homology", "Homology of a construction on a space");
  add_space(homology, hom.space, true);
  homology->add_option("--construction", hom.construction, "expn, based, bar or conf");
  homology->add_option("--model", hom.model, "Model of C_n(Y)+ for conf: bar or based");
  homology->add_option("--coeffs", hom.coeffs, "Z or Q");
  homology->add_option("--max-degree", hom.maxdeg, "Highest degree reported");
  homology->add_option("--trunc", hom.trunc, "Truncation level of the simplicial sets");
  add_common(homology, common);

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check a statement against computed homology");
  verify_cmd->add_option("--claim", ver.claim, "Claim id or 'all'")->required();
  verify_cmd->add_option("--n", ver.n, "Number of points (default: the claim's suite)");
  verify_cmd->add_option("--d", ver.d, "Sphere dimension (default: the claim's suite)");
  verify_cmd->add_option("--space", ver.space, "Base space for lemma-quo");
  verify_cmd->add_flag("--json", ver.json_out, "Emit JSON instead of text");
  verify_cmd->add_flag("--timing", ver.timing, "Include wall times");
  add_common(verify_cmd, common);

  GroupArgs grp;
  auto* groupcoh = app.add_subcommand("groupcoh", "Integral cohomology of a symmetric group");
  groupcoh->add_option("--n", grp.n, "Degree of the symmetric group")->required()->check(CLI::PositiveNumber);
  groupcoh->add_option("--action", grp.action, "trivial or sign");
  groupcoh->add_option("--max-degree", grp.maxdeg, "Highest cohomological degree");
  add_common(groupcoh, common, false);

  PageArgs pga;
  auto* page_cmd = app.add_subcommand("page", "Rational spectral sequence of the filtration by number of points");
  add_space(page_cmd, pga.space, true);
  page_cmd->add_option("--variant", pga.variant, "exp, based or bar");
  page_cmd->add_option("--r", pga.r, "Page number or 'inf'");
  page_cmd->add_option("--max-degree", pga.maxdeg, "Highest total degree");
  add_common(page_cmd, common, false);

  BuildArgs bld;
  auto* build = app.add_subcommand("build", "Write a space file");
  add_space(build, bld.space, false);
  build->add_option("--construction", bld.construction, "space, expn, based, bar or conf");
  build->add_option("--model", bld.model, "Model of C_n(Y)+ for conf: bar or based");
  build->add_option("--trunc", bld.trunc, "Truncation level");
  add_common(build, common, false);

  std::string cache_action;
  auto* cache = app.add_subcommand("cache", "Inspect or clear the boundary cache");
  cache->add_option("action", cache_action, "stats or clear")->required()->check(CLI::IsMember({"stats", "clear"}));
  add_common(cache, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*homology) return cmd_homology(hom, common, out);
    if (*verify_cmd) return cmd_verify(ver, common, out);
    if (*groupcoh) return cmd_groupcoh(grp, common, out);
    if (*page_cmd) return cmd_page(pga, common, out);
    if (*build) return cmd_build(bld, common, out);
    if (*cache) return cmd_cache(cache_action, common, out);
  } catch (const BudgetError& e) {
    err << "resource limit: " << e.what() << "\n";
    return exit_budget;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_usage;
}

}  // namespace finsub::cli
