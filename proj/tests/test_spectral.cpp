#include "doctest.h"

#include "finsub/homology.hpp"
#include "finsub/spectral.hpp"
#include "finsub/subset_space.hpp"

using namespace finsub;

namespace {

FilteredComplex bar_filtration(std::size_t d, std::size_t n) {
  const std::size_t t = n * d + 1;
  return filtered_from_tower(tower(sphere_model(d, t), n, TowerVariant::bar, t));
}

std::vector<std::tuple<int, int, std::size_t>> entries(const Page& p) {
  std::vector<std::tuple<int, int, std::size_t>> e;
  for (const auto& x : p.entries) e.emplace_back(x.p, x.q, x.dim);
  return e;
}

std::vector<std::size_t> rational_betti(const ChainComplex& c) {
  std::vector<std::size_t> b;
  for (const auto& g : homology(c, Coefficients::rational)) b.push_back(g.rank);
  return b;
}

long long alternating(const std::vector<std::size_t>& v) {
  long long s = 0;
  for (std::size_t m = 0; m < v.size(); ++m) s += (m % 2 ? -1 : 1) * static_cast<long long>(v[m]);
  return s;
}

}  // namespace

TEST_CASE("filtration of the bar tower") {
  const std::size_t t = 7;
  const auto tw = tower(sphere_model(2, t), 3, TowerVariant::bar, t);
  const auto f = filtered_from_tower(tw);
  CHECK_FALSE(check_filtration(f));
  CHECK(f.max_level == 3);
  CHECK(rational_betti(f.complex) ==
        rational_betti(normalized_complex(exp_bar(sphere_model(2, t), 3, t).space.space.space, true).complex));
  // cells of level j are the non-degenerate simplices new at stage j
  for (std::size_t m = 1; m < f.levels.size(); ++m) {
    for (int j = 1; j <= 3; ++j) {
      const std::size_t now = nondegenerate_indices(tw.spaces[j - 1].space.space, m).size();
      const std::size_t before = j == 1 ? 0 : nondegenerate_indices(tw.spaces[j - 2].space.space, m).size();
      CHECK(f.filtered_size(m, j) - f.filtered_size(m, j - 1) == now - before);
    }
  }
}

TEST_CASE("E1 of S^2 with three points") {
  const auto f = bar_filtration(2, 3);
  const auto e1 = e1_page(f);
  CHECK(entries(e1) == std::vector<std::tuple<int, int, std::size_t>>{
                           {1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {3, 2, 1}, {3, 3, 1}});
  CHECK(e1.rank_from(2, 1) == 1);
  const auto e2 = advance(e1, f);
  CHECK(entries(e2) == std::vector<std::tuple<int, int, std::size_t>>{{3, 3, 1}});
  CHECK(entries(einfty_page(f)) == entries(e2));
  const auto totals = einfty_totals(f);
  CHECK(totals == std::vector<std::size_t>{0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("E1 of S^3 with two points and its limit") {
  const auto f = bar_filtration(3, 2);
  CHECK(entries(e1_page(f)) == std::vector<std::tuple<int, int, std::size_t>>{{1, 2, 1}, {2, 2, 1}});
  CHECK(einfty_page(f).entries.empty());
}

TEST_CASE("S^1 with three points") {
  CHECK(einfty_totals(bar_filtration(1, 3)) == std::vector<std::size_t>{0, 0, 0, 1});
}

TEST_CASE("E1 equals the homology of configuration spaces") {
  for (const auto& [d, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{1, 3}, std::pair{1, 4}}) {
    const std::size_t t = n * d + 1;
    const auto e1 = e1_page(bar_filtration(d, n));
    std::size_t listed = 0;
    for (std::size_t p = 1; p <= static_cast<std::size_t>(n); ++p) {
      const auto c = conf_plus(sphere_model(d, t), p, ConfModel::bar, t);
      const auto b = rational_betti(normalized_complex(c.space.space, true).complex);
      for (std::size_t m = 0; m < b.size(); ++m) {
        CHECK(e1.dim(static_cast<int>(p), static_cast<int>(m) - static_cast<int>(p)) == b[m]);
        listed += b[m] > 0;
      }
    }
    CHECK(e1.entries.size() == listed);
  }
}

TEST_CASE("page invariants") {
  struct Item {
    BasedSimplicialSet x;
    std::size_t n;
    TowerVariant v;
  };
  const std::vector<Item> items = {
      {sphere_model(2, 7), 3, TowerVariant::bar}, {sphere_model(2, 7), 3, TowerVariant::exp},
      {sphere_model(2, 7), 3, TowerVariant::based}, {sphere_model(1, 5), 4, TowerVariant::bar},
      {sphere_model(1, 5), 4, TowerVariant::exp},   {torus_model(5), 2, TowerVariant::bar},
      {sphere_model(3, 7), 2, TowerVariant::exp},
  };
  for (const auto& [x, n, v] : items) {
    const auto f = filtered_from_tower(tower(x, n, v, x.trunc()));
    CHECK_FALSE(check_filtration(f));
    const auto betti = rational_betti(f.complex);
    long long chi = 0;
    for (std::size_t r = 1; r <= static_cast<std::size_t>(f.max_level) + 2; ++r) {
      const auto pg = page(f, r);
      for (const auto& dr : pg.differentials) {
        CHECK(dr.rank <= pg.dim(dr.p, dr.q));
        CHECK(dr.rank <= pg.dim(dr.p - static_cast<int>(r), dr.q + static_cast<int>(r) - 1));
      }
      const long long here = alternating(pg.totals());
      if (r == 1) chi = here;
      CHECK(here == chi);
      if (r > static_cast<std::size_t>(f.max_level)) {
        CHECK(pg.differentials.empty());
        CHECK(entries(pg) == entries(einfty_page(f)));
      }
    }
    auto totals = einfty_totals(f);
    CHECK(totals == betti);
  }
}

TEST_CASE("for even d only the top entry survives to E2") {
  for (const auto& [d, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{4, 2}}) {
    const auto e2 = page(bar_filtration(d, n), 2);
    CHECK(entries(e2) == std::vector<std::tuple<int, int, std::size_t>>{{n, n * (d - 1), 1}});
  }
}
