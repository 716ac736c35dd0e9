#include "doctest.h"
#include "oracles.hpp"

#include "finsub/errors.hpp"
#include "finsub/homology.hpp"
#include "finsub/pipeline.hpp"
#include "finsub/subset_space.hpp"

using namespace finsub;

namespace {

std::vector<HomologyGroup> reduced(const SimplicialSet& x) { return homology(normalized_complex(x, true).complex); }

void check_valid(const SubsetSpace& s) { CHECK(validate(s.space.space).empty()); }

}  // namespace

TEST_CASE("level sizes are sums of binomials") {
  for (const auto& x : {sphere_model(1, 4), sphere_model(2, 4), torus_model(2)}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto e = exp_n(x, n, x.trunc());
      for (std::size_t k = 0; k <= x.trunc(); ++k) {
        std::uint64_t expected = 0;
        for (std::size_t j = 1; j <= n; ++j) expected += oracle::binomial(x.space.size(k), j);
        CHECK(e.space.space.size(k) == expected);
      }
    }
  }
}

TEST_CASE("face tables agree with brute-force enumeration") {
  for (const auto& [x, n] : {std::pair{sphere_model(1, 4), 2}, std::pair{sphere_model(1, 4), 3},
                             std::pair{sphere_model(2, 4), 3}, std::pair{torus_model(2), 2}}) {
    const auto e = exp_n(x, n, x.trunc());
    const auto b = oracle::brute_exp(x.space, n);
    for (std::size_t k = 0; k <= x.trunc(); ++k) {
      REQUIRE(e.space.space.size(k) == b.members[k].size());
      for (std::size_t s = 0; s < b.members[k].size(); ++s) {
        const auto m = e.members[k][s];
        CHECK(std::vector<Index>(m.begin(), m.end()) == b.members[k][s]);
      }
      for (std::size_t i = 0; k > 0 && i <= k; ++i) {
        for (std::size_t s = 0; s < b.members[k].size(); ++s) CHECK(e.space.space.face(k, i, s) == b.faces[k][i][s]);
      }
    }
  }
}

TEST_CASE("small cases") {
  const auto s1 = sphere_model(1, 3);
  CHECK(exp_n(s1, 2, 3).space.space.size(2) == 6);
  CHECK(exp_based(s1, 2, 3).space.space.space.size(2) == 3);
  CHECK(exp_bar(s1, 2, 3).space.space.space.size(2) == 4);
  CHECK(exp_n(sphere_model(2, 4), 3, 4).space.space.size(0) == 1);
  const auto one = exp_n(s1, 1, 3);
  CHECK(one.space.space == s1.space);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(exp_based(s1, 1, 3).space.space.space.size(k) == 1);
}

TEST_CASE("all constructions satisfy the simplicial identities") {
  const auto x = sphere_model(2, 5);
  check_valid(exp_n(x, 3, 5));
  const auto b = exp_based(x, 3, 5);
  check_valid(b.space);
  CHECK(validate(b.map).empty());
  const auto q = exp_bar(x, 3, 5);
  check_valid(q.space);
  CHECK(validate(q.map).empty());
  check_valid(conf_plus(x, 2, ConfModel::based, 5));
  check_valid(conf_plus(x, 2, ConfModel::bar, 5));
  const auto t = torus_model(3);
  check_valid(exp_n(t, 2, 3));
  check_valid(conf_plus(t, 2, ConfModel::bar, 3));
}

TEST_CASE("smaller exp spaces sit inside larger ones") {
  const auto x = sphere_model(1, 4);
  const auto big = exp_n(x, 3, 4);
  for (std::size_t m = 1; m < 3; ++m) {
    const auto small = exp_n(x, m, 4);
    const auto inc = subset_inclusion(small, big);
    CHECK(validate(inc).empty());
    CHECK(inc.is_injective());
  }
}

TEST_CASE("towers") {
  const auto x = sphere_model(2, 5);
  for (auto v : {TowerVariant::exp, TowerVariant::based, TowerVariant::bar}) {
    const auto t = tower(x, 3, v, 5);
    REQUIRE(t.spaces.size() == 3);
    for (const auto& inc : t.inclusions) CHECK(validate(inc).empty());
    const auto direct = t.inclusion(0, 2);
    const auto composed = compose(t.inclusions[1], t.inclusions[0]);
    CHECK(direct.maps == composed.maps);
    for (std::size_t j = 0; j + 1 < 3; ++j) {
      for (std::size_t k = 0; k <= 5; ++k) CHECK(t.spaces[j].space.space.size(k) <= t.spaces[j + 1].space.space.size(k));
    }
  }
}

TEST_CASE("homology of quotients") {
  SUBCASE("exp_bar with one point is X modulo nothing") {
    const auto x = sphere_model(2, 4);
    CHECK(reduced(exp_bar(x, 1, 4).space.space.space) == reduced(x.space));
  }
  SUBCASE("exp_bar of S^2 with two points") {
    const auto h = reduced(exp_bar(sphere_model(2, 6), 2, 6).space.space.space);
    CHECK(h[4] == HomologyGroup::free(1));
    CHECK(h[5].is_zero());
  }
  SUBCASE("C_1(R^2)+ is S^2") {
    const auto h = reduced(conf_plus(sphere_model(2, 3), 1, ConfModel::based, 3).space.space);
    CHECK(h == std::vector<HomologyGroup>{{}, {}, HomologyGroup::free(1)});
  }
  SUBCASE("C_2(R^2)+") {
    const auto h = reduced(conf_plus(sphere_model(2, 5), 2, ConfModel::bar, 5).space.space);
    CHECK(h[3] == HomologyGroup::free(1));
    CHECK(h[4] == HomologyGroup::free(1));
  }
}

TEST_CASE("materialized quotients agree with relative complexes") {
  struct Item {
    BasedSimplicialSet x;
    std::size_t n;
  };
  const std::vector<Item> items = {{sphere_model(2, 5), 2}, {sphere_model(2, 7), 3}, {sphere_model(3, 7), 2},
                                   {torus_model(5), 2},     {sphere_model(1, 4), 3}};
  for (const auto& [x, n] : items) {
    const std::size_t t = x.trunc();
    for (auto model : {ConfModel::based, ConfModel::bar}) {
      PipelineOptions p;
      p.model = model;
      const auto relative = construction_homology(x, Construction::conf, n, t, p);
      const auto materialized = reduced(conf_plus(x, n, model, t).space.space);
      CHECK(relative == materialized);
    }
    CHECK(construction_homology(x, Construction::bar, n, t) == reduced(exp_bar(x, n, t).space.space.space));
    CHECK(construction_homology(x, Construction::based, n, t) ==
          homology(normalized_complex(exp_based(x, n, t).space.space.space, false).complex));
  }
}

TEST_CASE("both configuration space models agree") {
  struct Item {
    SpaceSpec space;
    std::size_t n;
  };
  const SpaceSpec s2{SpaceSpec::Kind::sphere, 2, {}};
  const SpaceSpec s3{SpaceSpec::Kind::sphere, 3, {}};
  const SpaceSpec t2{SpaceSpec::Kind::torus, 2, {}};
  for (const auto& [space, n] : std::vector<Item>{{s2, 1}, {s2, 2}, {s2, 3}, {s3, 1}, {s3, 2}, {t2, 1}, {t2, 2}}) {
    const std::size_t t = n * space.dimension() + 1;
    const auto x = space.build(t);
    PipelineOptions based;
    based.model = ConfModel::based;
    CHECK(construction_homology(x, Construction::conf, n, t, based) ==
          construction_homology(x, Construction::conf, n, t));
  }
}

TEST_CASE("budgets and arguments") {
  const auto x = sphere_model(2, 6);
  CHECK_THROWS_AS(exp_n(x, 3, 6, Budget{10}), BudgetError);
  CHECK_THROWS_AS(exp_n(x, 0, 6), std::invalid_argument);
}
