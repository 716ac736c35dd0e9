#include "doctest.h"
#include "oracles.hpp"

#include "finsub/errors.hpp"
#include "finsub/group_cohomology.hpp"

using namespace finsub;

namespace {

HomologyGroup cyclic(long long order) { return {0, {Integer(order)}}; }

}  // namespace

TEST_CASE("permutations") {
  const auto all = all_permutations(3);
  REQUIRE(all.size() == 6);
  CHECK(all.front().is_identity());
  CHECK(std::is_sorted(all.begin(), all.end()));
  int odd = 0;
  for (const auto& p : all) odd += p.sign() < 0;
  CHECK(odd == 3);
  const Permutation swap01({1, 0, 2});
  const Permutation cycle({1, 2, 0});
  CHECK((swap01 * swap01).is_identity());
  CHECK((cycle * cycle * cycle).is_identity());
  CHECK((swap01 * cycle).sign() == -1);
  CHECK((swap01 * cycle)(0) == swap01(cycle(0)));
  CHECK_THROWS(Permutation({0, 0, 1}));
}

TEST_CASE("normalized bar cochains") {
  const auto c2 = bar_cochain_complex(2, Action::trivial, 3);
  CHECK(c2.dims == std::vector<std::size_t>{1, 1, 1, 1, 1});
  const auto c3 = bar_cochain_complex(3, Action::sign, 3);
  CHECK(c3.dims[2] == 25);
  CHECK_FALSE(check_complex(c3));
  CHECK_FALSE(check_complex(bar_cochain_complex(3, Action::trivial, 3)));
  CHECK_FALSE(check_complex(bar_cochain_complex(4, Action::sign, 2)));
}

TEST_CASE("cyclic group of order two") {
  // periodic resolution: Z, 0, Z/2, 0, ... for trivial and 0, Z/2, 0, Z/2 for sign
  const auto t = group_cohomology(2, Action::trivial, 3);
  CHECK(t == std::vector<HomologyGroup>{HomologyGroup::free(1), {}, cyclic(2), {}});
  const auto s = group_cohomology(2, Action::sign, 3);
  CHECK(s == std::vector<HomologyGroup>{{}, cyclic(2), {}, cyclic(2)});
}

TEST_CASE("S_3 and S_4") {
  CHECK(group_cohomology(3, Action::trivial, 3) == std::vector<HomologyGroup>{HomologyGroup::free(1), {}, cyclic(2), {}});
  CHECK(group_cohomology(3, Action::sign, 3) == std::vector<HomologyGroup>{{}, cyclic(2), cyclic(3), cyclic(2)});
  CHECK(group_cohomology(4, Action::trivial, 2) == std::vector<HomologyGroup>{HomologyGroup::free(1), {}, cyclic(2)});
  CHECK(group_cohomology(4, Action::sign, 2) == std::vector<HomologyGroup>{{}, cyclic(2), cyclic(3)});
}

TEST_CASE("invariants hold for every computed group") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto a : {Action::trivial, Action::sign}) {
      const std::size_t maxdeg = n == 4 ? 2 : 3;
      const auto c = bar_cochain_complex(n, a, maxdeg);
      const auto h = group_cohomology(n, a, maxdeg);
      if (n <= 3) CHECK(h == oracle::naive_homology(c));
      CHECK(h[0] == (a == Action::trivial || n == 1 ? HomologyGroup::free(1) : HomologyGroup{}));
      for (std::size_t r = 1; r < h.size(); ++r) CHECK(h[r].rank == 0);
    }
  }
}

TEST_CASE("budgets") {
  CHECK_THROWS_AS(group_cohomology(5, Action::trivial, 1), BudgetError);
  CHECK_THROWS_AS(group_cohomology(3, Action::trivial, 4), BudgetError);
  GroupBudget small;
  small.max_cells = 100;
  CHECK_THROWS_AS(group_cohomology(3, Action::trivial, 3, small), BudgetError);
}
