#include "doctest.h"
#include "oracles.hpp"

#include "finsub/chain_complex.hpp"
#include "finsub/errors.hpp"
#include "finsub/simplicial.hpp"
#include "finsub/space_io.hpp"

#include <filesystem>

using namespace finsub;

namespace {

std::vector<std::size_t> nondegenerate_counts(const SimplicialSet& x) {
  std::vector<std::size_t> c;
  for (std::size_t k = 0; k <= x.trunc(); ++k) c.push_back(nondegenerate_indices(x, k).size());
  return c;
}

}  // namespace

TEST_CASE("sphere level sizes follow C(k,d)+1") {
  CHECK(sphere_model(1, 3).space.level_sizes() == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(sphere_model(2, 4).space.level_sizes() == std::vector<std::size_t>{1, 1, 2, 4, 7});
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto x = sphere_model(d, 7);
    for (std::size_t k = 0; k <= 7; ++k) CHECK(x.space.size(k) == oracle::binomial(k, d) + 1);
  }
}

TEST_CASE("sphere non-degenerate cells sit in degrees 0 and d") {
  CHECK(nondegenerate_counts(sphere_model(1, 3).space) == std::vector<std::size_t>{1, 1, 0, 0});
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto c = nondegenerate_counts(sphere_model(d, 6).space);
    for (std::size_t k = 0; k <= 6; ++k) CHECK(c[k] == (k == 0 || k == d ? 1u : 0u));
  }
}

TEST_CASE("torus model") {
  CHECK(torus_model(0).space.level_sizes() == std::vector<std::size_t>{1});
  CHECK(torus_model(2).space.level_sizes() == std::vector<std::size_t>{1, 4, 9});
  const auto t = torus_model(4);
  // one vertex, three edges (two circles and the diagonal), two triangles
  CHECK(nondegenerate_counts(t.space) == std::vector<std::size_t>{1, 3, 2, 0, 0});
  CHECK(euler_characteristic(t.space) == 0);
  CHECK(validate(t.space).empty());
}

TEST_CASE("every builder passes validation") {
  CHECK(validate(sphere_model(2, 5).space).empty());
  CHECK(validate(point_model(3).space).empty());
  const auto p = product(sphere_model(1, 4), sphere_model(2, 4));
  CHECK(validate(p.space).empty());
  CHECK(validate(basepoint_inclusion(sphere_model(3, 4))).empty());
}

TEST_CASE("product counts and Euler characteristic") {
  const auto a = sphere_model(1, 5);
  const auto b = sphere_model(2, 5);
  const auto p = product(a.space, b.space);
  for (std::size_t k = 0; k <= 5; ++k) CHECK(p.size(k) == a.space.size(k) * b.space.size(k));
  const auto ca = nondegenerate_counts(a.space);
  const auto cb = nondegenerate_counts(b.space);
  const auto cp = nondegenerate_counts(p);
  for (std::size_t k = 0; k <= 5; ++k) CHECK(cp[k] >= std::max(ca[k], cb[k]));
  // S^1 x S^2 has cells up to degree 3, so the truncation at 5 is complete
  CHECK(euler_characteristic(p) == euler_characteristic(a.space) * euler_characteristic(b.space));
  const auto unit = product(a.space, point_model(5).space);
  CHECK(unit.level_sizes() == a.space.level_sizes());
}

TEST_CASE("torus homology matches the product of circles") {
  const auto c = normalized_complex(torus_model(3).space, false).complex;
  const auto h = homology(c);
  REQUIRE(h.size() == 3);
  CHECK(h[0] == HomologyGroup::free(1));
  CHECK(h[1] == HomologyGroup::free(2));
  CHECK(h[2] == HomologyGroup::free(1));
}

TEST_CASE("quotients") {
  const auto s2 = sphere_model(2, 4);
  SUBCASE("collapsing the basepoint changes nothing") {
    const auto [q, map] = quotient(s2.space, basepoint_inclusion(s2));
    CHECK(q.space.level_sizes() == s2.space.level_sizes());
    CHECK(validate(map).empty());
  }
  SUBCASE("collapsing everything leaves a point") {
    const auto [q, map] = quotient(s2.space, identity_map(s2.space));
    for (std::size_t k = 0; k <= 4; ++k) CHECK(q.space.size(k) == 1);
  }
  SUBCASE("quotient map is surjective and kills A") {
    const auto t = torus_model(3);
    const auto mask = generated_mask(t.space, {SimplexRef{1, nondegenerate_indices(t.space, 1)[0]}});
    const auto [sub, inc] = restrict_to(t.space, mask);
    const auto [q, map] = quotient(t.space, inc);
    CHECK(validate(q.space).empty());
    CHECK(validate(map).empty());
    for (std::size_t k = 0; k <= 3; ++k) {
      std::vector<bool> hit(q.space.size(k), false);
      for (Index x = 0; x < t.space.size(k); ++x) hit[map(k, x)] = true;
      CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
      for (Index a = 0; a < sub.size(k); ++a) CHECK(map(k, inc(k, a)) == q.degenerate_basepoint(k));
    }
  }
  SUBCASE("circle modulo its vertex") {
    const auto s1 = sphere_model(1, 3);
    const auto [q, map] = quotient(s1.space, basepoint_inclusion(s1));
    const auto h = homology(normalized_complex(q.space, true).complex);
    CHECK(h[0].is_zero());
    CHECK(h[1] == HomologyGroup::free(1));
  }
}

TEST_CASE("validation locates a corrupted face") {
  const auto t = torus_model(3);
  auto tables = t.space.tables();
  // point d_0 of a level-2 cell at a different edge
  const Index cell = nondegenerate_indices(t.space, 2)[0];
  tables.faces[2][0][cell] = (tables.faces[2][0][cell] + 1) % 4;
  const SimplicialSet broken(tables);
  const auto v = validate(broken);
  REQUIRE_FALSE(v.empty());
  CHECK(!v.front().identity.empty());
}

TEST_CASE("space files round-trip") {
  const auto dir = std::filesystem::temp_directory_path() / "finsub_test_space_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "s1.json";
  const auto s1 = sphere_model(1, 2);
  save_space(s1, path);
  const auto back = load_space(path);
  CHECK(back.space.level_sizes() == std::vector<std::size_t>{1, 2, 3});
  CHECK(back.space == s1.space);
  CHECK(back.basepoint == s1.basepoint);
  const auto torus = torus_model(3);
  CHECK(space_from_json(space_to_json(torus)).space == torus.space);
  std::filesystem::remove_all(dir);
}

TEST_CASE("space files reject bad input") {
  CHECK_THROWS_AS(space_from_json("{\"trunc\": 0, \"levels\": [], \"faces\": [], \"degeneracies\": [], "
                                  "\"basepoint\": 0}"),
                  ParseError);
  CHECK_THROWS_AS(space_from_json("not json"), ParseError);
  auto tables = sphere_model(1, 2).space.tables();
  tables.faces[2][2][2] = 0;
  const BasedSimplicialSet broken{SimplicialSet(tables), 0};
  CHECK_THROWS_AS(space_from_json(space_to_json(broken)), ValidationError);
}
