#include <stdexcept>
#include <set>

#include "doctest.h"
#include "evatop/fixtures.hpp"
#include "evatop/permutation.hpp"

using namespace evatop;

TEST_CASE("permutation basics") {
  Permutation f = Permutation::from_cycles("(0 2)(1 3)", {0, 1, 2, 3});
  CHECK(f(0) == 2);
  CHECK(f(3) == 1);
  CHECK(f.order() == 2);
  CHECK(f.to_cycle_string() == "(0 2)(1 3)");
  CHECK(f.inverse() == f);
  Permutation rot = Permutation::from_cycles("(0 1 2)", {0, 1, 2});
  CHECK(rot.order() == 3);
  CHECK(rot.compose_after(rot).compose_after(rot).is_identity());
  CHECK(rot.apply(Simplex{0, 2}) == Simplex{0, 1});
  CHECK_THROWS_AS(Permutation({0, 1}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles("(0 9)", {0, 1}),
                  std::invalid_argument);
  CHECK(Permutation::identity({3, 5}).to_cycle_string() == "()");
}

TEST_CASE("group enumeration") {
  PermGroup h = PermGroup::from_generators(
      {Permutation::from_cycles("(0 2)", {0, 1, 2, 3})});
  CHECK(h.order() == 2);
  std::vector<VertexId> dom9{0, 1, 2, 3, 4, 5, 6, 7, 8};
  PermGroup c9 = PermGroup::from_generators(
      {Permutation::from_cycles("(0 1 2 3 4 5 6 7 8)", dom9)});
  CHECK(c9.order() == 9);
  CHECK(c9.is_abelian());
  CHECK_THROWS_AS(PermGroup::from_generators(
                      {Permutation::from_cycles("(0 1 2 3 4 5 6 7 8)", dom9)},
                      4),
                  std::runtime_error);
}

TEST_CASE("vertex orbits") {
  PermGroup g = PermGroup::from_generators(
      {Permutation::from_cycles("(0 2)", {0, 1, 2, 3})});
  auto orbits = g.vertex_orbits();
  REQUIRE(orbits.size() == 3);
  CHECK(orbits[0] == std::vector<VertexId>{0, 2});
  CHECK(orbits[1] == std::vector<VertexId>{1});
  CHECK(orbits[2] == std::vector<VertexId>{3});
}

TEST_CASE("subgroups, normality, cyclic quotients") {
  // S_3 on three points
  PermGroup s3 = PermGroup::from_generators(
      {Permutation::from_cycles("(0 1)", {0, 1, 2}),
       Permutation::from_cycles("(0 1 2)", {0, 1, 2})});
  CHECK(s3.order() == 6);
  auto subs = s3.subgroups();
  CHECK(subs.size() == 6);  // 1, three C2, A3, S3
  int normal_count = 0;
  for (const auto& sub : subs)
    if (s3.is_normal(sub)) ++normal_count;
  CHECK(normal_count == 3);  // 1, A3, S3
  for (const auto& sub : subs) {
    if (sub.size() == 3) {
      CHECK(s3.is_normal(sub));
      CHECK(s3.quotient_is_cyclic(sub));
    }
    if (sub.size() == 2) CHECK(!s3.is_normal(sub));
  }
}

TEST_CASE("affine groups") {
  AffineGroup a5 = affine_group(5, 1);
  CHECK(a5.group.order() == 20);
  CHECK(a5.translations.order() == 5);

  AffineGroup a4 = affine_group(2, 2);
  CHECK(a4.group.order() == 12);
  // transitive on ordered pairs of distinct points
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const Permutation& g : a4.group.elements()) pairs.insert({g(0), g(1)});
  CHECK(pairs.size() == 12);

  AffineGroup a9 = affine_group(3, 2);
  CHECK(a9.group.order() == 72);
  CHECK(a9.translations.order() == 9);
  CHECK(a9.translations.is_abelian());

  CHECK_THROWS_AS(affine_group(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(affine_group(11, 2), std::invalid_argument);
}
