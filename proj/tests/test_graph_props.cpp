#include <memory>
#include <stdexcept>
#include <bit>

#include "doctest.h"
#include "evatop/graph_props.hpp"
#include "evatop/rng.hpp"

using namespace evatop;

TEST_CASE("edge universe in colex order") {
  EdgeUniverse u = EdgeUniverse::complete(4);
  REQUIRE(u.m() == 6);
  CHECK(u.edges[0] == std::make_pair<VertexId, VertexId>(0, 1));
  CHECK(u.edges[1] == std::make_pair<VertexId, VertexId>(0, 2));
  CHECK(u.edges[2] == std::make_pair<VertexId, VertexId>(1, 2));
  CHECK(u.edges[5] == std::make_pair<VertexId, VertexId>(2, 3));
  CHECK(u.index_of(3, 1) == 4);
  Permutation rot({0, 1, 2, 3}, {1, 2, 3, 0});
  Permutation edge_rot = u.induced_edge_perm(rot);
  CHECK(edge_rot(0) == u.index_of(1, 2));
}

TEST_CASE("property complexes of the worked examples") {
  // at least three edges: everything with <= 2 edges survives
  PropertyOracle h1 = builtin_property("min_edges", 4, 3);
  Complex d1 = delta_of_property(h1);
  CHECK(d1.count_of_dim(0) == 6);
  CHECK(d1.count_of_dim(1) == 15);
  CHECK(d1.count_of_dim(2) == 0);

  // vertex 2 isolated: the full simplex on the three edges avoiding vertex 2
  PropertyOracle h2 = builtin_property("vertex2_incident", 4);
  Complex d2 = delta_of_property(h2);
  CHECK(d2.size() == 7);
  CHECK(d2.dim() == 2);

  // a property accepting every nonempty graph leaves nothing
  PropertyOracle ne = builtin_property("nonempty", 3);
  CHECK(delta_of_property(ne).empty());
}

TEST_CASE("delta round trip at n = 4") {
  for (const char* name : {"connectedness", "contains_cycle"}) {
    PropertyOracle h = builtin_property(name, 4);
    Complex d = delta_of_property(h);
    EdgeUniverse u = *h.universe;
    for (uint64_t mask = 1; mask < (uint64_t{1} << u.m()); ++mask) {
      std::vector<VertexId> verts;
      for (std::size_t e = 0; e < u.m(); ++e)
        if (mask & (uint64_t{1} << e)) verts.push_back((VertexId)e);
      CHECK(d.contains(Simplex(verts)) == (h(mask) == 0));
    }
  }
}

TEST_CASE("bipartite delta of the 2x2 two-edge threshold") {
  PropertyOracle f = builtin_bipartite_property("bipartite_min_edges", 2, 2, 2);
  Complex d = bipartite_delta(f);
  CHECK(d.size() == 4);
  CHECK(d.dim() == 0);
}

TEST_CASE("monotonicity checking") {
  CHECK(!check_monotone(builtin_property("connectedness", 4)).has_value());
  CHECK(!check_monotone(builtin_property("contains_cycle", 5)).has_value());
  PropertyOracle eq = builtin_property("equals_mask", 3, 3 /* two edges */);
  auto ce = check_monotone(eq);
  REQUIRE(ce.has_value());
  CHECK(eq(ce->subset) == 1);
  CHECK(eq(ce->superset) == 0);
  CHECK((ce->subset & ce->superset) == ce->subset);
}

TEST_CASE("invariance checking") {
  EdgeUniverse u3 = EdgeUniverse::complete(3);
  // equality with the complete graph is a graph property
  PropertyOracle hc =
      builtin_property("equals_mask", 3, (long long)((1 << 3) - 1));
  CHECK(!check_invariant(hc).has_value());
  // equality with one fixed edge is not
  PropertyOracle h2 = builtin_property("equals_mask", 3, 1);
  CHECK(check_invariant(h2).has_value());
  // neither is the single-edge membership indicator
  auto member = PropertyOracle(3, [](uint64_t mask) { return (int)(mask & 1); },
                               "edge0_member");
  auto with_universe = member;
  with_universe.universe = u3;
  CHECK(check_invariant(with_universe).has_value());
}

TEST_CASE("triviality") {
  PropertyOracle zero(4, [](uint64_t) { return 0; }, "zero");
  CHECK(is_trivial(zero));
  CHECK(!is_trivial(builtin_property("connectedness", 3)));
  CHECK(is_trivial(builtin_property("min_edges", 3, 0)));
}

TEST_CASE("weight enumerators") {
  // membership of edge 0 in a 3-edge universe: t(1+t)^2
  PropertyOracle member(3, [](uint64_t mask) { return (int)(mask & 1); },
                        "edge0_member");
  WeightEnumerator w = weight_enumerator(member);
  CHECK(w.coeffs == std::vector<long long>{0, 1, 2, 1});
  CHECK(w.eval_at_minus_one() == 0);
  CHECK(rv_divisibility_check(w, 2));
  CHECK(!rv_divisibility_check(w, 3));

  PropertyOracle one(3, [](uint64_t) { return 1; }, "one");
  CHECK(weight_enumerator(one).coeffs ==
        std::vector<long long>{1, 3, 3, 1});

  WeightEnumerator conn = weight_enumerator(builtin_property("connectedness", 3));
  CHECK(conn.coeffs == std::vector<long long>{0, 0, 3, 1});
  CHECK(!rv_divisibility_check(conn, 1));
  CHECK(rv_divisibility_check(conn, 0));
}

TEST_CASE("satisfying-graph counts grow along each edge for monotone h") {
  for (const char* name : {"connectedness", "contains_cycle"}) {
    PropertyOracle h = builtin_property(name, 4);
    std::size_t m = h.num_edges();
    for (std::size_t e = 0; e < m; ++e) {
      long long with = 0, without = 0;
      for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
        if (!h(mask)) continue;
        (mask >> e) & 1 ? ++with : ++without;
      }
      CHECK(with >= without);
    }
  }
}

TEST_CASE("monotone invariant properties induce complex automorphisms") {
  for (int n : {4, 5}) {
    PropertyOracle h = builtin_property("connectedness", n);
    Complex d = delta_of_property(h);
    EdgeUniverse u = *h.universe;
    std::vector<VertexId> dom(n);
    for (int i = 0; i < n; ++i) dom[i] = (VertexId)i;
    // the full vertex rotation and one transposition generate S_n
    Permutation rot(dom, [&] {
      std::vector<VertexId> img(dom.begin() + 1, dom.end());
      img.push_back(dom[0]);
      return img;
    }());
    Permutation swap01 = Permutation::from_cycles("(0 1)", dom);
    for (const Permutation& sigma : {rot, swap01}) {
      Permutation edge_perm = u.induced_edge_perm(sigma);
      bool ok = true;
      d.for_each([&](const Simplex& s) {
        if (!d.contains(edge_perm.apply(s))) ok = false;
      });
      CHECK(ok);
    }
  }
}

TEST_CASE("graph class posets") {
  GraphClassPoset p3 = graph_class_poset(3);
  CHECK(p3.reps.size() == 4);  // empty, edge, path, triangle
  GraphClassPoset p4 = graph_class_poset(4);
  CHECK(p4.reps.size() == 11);
  GraphClassPoset p5 = graph_class_poset(5);
  CHECK(p5.reps.size() == 34);

  auto upsets3 = enumerate_up_sets(p3);
  CHECK(upsets3.size() == 5);  // chain of 4 classes

  // nontrivial monotone invariant properties at n = 3
  int nontrivial = 0;
  for (uint64_t up : upsets3) {
    if (up == 0) continue;
    if ((up >> p3.class_of_mask[0]) & 1) continue;
    ++nontrivial;
  }
  CHECK(nontrivial == 3);
}

TEST_CASE("bipartite class posets") {
  GraphClassPoset b22 = bipartite_class_poset(2, 2);
  // 16 graphs under the 4-element group: classes by shape
  CHECK(b22.reps.size() == 7);
  for (std::size_t i = 0; i < b22.reps.size(); ++i)
    CHECK(b22.leq[i][i]);
}

TEST_CASE("truth table oracle") {
  PropertyOracle h = truth_table_oracle("{\"n\":3,\"ones\":[7]}");
  CHECK(h(7) == 1);
  CHECK(h(3) == 0);
  CHECK(!check_invariant(h).has_value());
}
