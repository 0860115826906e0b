#include <algorithm>

#include "doctest.h"
#include "evatop/chain.hpp"
#include "evatop/collapse.hpp"
#include "evatop/fixtures.hpp"
#include "evatop/rng.hpp"
#include "evatop/subdivision.hpp"

using namespace evatop;

TEST_CASE("free faces") {
  CHECK(free_faces(hollow_triangle()).empty());
  CHECK(free_faces(Complex::from_facets({Simplex{0}})).empty());
  // solid triangle: every proper face lies in the unique maximal cell
  auto pairs = free_faces(solid_triangle());
  CHECK(pairs.size() == 6);
  int edges = 0;
  for (const auto& [beta, alpha] : pairs) {
    CHECK(alpha == Simplex{0, 1, 2});
    if (beta.dim() == 1) ++edges;
  }
  CHECK(edges == 3);
}

TEST_CASE("elementary collapse follows the worked example") {
  Complex sigma1 = solid_triangle();
  Complex sigma2 = elementary_collapse(sigma1, Simplex{0, 1});
  CHECK(sigma2.size() == 5);
  CHECK(!sigma2.contains(Simplex{0, 1}));
  CHECK(!sigma2.contains(Simplex{0, 1, 2}));
  CHECK(sigma2.contains(Simplex{0, 2}));

  // collapsing at the vertex {0} removes {0},{0,1},{0,2},{0,1,2}
  Complex at_vertex = elementary_collapse(sigma1, Simplex{0});
  CHECK(at_vertex.size() == 3);
  CHECK(at_vertex == Complex::from_facets({Simplex{1, 2}}));

  Complex edge = Complex::from_facets({Simplex{0, 1}});
  CHECK(elementary_collapse(edge, Simplex{1}) ==
        Complex::from_facets({Simplex{0}}));

  CHECK_THROWS_AS(elementary_collapse(hollow_triangle(), Simplex{0, 1}),
                  std::invalid_argument);
}

TEST_CASE("primitive expansion replays to the one-shot collapse") {
  Complex sigma1 = solid_triangle();
  auto steps = expand_to_primitive(sigma1, Simplex{0, 1});
  CHECK(steps.size() == 1);
  CHECK(steps[0].free_face == Simplex{0, 1});

  auto steps2 = expand_to_primitive(sigma1, Simplex{0});
  CHECK(steps2.size() == 2);
  CHECK(steps2[0].free_face == Simplex{0, 1});
  CHECK(steps2[0].removed ==
        std::vector<Simplex>{Simplex{0, 1}, Simplex{0, 1, 2}});
  CHECK(steps2[1].free_face == Simplex{0});
  CHECK(steps2[1].removed == std::vector<Simplex>{Simplex{0}, Simplex{0, 2}});

  // replay equivalence for every free face of several fixtures
  Rng rng(21);
  std::vector<Complex> fixtures{solid_triangle(),
                                standard_complex(StandardKind::Pi, 2),
                                standard_complex(StandardKind::Pi, 3),
                                cone(9, hollow_triangle())};
  for (int i = 0; i < 6; ++i)
    fixtures.push_back(random_collapsible(rng, (int)rng.range(2, 12)));
  for (const Complex& c : fixtures) {
    for (const auto& [beta, alpha] : free_faces(c)) {
      Complex direct = elementary_collapse(c, beta);
      auto prim = expand_to_primitive(c, beta);
      Complex replay = c;
      for (const CollapseStep& step : prim) {
        // each step must itself be a legal primitive collapse
        auto pairs = free_faces(replay);
        bool found = false;
        for (const auto& [b, a] : pairs)
          if (b == step.free_face &&
              a.card() == step.free_face.card() + 1)
            found = true;
        CHECK(found);
        replay = replay.without(step.removed);
      }
      CHECK(replay == direct);
    }
  }
}

TEST_CASE("collapsibility search") {
  auto res = search_collapsible(solid_triangle());
  REQUIRE(res.verdict == CollapseVerdict::Collapsible);
  CHECK(verify_sequence(solid_triangle(), *res.certificate));
  CHECK(res.certificate->terminal.size() == 1);

  CHECK(search_collapsible(hollow_triangle()).verdict ==
        CollapseVerdict::NotCollapsible);

  BarResult bar = barycentric_subdivision(solid_triangle());
  auto res2 = search_collapsible(bar.complex);
  REQUIRE(res2.verdict == CollapseVerdict::Collapsible);
  CHECK(verify_sequence(bar.complex, *res2.certificate));

  auto tiny = search_collapsible(solid_triangle(), 1);
  CHECK(tiny.verdict == CollapseVerdict::BudgetExceeded);
}

TEST_CASE("verify_sequence rejects corrupted certificates") {
  Complex c = solid_triangle();
  auto res = search_collapsible(c);
  REQUIRE(res.certificate);
  CollapseSequence bad = *res.certificate;
  bad.steps[0].free_face = Simplex{0, 1, 2};  // not free
  CHECK(!verify_sequence(c, bad));
  CollapseSequence bad2 = *res.certificate;
  bad2.terminal = hollow_triangle();
  CHECK(!verify_sequence(c, bad2));
}

TEST_CASE("round trip on random complexes") {
  Rng rng(17);
  int verified = 0;
  for (int i = 0; i < 50; ++i) {
    Complex c = random_collapsible(rng, (int)rng.range(1, 14));
    auto res = search_collapsible(c);
    REQUIRE(res.verdict == CollapseVerdict::Collapsible);
    CHECK(verify_sequence(c, *res.certificate));
    // primitive steps remove two simplices of adjacent dimension, so the
    // Euler characteristic never moves
    CHECK(euler_characteristic(res.certificate->terminal) ==
          euler_characteristic(c));
    ++verified;
  }
  CHECK(verified == 50);
}

TEST_CASE("collapse onto a subcomplex") {
  Complex sigma = solid_triangle();
  Complex coned = cone(7, sigma);
  auto res = collapse_onto(coned, sigma, 200000);
  REQUIRE(res.verdict == OntoVerdict::Found);
  CollapseSequence seq = *res.certificate;
  CHECK(verify_sequence(coned, seq));
  CHECK(seq.terminal == sigma);

  auto self = collapse_onto(sigma, sigma, 1000);
  REQUIRE(self.verdict == OntoVerdict::Found);
  CHECK(self.certificate->steps.empty());

  CHECK_THROWS_AS(
      collapse_onto(sigma, Complex::from_facets({Simplex{5}}), 1000),
      std::invalid_argument);
}

TEST_CASE("bar(Pi_2) collapses onto the cone over bar(Lambda_2)") {
  Complex pi2 = standard_complex(StandardKind::Pi, 2);
  BarResult bar = barycentric_subdivision(pi2);
  VertexId top = bar.dict.id(Simplex{0, 1, 2});
  VertexId mid = bar.dict.id(Simplex{0, 1});
  // the target deletes every chain through [0,1]; what remains is the cone
  // of bar(Lambda_2) over the top cell's vertex
  std::vector<Simplex> keep;
  for (const Simplex& s : bar.complex.sorted_simplices())
    if (!s.contains_vertex(mid)) keep.push_back(s);
  Complex target = Complex::from_simplices(keep);
  CHECK(target.contains(Simplex{top}));
  auto res = collapse_onto(bar.complex, target, 500000);
  REQUIRE(res.verdict == OntoVerdict::Found);
  CHECK(verify_sequence(bar.complex, *res.certificate));
}

TEST_CASE("certificate json round trip") {
  Complex c = solid_triangle();
  auto res = search_collapsible(c);
  REQUIRE(res.certificate);
  std::string j = sequence_to_json(*res.certificate);
  CollapseSequence back = sequence_from_json(j);
  CHECK(verify_sequence(c, back));
  CHECK(sequence_to_json(back) == j);
}
