#include <functional>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "evatop/chain.hpp"
#include "evatop/fixtures.hpp"
#include "evatop/group_action.hpp"
#include "evatop/rng.hpp"

using namespace evatop;

TEST_CASE("boundary of worked examples") {
  for (uint64_t p : {2ull, 3ull, 5ull}) {
    Chain d2 = boundary_of(Simplex{0, 1, 2}, p);
    CHECK(d2.terms.at(Simplex{1, 2}) == 1 % p);
    CHECK(d2.terms.at(Simplex{0, 2}) == p - 1);
    CHECK(d2.terms.at(Simplex{0, 1}) == 1 % p);
    Chain d1 = boundary_of(Simplex{0, 1}, p);
    CHECK(d1.terms.at(Simplex{1}) == 1 % p);
    CHECK(d1.terms.at(Simplex{0}) == p - 1);
  }
  CHECK_THROWS_AS(boundary_of(Simplex{4}, 3), std::invalid_argument);
}

TEST_CASE("d o d = 0 on random complexes") {
  Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    Complex c = random_complex(rng, 9, 5, 6);
    for (uint64_t p : {2ull, 3ull, 5ull})
      CHECK(chain_complex_of(c, p).boundary_squares_to_zero());
  }
}

TEST_CASE("reduced homology of the fixtures") {
  for (uint64_t p : {2ull, 3ull, 5ull}) {
    CHECK(reduced_homology_dims(solid_triangle(), p).dims.empty());
    CHECK(is_acyclic(solid_triangle(), p));
    CHECK(reduced_homology_dims(hollow_triangle(), p).dims ==
          std::vector<std::size_t>{0, 1});
    CHECK(!is_acyclic(hollow_triangle(), p));
    CHECK(reduced_homology_dims(annulus6(), p).dims ==
          std::vector<std::size_t>{0, 1});
    CHECK(reduced_homology_dims(two_hole(), p).dims ==
          std::vector<std::size_t>{0, 2});
    CHECK(reduced_homology_dims(torus7(), p).dims ==
          std::vector<std::size_t>{0, 2, 1});
  }
  CHECK(reduced_homology_dims(Complex(), 5).empty_complex);
  CHECK(!is_acyclic(Complex(), 5));
}

TEST_CASE("H0 counts connected components") {
  Rng rng(13);
  for (int i = 0; i < 25; ++i) {
    Complex c = random_complex(rng, 9, 3, 6);
    // union-find over vertices through edges
    std::vector<VertexId> verts = c.vertex_ids();
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto index_of = [&](VertexId v) {
      return (std::size_t)(std::lower_bound(verts.begin(), verts.end(), v) -
                           verts.begin());
    };
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const Simplex& s : c.simplices_of_dim(1)) {
      std::size_t a = find(index_of(s.vertex(0))),
                  b = find(index_of(s.vertex(1)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::size_t comps = 0;
    for (std::size_t v = 0; v < verts.size(); ++v)
      if (find(v) == v) ++comps;
    HomologyProfile prof = reduced_homology_dims(c, 3);
    std::size_t h0 = prof.dims.empty() ? 0 : prof.dims[0];
    CHECK(h0 == comps - 1);
  }
}

TEST_CASE("chain maps of the rotation on the solid triangle") {
  Complex c = solid_triangle();
  Permutation rot({0, 1, 2}, {1, 2, 0});
  for (uint64_t p : {3ull, 5ull}) {
    FpMatrix g1 = chain_map_matrix(rot, c, c, 1, p);
    // basis [0,1],[0,2],[1,2] in lex order
    // G1([0,1]) = [1,2], G1([0,2]) = -[0,1], G1([1,2]) = -[0,2]
    CHECK(g1.at(2, 0) == 1);
    CHECK(g1.at(0, 1) == p - 1);
    CHECK(g1.at(1, 2) == p - 1);
    FpMatrix g2 = chain_map_matrix(rot, c, c, 2, p);
    CHECK(g2.at(0, 0) == 1);
    FpMatrix g0 = chain_map_matrix(rot, c, c, 0, p);
    CHECK(g0.at(1, 0) == 1);  // [0] -> [1]
    // commutes with the boundary
    FpMatrix d1 = boundary_matrix(c, 1, p);
    FpMatrix d2 = boundary_matrix(c, 2, p);
    CHECK(d1.multiply(g1) == g0.multiply(d1));
    CHECK(d2.multiply(g2) == g1.multiply(d2));
  }
  // identity gives identity matrices in every degree
  Permutation id = Permutation::identity({0, 1, 2});
  for (int n = 0; n <= 2; ++n)
    CHECK(chain_map_matrix(id, c, c, n, 5).is_identity());
  // non-isomorphism is rejected
  Permutation bad({0, 1, 2, 3}, {3, 1, 2, 0});
  CHECK_THROWS_AS(chain_map_matrix(bad, fig_two_triangles(),
                                   fig_two_triangles(), 1, 5),
                  std::invalid_argument);
}

TEST_CASE("functoriality of chain maps") {
  Complex c = torus7();
  std::vector<VertexId> dom{0, 1, 2, 3, 4, 5, 6};
  std::vector<VertexId> img{1, 2, 3, 4, 5, 6, 0};
  Permutation rot(dom, img);
  REQUIRE(is_automorphism(c, rot));
  Permutation rot2 = rot.compose_after(rot);
  for (uint64_t p : {2ull, 5ull})
    for (int n = 0; n <= 2; ++n) {
      FpMatrix f = chain_map_matrix(rot, c, c, n, p);
      FpMatrix g = chain_map_matrix(rot2, c, c, n, p);
      CHECK(g == f.multiply(f));
    }
}

TEST_CASE("lefschetz sums") {
  Complex c = solid_triangle();
  Permutation rot({0, 1, 2}, {1, 2, 0});
  Permutation id = Permutation::identity({0, 1, 2});
  for (uint64_t p : {2ull, 3ull, 5ull}) {
    CHECK(lefschetz_sum(id, c, p) == 1 % p);
    CHECK(lefschetz_sum(rot, c, p) == 1 % p);
    CHECK(lefschetz_sum(rot, hollow_triangle(), p) == 0);
  }
}

TEST_CASE("euler-poincare identity") {
  Rng rng(37);
  for (int i = 0; i < 20; ++i) {
    Complex c = random_complex(rng, 9, 4, 6);
    long long chi = euler_characteristic(c);
    for (uint64_t p : {2ull, 3ull}) {
      ChainComplexFp k = chain_complex_of(c, p);
      HomologyBasis h(k);
      long long chi_h = 0;
      for (std::size_t n = 0; n < k.dims.size(); ++n)
        chi_h += (n % 2 == 0) ? (long long)h.dim(n) : -(long long)h.dim(n);
      CHECK(chi == chi_h);
    }
  }
}

TEST_CASE("short exact sequence of a collapse pair") {
  // solid triangle relative to an elementary collapse: Z has one cell in each
  // of two adjacent degrees and the LES collapses accordingly
  Complex whole = solid_triangle();
  Complex sub = Complex::from_simplices(std::vector<Simplex>{
      Simplex{0}, Simplex{1}, Simplex{2}, Simplex{0, 2}, Simplex{1, 2}});
  for (uint64_t p : {2ull, 3ull, 5ull}) {
    ShortExactSequence ses = ses_from_subcomplex(sub, whole, p);
    CHECK(verify_ses_exact(ses).ok);
    CHECK(ses.Z.dims == std::vector<std::size_t>{0, 1, 1});
    CHECK(verify_les(ses).ok);
  }
}

TEST_CASE("identity and zero sequences") {
  Complex c = torus7();
  ShortExactSequence se1 = ses_from_subcomplex(c, c, 3);
  CHECK(verify_les(se1).ok);
  ShortExactSequence se0 = ses_from_subcomplex(Complex(), c, 3);
  CHECK(verify_les(se0).ok);
}

TEST_CASE("connecting map is independent of the lift") {
  Complex whole = cone(9, hollow_triangle());
  Complex sub = hollow_triangle();
  ShortExactSequence ses = ses_from_subcomplex(sub, whole, 5);
  HomologyBasis hx(ses.X), hz(ses.Z);
  for (std::size_t n = 1; n < ses.Y.dims.size(); ++n) {
    FpMatrix g0 = connecting_homomorphism(ses, hx, hz, n, 0);
    for (uint64_t shift : {1ull, 2ull, 3ull})
      CHECK(connecting_homomorphism(ses, hx, hz, n, shift) == g0);
  }
  CHECK(verify_les(ses).ok);
}

TEST_CASE("a corrupted connecting map breaks exactness") {
  // Y = two disjoint edges, X = their four endpoints; H1(Z) has rank 2
  Complex whole = Complex::from_facets({Simplex{0, 1}, Simplex{2, 3}});
  Complex sub = Complex::from_facets(
      {Simplex{0}, Simplex{1}, Simplex{2}, Simplex{3}});
  uint64_t p = 5;
  ShortExactSequence ses = ses_from_subcomplex(sub, whole, p);
  HomologyBasis hx(ses.X), hy(ses.Y), hz(ses.Z);
  REQUIRE(hz.dim(1) == 2);
  FpMatrix gamma = connecting_homomorphism(ses, hx, hz, 1);
  FpMatrix a0 = induced_on_homology(ses.F, ses.X, hx, hy, 0);

  // genuine gamma: im gamma = ker a0
  CHECK(a0.multiply(gamma).is_zero());
  // flip the sign of a single entry: the image tilts out of ker a0
  FpMatrix corrupted = gamma;
  bool flipped = false;
  for (std::size_t i = 0; i < corrupted.rows() && !flipped; ++i)
    for (std::size_t j = 0; j < corrupted.cols() && !flipped; ++j)
      if (corrupted.at(i, j) != 0) {
        corrupted.set(i, j, p - corrupted.at(i, j));
        flipped = true;
      }
  REQUIRE(flipped);
  CHECK(!a0.multiply(corrupted).is_zero());
}

TEST_CASE("ses exactness detects corrupted data") {
  // sub = the three vertices, so the quotient keeps the edges and the cell
  Complex verts = Complex::from_facets({Simplex{0}, Simplex{1}, Simplex{2}});
  ShortExactSequence ses = ses_from_subcomplex(verts, solid_triangle(), 3);
  REQUIRE(ses.Z.dims == std::vector<std::size_t>{0, 3, 1});
  REQUIRE(verify_ses_exact(ses).ok);
  // break the quotient boundary: it no longer commutes with G
  ShortExactSequence bad = ses;
  bad.Z.d[2].set(0, 0, fp_add(bad.Z.d[2].at(0, 0), 1, 3));
  ExactnessReport rep = verify_ses_exact(bad);
  CHECK(!rep.ok);
  CHECK(rep.diagnostic.find("commute") != std::string::npos);
  // break injectivity of F
  ShortExactSequence bad2 = ses;
  bad2.F.f[0] = FpMatrix(bad2.F.f[0].rows(), bad2.F.f[0].cols(), 3);
  CHECK(!verify_ses_exact(bad2).ok);
}

TEST_CASE("random subcomplex pairs satisfy the long exact sequence") {
  Rng rng(41);
  for (int i = 0; i < 10; ++i) {
    Complex whole = random_complex(rng, 8, 4, 5);
    Complex sub = random_subcomplex(rng, whole);
    ShortExactSequence ses = ses_from_subcomplex(sub, whole, 3);
    ExactnessReport rep = verify_les(ses);
    CHECK(rep.ok);
  }
}
