// Named fixture complexes and the seeded random generators used by the test
// and verification suites.

#ifndef EVATOP_FIXTURES_HPP
#define EVATOP_FIXTURES_HPP

#include <vector>

#include "evatop/permutation.hpp"
#include "evatop/rng.hpp"
#include "evatop/simplex.hpp"

namespace evatop {

// Hollow triangle on {0,1,2} (no 2-cell).
Complex hollow_triangle();
// Solid triangle: full complex on {0,1,2}.
Complex solid_triangle();
// Triangulated annulus on 6 vertices: outer triangle {0,1,2}, inner {3,4,5}.
Complex annulus6();
// Two annuli glued along the edge {0,1}; two independent 1-cycles.
Complex two_hole();
// 7-vertex triangulation of the torus: triangles {i,i+1,i+3} and {i,i+2,i+3}
// mod 7.
Complex torus7();
// Two triangles {0,1,2} and {0,2,3} glued along {0,2}.
Complex fig_two_triangles();

// Vertex relabeling v -> v + offset.
Complex relabel_shift(const Complex& c, VertexId offset);
Complex relabel(const Complex& c, const Permutation& f);
// Union of simplex sets (valid for any two complexes).
Complex union_of(const Complex& a, const Complex& b);

// Random complex from random facets.
Complex random_complex(Rng& rng, int max_vertices = 10, int max_facet_card = 4,
                       int max_facets = 8);

// Collapsible by construction: random reverse primitive expansions from a
// single vertex.
Complex random_collapsible(Rng& rng, int expansions, int max_vertices = 14);

// Random downward-closed subfamily of c.
Complex random_subcomplex(Rng& rng, const Complex& c);

// Full automorphism group by backtracking search; throws if more than cap
// are found.
std::vector<Permutation> automorphisms_of(const Complex& c,
                                          std::size_t cap = 20000);

// A collapsible complex with an order-p rotation: apex cone over p disjoint
// relabeled copies of a random collapsible blade plus a pointwise-fixed part.
struct SymmetricCone {
  Complex complex;
  Permutation rotation;  // order p, fixes the apex and the fixed part
};

SymmetricCone symmetric_cone(Rng& rng, int p, int blade_expansions,
                             int fixed_expansions);

}  // namespace evatop

#endif
