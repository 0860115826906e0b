// Simplicial group actions: fixed sets, quotient complexes on vertex orbits,
// and transport of automorphisms to barycentric subdivisions.

#ifndef EVATOP_GROUP_ACTION_HPP
#define EVATOP_GROUP_ACTION_HPP

#include <vector>

#include "evatop/permutation.hpp"
#include "evatop/simplex.hpp"
#include "evatop/subdivision.hpp"

namespace evatop {

// True iff the image of every simplex of c under f is again a simplex of c;
// throws if f is undefined on some vertex of c.
bool is_automorphism(const Complex& c, const Permutation& f);

// Setwise-invariant simplices.  The result need not be downward closed;
// is_subcomplex records whether it is.
struct FixedSet {
  std::vector<Simplex> simplices;  // (dim, lex)
  bool is_subcomplex = false;

  long long euler() const { return euler_characteristic(simplices); }
  Complex as_complex() const;  // throws when not a subcomplex
};

FixedSet fixed_set(const Complex& c, const Permutation& f);
FixedSet fixed_set(const Complex& c, const PermGroup& g);

// Quotient on vertex orbits: vertex i of the quotient is the i-th orbit
// (sorted by minimum element); a set of orbits is a simplex iff the union of
// its orbits is a simplex of c.  Always a complex.
struct QuotientComplex {
  std::vector<std::vector<VertexId>> orbits;
  Complex complex;
};

QuotientComplex quotient_complex(const Complex& c, const PermGroup& g);

// The automorphism of bar(c) induced by f: the vertex named after simplex Q
// goes to the vertex named after f(Q).
Permutation bar_action(const Complex& c, const Permutation& f,
                       const BarDictionary& dict);

// Checks that chains of orbit-unions give a simplicial isomorphism from
// bar(quotient) onto the G-fixed subcomplex of bar(c).
bool verify_bar_quotient_iso(const Complex& c, const PermGroup& g);

}  // namespace evatop

#endif
