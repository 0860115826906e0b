// Barycentric subdivision.  Vertices of bar(c) correspond to simplices of c;
// simplices of bar(c) are the strict inclusion-chains.  New vertex ids are
// consecutive integers assigned in (dim, lex) order of the original
// simplices, and the dictionary retains the correspondence so that group
// actions can be transported.

#ifndef EVATOP_SUBDIVISION_HPP
#define EVATOP_SUBDIVISION_HPP

#include <unordered_map>
#include <vector>

#include "evatop/simplex.hpp"

namespace evatop {

struct BarDictionary {
  // new vertex id -> original simplex
  std::vector<Simplex> simplex_of;
  // original simplex -> new vertex id
  std::unordered_map<Simplex, VertexId, SimplexHash> id_of;

  VertexId id(const Simplex& s) const { return id_of.at(s); }
};

struct BarResult {
  Complex complex;
  BarDictionary dict;
};

BarResult barycentric_subdivision(const Complex& c);

}  // namespace evatop

#endif
