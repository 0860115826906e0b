// Chain groups over F_p, boundary maps, (reduced) homology dimensions, chain
// maps of simplicial isomorphisms with orientation signs, Lefschetz traces,
// and the long-exact-sequence machinery for subcomplex pairs.
//
// Bases: the n-th chain group of a complex is indexed by its n-simplices in
// lex order.  Boundary of [v_0..v_n] is the alternating sum of the
// codimension-1 faces; the chain map of a vertex bijection f sends Q to
// sign(f restricted to Q) * f(Q).

#ifndef EVATOP_CHAIN_HPP
#define EVATOP_CHAIN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "evatop/fp.hpp"
#include "evatop/permutation.hpp"
#include "evatop/simplex.hpp"

namespace evatop {

// Sparse F_p chain; zero coefficients are absent.
struct Chain {
  uint64_t p = 2;
  int degree = 0;
  std::map<Simplex, uint64_t, DimLexOrder> terms;
};

// Alternating-sum boundary of a single simplex; throws on 0-simplices.
Chain boundary_of(const Simplex& q, uint64_t p);

// Boundary matrix d_n of c: rows are (n-1)-simplices, columns n-simplices,
// both in lex order.  For n == 0 the matrix has zero rows.
FpMatrix boundary_matrix(const Complex& c, int n, uint64_t p);

struct HomologyProfile {
  uint64_t p = 2;
  bool empty_complex = false;
  std::vector<std::size_t> dims;  // reduced Betti numbers, trailing zeros trimmed

  bool all_zero() const { return !empty_complex && dims.empty(); }
  std::string to_json() const;
};

// Reduced F_p homology dimensions (augmentation in degree 0); the empty
// complex yields a profile with empty_complex set.
HomologyProfile reduced_homology_dims(const Complex& c, uint64_t p);

// True iff all reduced homology dimensions vanish; false (never throws) on
// the empty complex.
bool is_acyclic(const Complex& c, uint64_t p);

// Sign (+1 -> 1, -1 -> p-1) of f restricted to the vertices of q.
uint64_t restriction_sign(const Permutation& f, const Simplex& q, uint64_t p);

// Degree-n chain map matrix of the simplicial isomorphism src -> dst induced
// by the vertex bijection f; throws if f is not such an isomorphism.
FpMatrix chain_map_matrix(const Permutation& f, const Complex& src,
                          const Complex& dst, int n, uint64_t p);

// Alternating sum of chain-map traces of the automorphism f of c, mod p.
uint64_t lefschetz_sum(const Permutation& f, const Complex& c, uint64_t p);

// ---- Generic chain complexes and the snake lemma ----

// A finite complex of F_p vector spaces, degrees 0..m.  d[n] maps degree n to
// degree n-1 (d[0] has zero rows).
struct ChainComplexFp {
  uint64_t p = 2;
  std::vector<std::size_t> dims;
  std::vector<FpMatrix> d;

  std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
  bool boundary_squares_to_zero() const;
};

// Degreewise linear maps between two complexes of equal length.
struct ChainMapFp {
  std::vector<FpMatrix> f;
};

ChainComplexFp chain_complex_of(const Complex& c, uint64_t p,
                                std::size_t min_degrees = 0);

// Homology of a ChainComplexFp with explicit cycle representatives, so that
// maps on homology can be evaluated.
class HomologyBasis {
 public:
  explicit HomologyBasis(const ChainComplexFp& k);

  std::size_t degrees() const { return dim_.size(); }
  std::size_t dim(std::size_t n) const { return n < dim_.size() ? dim_[n] : 0; }
  // Representative cycles as columns (chain-space rows).
  const FpMatrix& reps(std::size_t n) const { return reps_[n]; }
  // Coordinates of the cycle v in the homology basis at degree n.
  std::vector<uint64_t> coords(std::size_t n,
                               const std::vector<uint64_t>& v) const;

 private:
  std::vector<std::size_t> dim_;
  std::vector<FpMatrix> reps_;
  std::vector<FpMatrix> solver_;  // [boundary basis | reps]
};

// Short exact sequence 0 -> X -F-> Y -G-> Z -> 0 of chain complexes.
struct ShortExactSequence {
  ChainComplexFp X, Y, Z;
  ChainMapFp F, G;
};

// X = chains of sub, Y = chains of whole, Z = quotient (basis: simplices of
// whole not in sub); sub must be a subcomplex of whole.
ShortExactSequence ses_from_subcomplex(const Complex& sub, const Complex& whole,
                                       uint64_t p);

// Degreewise exactness of the SES itself (F injective, G surjective,
// im F = ker G, boundaries commute).  On failure names the failing degree.
struct ExactnessReport {
  bool ok = true;
  std::string diagnostic;
};
ExactnessReport verify_ses_exact(const ShortExactSequence& ses);

// Map on homology induced by a degreewise chain map.
FpMatrix induced_on_homology(const ChainMapFp& f, const ChainComplexFp& src,
                             const HomologyBasis& hsrc,
                             const HomologyBasis& hdst, std::size_t n);

// Connecting homomorphism H_n(Z) -> H_{n-1}(X) via lift, boundary, pullback.
// lift_shift, when nonzero, perturbs the chosen lift by an element of im F;
// the result must not depend on it.
FpMatrix connecting_homomorphism(const ShortExactSequence& ses,
                                 const HomologyBasis& hx,
                                 const HomologyBasis& hz, std::size_t n,
                                 uint64_t lift_shift = 0);

// Exactness of the long sequence
//   0 -> H_m(X) -> H_m(Y) -> H_m(Z) -> H_{m-1}(X) -> ... -> H_0(Z) -> 0
// at every node.
ExactnessReport verify_les(const ShortExactSequence& ses);

}  // namespace evatop

#endif
