// Vertex permutations and finitely generated permutation groups.  Groups are
// fully enumerated (the instances here are tiny); a configurable cap guards
// against runaway closures.

#ifndef EVATOP_PERMUTATION_HPP
#define EVATOP_PERMUTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "evatop/simplex.hpp"

namespace evatop {

class Permutation {
 public:
  Permutation() = default;
  // domain must be duplicate-free; image[i] = f(domain[i]) and must be a
  // bijection onto a duplicate-free set.
  Permutation(std::vector<VertexId> domain, std::vector<VertexId> image);

  static Permutation identity(std::vector<VertexId> domain);
  // Parses cycle notation like "(0 2)(1 3)" over the given domain; elements
  // not mentioned are fixed.
  static Permutation from_cycles(const std::string& text,
                                 std::vector<VertexId> domain);

  std::size_t size() const { return domain_.size(); }
  const std::vector<VertexId>& domain() const { return domain_; }
  const std::vector<VertexId>& image() const { return image_; }

  bool in_domain(VertexId v) const;
  VertexId operator()(VertexId v) const;
  Simplex apply(const Simplex& s) const;

  // True iff the image set equals the domain set.
  bool is_endomorphism() const;
  bool is_identity() const;

  Permutation inverse() const;
  // (this after g): x -> this(g(x)); g's image must lie in this->domain.
  Permutation compose_after(const Permutation& g) const;
  // Least n >= 1 with f^n = id; endomorphisms only.
  std::size_t order() const;

  bool operator==(const Permutation& o) const {
    return domain_ == o.domain_ && image_ == o.image_;
  }
  bool operator<(const Permutation& o) const;

  std::string to_cycle_string() const;  // endomorphisms only
  std::string to_json() const;

 private:
  std::vector<VertexId> domain_;  // sorted
  std::vector<VertexId> image_;
};

class PermGroup {
 public:
  PermGroup() = default;

  static PermGroup from_generators(std::vector<Permutation> gens,
                                   std::size_t cap = 100000);
  static PermGroup trivial(std::vector<VertexId> domain);

  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<VertexId>& domain() const { return domain_; }
  bool contains(const Permutation& f) const;

  bool is_abelian() const;
  // All subgroups, each as a sorted list of element indices.
  std::vector<std::vector<std::size_t>> subgroups() const;
  bool is_normal(const std::vector<std::size_t>& subgroup) const;
  bool quotient_is_cyclic(const std::vector<std::size_t>& normal_sub) const;
  PermGroup subgroup_from_indices(const std::vector<std::size_t>& idx) const;

  // Orbits of the natural action on the domain, sorted by minimum element.
  std::vector<std::vector<VertexId>> vertex_orbits() const;

 private:
  std::vector<Permutation> gens_;
  std::vector<Permutation> elements_;  // sorted
  std::vector<VertexId> domain_;
  // multiplication table over element indices, built on first use:
  // table[i][j] = index(e_i o e_j)
  mutable std::vector<std::vector<std::size_t>> table_;
  const std::vector<std::vector<std::size_t>>& table() const;
  std::size_t index_of(const Permutation& f) const;
};

// AGL(1, p^k): the maps x -> a*x + b over F_{p^k} acting on {0 .. p^k-1},
// elements encoded as little-endian base-p digit vectors.  translations is
// the subgroup {x -> x + b}.
struct AffineGroup {
  uint64_t p = 2;
  int k = 1;
  PermGroup group;
  PermGroup translations;
};

AffineGroup affine_group(uint64_t p, int k);

}  // namespace evatop

#endif
