// Abstract simplicial complexes with integer-labeled, totally ordered
// vertices.  A Simplex is a strictly increasing vertex tuple; a Complex is a
// downward-closed set of simplices with O(1) membership and a cached facet
// list.  Complexes are immutable after construction.

#ifndef EVATOP_SIMPLEX_HPP
#define EVATOP_SIMPLEX_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace evatop {

using VertexId = uint32_t;

// Default cap on distinct vertices per complex; everything here is
// exponential, so larger inputs are almost certainly a mistake.
inline constexpr std::size_t kMaxVerticesPerComplex = 64;

class Simplex {
 public:
  Simplex() = default;
  // Sorts the input; throws on duplicates or empty input.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices);

  int dim() const { return (int)v_.size() - 1; }
  std::size_t card() const { return v_.size(); }
  std::span<const VertexId> vertices() const { return v_; }
  VertexId vertex(std::size_t i) const { return v_[i]; }

  bool contains_vertex(VertexId v) const;
  bool is_face_of(const Simplex& other) const;  // subset test

  // Codimension-1 faces, in lex order of the result.
  std::vector<Simplex> facets() const;
  // All nonempty proper and improper faces.
  std::vector<Simplex> all_faces() const;

  Simplex with_vertex(VertexId v) const;     // insert (must be absent)
  Simplex without_vertex(VertexId v) const;  // erase (must be present; card>1)

  bool operator==(const Simplex& o) const { return v_ == o.v_; }
  bool operator!=(const Simplex& o) const { return v_ != o.v_; }

  std::string to_string() const;

 private:
  std::vector<VertexId> v_;
};

// Canonical project-wide order: by dimension, then lexicographic.
bool dimlex_less(const Simplex& a, const Simplex& b);

struct DimLexOrder {
  bool operator()(const Simplex& a, const Simplex& b) const {
    return dimlex_less(a, b);
  }
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const;
};

class Complex {
 public:
  Complex() = default;  // the empty complex

  // Downward closure of the given facets.
  static Complex from_facets(std::span<const Simplex> facets);
  static Complex from_facets(std::initializer_list<Simplex> facets);
  // Validates downward closure; throws if the set is not a complex.
  static Complex from_simplices(std::span<const Simplex> simplices);

  bool empty() const { return simp_.empty(); }
  std::size_t size() const { return simp_.size(); }
  int dim() const;  // -1 for the empty complex
  bool contains(const Simplex& s) const { return simp_.count(s) != 0; }

  // All simplices in (dim, lex) order.
  std::vector<Simplex> sorted_simplices() const;
  std::vector<Simplex> simplices_of_dim(int n) const;  // lex order
  std::size_t count_of_dim(int n) const;
  std::vector<Simplex> facets() const;  // maximal simplices, (dim, lex)
  std::vector<VertexId> vertex_ids() const;

  bool is_subcomplex_of(const Complex& other) const;
  bool operator==(const Complex& o) const { return simp_ == o.simp_; }

  // Stable byte encoding of the sorted simplex list; used as a search key.
  std::string canonical_key() const;

  // Removes the given simplices (used by collapse moves); the caller is
  // responsible for the result being a complex again.
  Complex without(std::span<const Simplex> removed) const;

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& s : simp_) f(s);
  }

 private:
  static Complex from_set(std::unordered_set<Simplex, SimplexHash> set);
  void check_vertex_cap() const;

  std::unordered_set<Simplex, SimplexHash> simp_;
};

// Alternating count of simplices by dimension; works on any subset of a
// complex, closed or not.
long long euler_characteristic(std::span<const Simplex> simplices);
long long euler_characteristic(const Complex& c);

// c plus all sets {t} | Q for Q in c or Q empty; throws if t is a vertex of c.
Complex cone(VertexId t, const Complex& c);

enum class StandardKind { Pi, Theta, Lambda };

// Pi_n: all nonempty subsets of {0..n}; Theta_n: Pi_n minus the top cell;
// Lambda_n: Theta_n minus [0..n-1].
Complex standard_complex(StandardKind kind, int n);

// JSON I/O.  Serialization emits {"facets": [...]} with facets in (dim, lex)
// order; parsing accepts {"facets": [...]} or {"simplices": [...]}.
std::string complex_to_json(const Complex& c);
Complex complex_from_json(const std::string& text);

}  // namespace evatop

#endif
