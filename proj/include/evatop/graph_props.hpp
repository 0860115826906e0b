// Edge universes, boolean property oracles on edge subsets (ordinary and
// bipartite), the complexes built from their 0-graphs, validation
// (monotone / isomorphism-invariant / trivial), weight enumerators, and the
// small-graph isomorphism-class machinery used by the exhaustive suites.
//
// Edge subsets are bitmasks over a fixed edge order, so oracles are pure
// functions uint64 -> {0,1} on universes of at most 64 edges.

#ifndef EVATOP_GRAPH_PROPS_HPP
#define EVATOP_GRAPH_PROPS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evatop/permutation.hpp"
#include "evatop/rng.hpp"
#include "evatop/simplex.hpp"

namespace evatop {

// All 2-subsets {a,b}, a<b, of {0..n-1} in colex order ((0,1),(0,2),(1,2),
// (0,3),...); the index doubles as the VertexId of the edge when property
// complexes are built.
struct EdgeUniverse {
  int n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;

  static EdgeUniverse complete(int n);
  std::size_t m() const { return edges.size(); }
  std::size_t index_of(VertexId a, VertexId b) const;
  // Edge permutation induced by a vertex permutation.
  Permutation induced_edge_perm(const Permutation& sigma) const;
  uint64_t apply_vertex_perm(const Permutation& sigma, uint64_t mask) const;
};

// Bipartite edge universe Y x Z; edge (i, j) has index j*|Y| + i.
struct BipartiteUniverse {
  int y = 0, z = 0;

  std::size_t m() const { return (std::size_t)y * z; }
  std::size_t index_of(int i, int j) const { return (std::size_t)j * y + i; }
  // Full join of Y with the column set S (bitmask over z).
  uint64_t full_columns_mask(uint64_t s) const;
  uint64_t apply_perms(const std::vector<int>& yperm,
                       const std::vector<int>& zperm, uint64_t mask) const;
};

class PropertyOracle {
 public:
  PropertyOracle() = default;
  PropertyOracle(std::size_t m, std::function<int(uint64_t)> eval,
                 std::string name);

  int operator()(uint64_t mask) const { return eval_(mask); }
  std::size_t num_edges() const { return m_; }
  const std::string& name() const { return name_; }

  bool claimed_monotone = false;
  bool claimed_invariant = false;
  std::optional<EdgeUniverse> universe;
  std::optional<BipartiteUniverse> bipartite;

 private:
  std::size_t m_ = 0;
  std::function<int(uint64_t)> eval_;
  std::string name_;
};

struct MonotoneCounterexample {
  uint64_t subset, superset;  // h(subset) = 1 > 0 = h(superset)
};
struct InvarianceCounterexample {
  uint64_t mask;
  std::string sigma;  // offending permutation, cycle notation
};

// Exhaustive when the scan fits under 2^24 evaluations, else a seeded
// randomized sweep.  nullopt = Ok.
std::optional<MonotoneCounterexample> check_monotone(
    const PropertyOracle& h, uint64_t seed = kDefaultSeed);
std::optional<InvarianceCounterexample> check_invariant(
    const PropertyOracle& h, uint64_t seed = kDefaultSeed);

bool is_trivial(const PropertyOracle& h);

// The complex of nonempty edge sets with h = 0; vertices are edge indices.
// When h.claimed_monotone is set, monotonicity is verified first and a
// violation throws with the counterexample in the message.
Complex delta_of_property(const PropertyOracle& h);
Complex bipartite_delta(const PropertyOracle& f);

struct WeightEnumerator {
  std::vector<long long> coeffs;  // coeffs[j] = number of h-graphs with j edges

  long long eval_at_minus_one() const;
  std::string to_string() const;
};

WeightEnumerator weight_enumerator(const PropertyOracle& h);

// Exact polynomial division over the integers: true iff (1+t)^k divides the
// enumerator.
bool rv_divisibility_check(const WeightEnumerator& w, int k);

// Builtins: contains_cycle, connectedness, min_edges(k), contains_clique(r),
// vertex2_incident, equals_mask(mask), nonempty.
PropertyOracle builtin_property(const std::string& name, int n,
                                long long param = -1);
// Bipartite builtins: bipartite_threshold(k) (more than k fully joined
// columns), bipartite_min_edges(k).
PropertyOracle builtin_bipartite_property(const std::string& name, int y,
                                          int z, long long param = -1);
// Truth-table oracle from {"n":4,"ones":[mask,...]}.
PropertyOracle truth_table_oracle(const std::string& json_text);

// ---- isomorphism classes of small graphs ----

// Lexicographically minimal mask over all vertex relabelings.
uint64_t canonical_graph_mask(uint64_t mask, const EdgeUniverse& u);
uint64_t canonical_bipartite_mask(uint64_t mask, const BipartiteUniverse& u);

struct GraphClassPoset {
  std::vector<uint64_t> reps;            // canonical masks, sorted
  std::vector<std::vector<bool>> leq;    // leq[i][j]: class i embeds in j
  std::vector<int> class_of_mask;        // full table over 2^m masks
};

GraphClassPoset graph_class_poset(int n);
GraphClassPoset bipartite_class_poset(int y, int z);

// All up-closed subsets of the class poset, as bitmasks over class indices.
// Throws if the count would exceed the cap.
std::vector<uint64_t> enumerate_up_sets(const GraphClassPoset& poset,
                                        std::size_t cap = 2000000);

// Oracle h(E) = 1 iff the class of E lies in the up-set.
PropertyOracle property_from_up_set(const GraphClassPoset& poset,
                                    uint64_t up_set, int n);
PropertyOracle bipartite_property_from_up_set(const GraphClassPoset& poset,
                                              uint64_t up_set, int y, int z);

}  // namespace evatop

#endif
