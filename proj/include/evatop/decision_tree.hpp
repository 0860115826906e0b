// Exact decision-tree complexity of boolean functions on edge masks, by
// memoized adversarial minimax over ternary query states, plus optimal-tree
// extraction, uniform-depth normalization, and the construction that turns a
// normalized tree for a monotone non-evasive oracle into a collapse
// certificate for its property complex.

#ifndef EVATOP_DECISION_TREE_HPP
#define EVATOP_DECISION_TREE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "evatop/collapse.hpp"
#include "evatop/graph_props.hpp"

namespace evatop {

// Exact mode handles at most 15 edges (3^15 states).
inline constexpr std::size_t kMaxExactEdges = 15;

class DecisionTree {
 public:
  struct Node {
    bool is_leaf = true;
    int value = 0;       // leaf label
    std::size_t edge = 0;  // query edge (internal nodes)
    int yes = -1, no = -1;  // child indices
  };

  DecisionTree() = default;
  DecisionTree(std::vector<Node> nodes, int root, std::size_t m);

  std::size_t num_edges() const { return m_; }
  int root() const { return root_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  int evaluate(uint64_t mask) const;
  std::size_t depth() const;
  // True iff no edge repeats on any root-to-leaf path.
  bool no_repeated_queries() const;

  std::string to_dot() const;
  std::string to_json() const;

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
  std::size_t m_ = 0;
};

// D(h): 0 if h is constant on the consistent cube, else 1 + min over
// unqueried edges of the max over the two answers; refuses universes beyond
// kMaxExactEdges.
int dtc(const PropertyOracle& h);

// D(h) == C(n,2) (or |Y|*|Z| on a bipartite universe, or the raw edge count
// for an abstract universe).
bool is_evasive(const PropertyOracle& h);

// A depth-D(h) tree computing h; ties broken toward the lowest edge index.
DecisionTree extract_tree(const PropertyOracle& h);

// Pads every path to exactly m-1 distinct queries using dummy queries on the
// lowest-index unqueried edge; throws when the input has depth m.
DecisionTree normalize_tree(const DecisionTree& t, std::size_t m);

// Reads the collapse of the property complex off a normalized tree: 0-leaves
// in ascending (Y before N) order each contribute one elementary collapse
// removing their graph pair; the all-absent leaf supplies the terminal
// vertex.  Requires h monotone, non-evasive, with a nonempty complex.
CollapseSequence collapse_from_tree(const PropertyOracle& h,
                                    const DecisionTree& t);

}  // namespace evatop

#endif
