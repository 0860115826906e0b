#include "evatop/decision_tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace evatop {

namespace {

// Query state: digit e is 0 unqueried, 1 present, 2 absent.
struct Minimax {
  std::size_t m;
  std::vector<uint8_t> truth;   // h over all 2^m masks
  std::vector<uint64_t> pow3;
  std::vector<int8_t> cval;     // 0, 1, or 2 = mixed; -1 = unknown
  std::vector<int8_t> depth;    // D value; -1 = unknown

  explicit Minimax(const PropertyOracle& h) : m(h.num_edges()) {
    if (m > kMaxExactEdges)
      throw std::invalid_argument(
          "dtc: exact mode supports at most " +
          std::to_string(kMaxExactEdges) + " edges (got " + std::to_string(m) +
          ")");
    truth.resize(std::size_t{1} << m);
    for (uint64_t mask = 0; mask < truth.size(); ++mask)
      truth[mask] = (uint8_t)h(mask);
    pow3.resize(m + 1);
    pow3[0] = 1;
    for (std::size_t i = 1; i <= m; ++i) pow3[i] = pow3[i - 1] * 3;
    cval.assign(pow3[m], -1);
    depth.assign(pow3[m], -1);
  }

  // digit of state at position e
  static int digit(uint64_t state, uint64_t p3) { return (int)(state / p3 % 3); }

  int constant_value(uint64_t state, uint64_t present, std::size_t first_free) {
    int8_t& memo = cval[state];
    if (memo >= 0) return memo;
    std::size_t e = first_free;
    while (e < m && digit(state, pow3[e]) != 0) ++e;
    int v;
    if (e == m) {
      v = truth[present];
    } else {
      int a = constant_value(state + pow3[e], present | (uint64_t{1} << e), e + 1);
      int b = constant_value(state + 2 * pow3[e], present, e + 1);
      v = (a == b) ? a : 2;
    }
    memo = (int8_t)v;
    return v;
  }

  int solve(uint64_t state, uint64_t present) {
    int8_t& memo = depth[state];
    if (memo >= 0) return memo;
    int d;
    if (constant_value(state, present, 0) != 2) {
      d = 0;
    } else {
      d = (int)m + 1;
      for (std::size_t e = 0; e < m; ++e) {
        if (digit(state, pow3[e]) != 0) continue;
        int yes = solve(state + pow3[e], present | (uint64_t{1} << e));
        int no = solve(state + 2 * pow3[e], present);
        d = std::min(d, 1 + std::max(yes, no));
      }
    }
    memo = (int8_t)d;
    return d;
  }
};

}  // namespace

DecisionTree::DecisionTree(std::vector<Node> nodes, int root, std::size_t m)
    : nodes_(std::move(nodes)), root_(root), m_(m) {}

int DecisionTree::evaluate(uint64_t mask) const {
  int cur = root_;
  while (!nodes_[cur].is_leaf)
    cur = (mask >> nodes_[cur].edge) & 1 ? nodes_[cur].yes : nodes_[cur].no;
  return nodes_[cur].value;
}

std::size_t DecisionTree::depth() const {
  std::vector<std::pair<int, std::size_t>> stack{{root_, 0}};
  std::size_t best = 0;
  while (!stack.empty()) {
    auto [node, d] = stack.back();
    stack.pop_back();
    if (nodes_[node].is_leaf) {
      best = std::max(best, d);
      continue;
    }
    stack.push_back({nodes_[node].yes, d + 1});
    stack.push_back({nodes_[node].no, d + 1});
  }
  return best;
}

bool DecisionTree::no_repeated_queries() const {
  bool ok = true;
  std::vector<bool> seen(m_, false);
  auto rec = [&](auto&& self, int node) -> void {
    if (!ok || nodes_[node].is_leaf) return;
    std::size_t e = nodes_[node].edge;
    if (seen[e]) {
      ok = false;
      return;
    }
    seen[e] = true;
    self(self, nodes_[node].yes);
    self(self, nodes_[node].no);
    seen[e] = false;
  };
  rec(rec, root_);
  return ok;
}

std::string DecisionTree::to_dot() const {
  std::ostringstream os;
  os << "digraph decision_tree {\n";
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].is_leaf)
      os << "  n" << i << " [shape=box,label=\"" << nodes_[i].value << "\"];\n";
    else
      os << "  n" << i << " [label=\"e" << nodes_[i].edge << "\"];\n";
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].is_leaf) continue;
    os << "  n" << i << " -> n" << nodes_[i].yes << " [label=\"Y\"];\n";
    os << "  n" << i << " -> n" << nodes_[i].no << " [label=\"N\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string DecisionTree::to_json() const {
  nlohmann::json j;
  j["num_edges"] = m_;
  j["root"] = root_;
  j["nodes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    nlohmann::json n;
    n["id"] = i;
    if (nodes_[i].is_leaf) {
      n["leaf"] = nodes_[i].value;
    } else {
      n["edge"] = nodes_[i].edge;
      n["yes"] = nodes_[i].yes;
      n["no"] = nodes_[i].no;
    }
    j["nodes"].push_back(std::move(n));
  }
  return j.dump();
}

int dtc(const PropertyOracle& h) {
  Minimax mm(h);
  return mm.solve(0, 0);
}

bool is_evasive(const PropertyOracle& h) {
  return dtc(h) == (int)h.num_edges();
}

DecisionTree extract_tree(const PropertyOracle& h) {
  Minimax mm(h);
  mm.solve(0, 0);
  std::vector<DecisionTree::Node> nodes;
  auto build = [&](auto&& self, uint64_t state, uint64_t present) -> int {
    if (mm.constant_value(state, present, 0) != 2) {
      DecisionTree::Node leaf;
      leaf.is_leaf = true;
      leaf.value = mm.constant_value(state, present, 0);
      nodes.push_back(leaf);
      return (int)nodes.size() - 1;
    }
    int d = mm.solve(state, present);
    for (std::size_t e = 0; e < mm.m; ++e) {
      if (Minimax::digit(state, mm.pow3[e]) != 0) continue;
      int yes = mm.solve(state + mm.pow3[e], present | (uint64_t{1} << e));
      int no = mm.solve(state + 2 * mm.pow3[e], present);
      if (1 + std::max(yes, no) == d) {
        int yi = self(self, state + mm.pow3[e], present | (uint64_t{1} << e));
        int ni = self(self, state + 2 * mm.pow3[e], present);
        DecisionTree::Node n;
        n.is_leaf = false;
        n.edge = e;
        n.yes = yi;
        n.no = ni;
        nodes.push_back(n);
        return (int)nodes.size() - 1;
      }
    }
    throw std::logic_error("extract_tree: no optimal edge found");
  };
  int root = build(build, 0, 0);
  return DecisionTree(std::move(nodes), root, h.num_edges());
}

DecisionTree normalize_tree(const DecisionTree& t, std::size_t m) {
  if (t.depth() >= m)
    throw std::invalid_argument(
        "normalize_tree: tree of depth " + std::to_string(t.depth()) +
        " on " + std::to_string(m) + " edges cannot be padded to m-1");
  if (!t.no_repeated_queries())
    throw std::invalid_argument("normalize_tree: repeated query on a path");
  std::vector<DecisionTree::Node> nodes;
  // pad a leaf with dummy queries (both children equal) on the lowest-index
  // unqueried edges until the path holds m-1 distinct queries
  auto pad = [&](auto&& self, int value, uint64_t queried,
                 std::size_t count) -> int {
    if (count == m - 1) {
      DecisionTree::Node leaf;
      leaf.is_leaf = true;
      leaf.value = value;
      nodes.push_back(leaf);
      return (int)nodes.size() - 1;
    }
    std::size_t e = 0;
    while (queried & (uint64_t{1} << e)) ++e;
    int yi = self(self, value, queried | (uint64_t{1} << e), count + 1);
    int ni = self(self, value, queried | (uint64_t{1} << e), count + 1);
    DecisionTree::Node n;
    n.is_leaf = false;
    n.edge = e;
    n.yes = yi;
    n.no = ni;
    nodes.push_back(n);
    return (int)nodes.size() - 1;
  };
  auto rebuild = [&](auto&& self, int node, uint64_t queried,
                     std::size_t count) -> int {
    const auto& src = t.nodes()[node];
    if (src.is_leaf) return pad(pad, src.value, queried, count);
    uint64_t q2 = queried | (uint64_t{1} << src.edge);
    int yi = self(self, src.yes, q2, count + 1);
    int ni = self(self, src.no, q2, count + 1);
    DecisionTree::Node n;
    n.is_leaf = false;
    n.edge = src.edge;
    n.yes = yi;
    n.no = ni;
    nodes.push_back(n);
    return (int)nodes.size() - 1;
  };
  int root = rebuild(rebuild, t.root(), 0, 0);
  return DecisionTree(std::move(nodes), root, m);
}

CollapseSequence collapse_from_tree(const PropertyOracle& h,
                                    const DecisionTree& t) {
  std::size_t m = h.num_edges();
  if (check_monotone(h))
    throw std::invalid_argument("collapse_from_tree: oracle is not monotone");
  bool has_zero_graph = false;
  for (uint64_t mask = 1; mask < (uint64_t{1} << m); ++mask)
    if (h(mask) == 0) {
      has_zero_graph = true;
      break;
    }
  if (h(0) != 0 || !has_zero_graph)
    throw std::invalid_argument(
        "collapse_from_tree: the property complex is empty");
  if (t.depth() != m - 1 || !t.no_repeated_queries())
    throw std::invalid_argument("collapse_from_tree: tree is not normalized");

  // leaves in ascending order: Y branches first
  struct Leaf {
    int value;
    uint64_t present;
    uint64_t queried;
  };
  std::vector<Leaf> leaves;
  auto walk = [&](auto&& self, int node, uint64_t present,
                  uint64_t queried) -> void {
    const auto& n = t.nodes()[node];
    if (n.is_leaf) {
      if ((std::size_t)std::popcount(queried) != m - 1)
        throw std::invalid_argument(
            "collapse_from_tree: a path queries fewer than m-1 edges");
      leaves.push_back(Leaf{n.value, present, queried});
      return;
    }
    self(self, n.yes, present | (uint64_t{1} << n.edge),
         queried | (uint64_t{1} << n.edge));
    self(self, n.no, present, queried | (uint64_t{1} << n.edge));
  };
  walk(walk, t.root(), 0, 0);

  auto mask_simplex = [](uint64_t mask) {
    std::vector<VertexId> verts;
    for (std::size_t e = 0; e < 64; ++e)
      if (mask & (uint64_t{1} << e)) verts.push_back((VertexId)e);
    return Simplex(std::move(verts));
  };

  uint64_t full = (uint64_t{1} << m) - 1;
  CollapseSequence seq;
  bool saw_final = false;
  for (const Leaf& leaf : leaves) {
    if (leaf.value != 0) continue;
    uint64_t free_edge = full & ~leaf.queried;
    // correctness of the tree forces h to agree on both graphs of the leaf
    if (h(leaf.present) != 0 || h(leaf.present | free_edge) != 0)
      throw std::logic_error(
          "collapse_from_tree: tree does not compute h at a 0-leaf");
    if (leaf.present == 0) {
      // the all-absent leaf is the maximum of the leaf order; its pair
      // (empty graph, single edge) supplies the terminal vertex
      saw_final = true;
      seq.terminal = Complex::from_facets({mask_simplex(free_edge)});
      continue;
    }
    if (saw_final)
      throw std::logic_error(
          "collapse_from_tree: 0-leaf after the all-absent leaf");
    Simplex gamma1 = mask_simplex(leaf.present);
    Simplex gamma2 = mask_simplex(leaf.present | free_edge);
    std::vector<Simplex> removed{gamma1, gamma2};
    std::sort(removed.begin(), removed.end(), dimlex_less);
    seq.steps.push_back(CollapseStep{gamma1, removed});
  }
  if (!saw_final)
    throw std::logic_error("collapse_from_tree: no all-absent 0-leaf found");
  return seq;
}

}  // namespace evatop
