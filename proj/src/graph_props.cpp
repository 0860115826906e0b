#include "evatop/graph_props.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace evatop {

namespace {

constexpr uint64_t kExhaustiveEvalCap = uint64_t{1} << 24;
constexpr std::size_t kRandomSweep = 200000;

uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= (uint64_t)i;
  return f;
}

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

EdgeUniverse EdgeUniverse::complete(int n) {
  if (n < 1) throw std::invalid_argument("EdgeUniverse: need n >= 1");
  EdgeUniverse u;
  u.n = n;
  for (int b = 1; b < n; ++b)
    for (int a = 0; a < b; ++a)
      u.edges.emplace_back((VertexId)a, (VertexId)b);
  if (u.edges.size() > 64)
    throw std::invalid_argument("EdgeUniverse: more than 64 edges");
  return u;
}

std::size_t EdgeUniverse::index_of(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].first == a && edges[i].second == b) return i;
  throw std::invalid_argument("EdgeUniverse: no such edge");
}

Permutation EdgeUniverse::induced_edge_perm(const Permutation& sigma) const {
  std::vector<VertexId> domain(edges.size()), image(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    domain[i] = (VertexId)i;
    VertexId a = sigma(edges[i].first), b = sigma(edges[i].second);
    image[i] = (VertexId)index_of(a, b);
  }
  return Permutation(std::move(domain), std::move(image));
}

uint64_t EdgeUniverse::apply_vertex_perm(const Permutation& sigma,
                                         uint64_t mask) const {
  uint64_t out = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (mask & (uint64_t{1} << i))
      out |= uint64_t{1} << index_of(sigma(edges[i].first),
                                     sigma(edges[i].second));
  return out;
}

uint64_t BipartiteUniverse::full_columns_mask(uint64_t s) const {
  uint64_t out = 0;
  for (int j = 0; j < z; ++j)
    if (s & (uint64_t{1} << j))
      for (int i = 0; i < y; ++i) out |= uint64_t{1} << index_of(i, j);
  return out;
}

uint64_t BipartiteUniverse::apply_perms(const std::vector<int>& yperm,
                                        const std::vector<int>& zperm,
                                        uint64_t mask) const {
  uint64_t out = 0;
  for (int j = 0; j < z; ++j)
    for (int i = 0; i < y; ++i)
      if (mask & (uint64_t{1} << index_of(i, j)))
        out |= uint64_t{1} << index_of(yperm[i], zperm[j]);
  return out;
}

PropertyOracle::PropertyOracle(std::size_t m, std::function<int(uint64_t)> eval,
                               std::string name)
    : m_(m), eval_(std::move(eval)), name_(std::move(name)) {
  if (m > 64) throw std::invalid_argument("PropertyOracle: m > 64");
}

std::optional<MonotoneCounterexample> check_monotone(const PropertyOracle& h,
                                                     uint64_t seed) {
  std::size_t m = h.num_edges();
  if (m <= 20 && (uint64_t)m * (uint64_t{1} << m) <= kExhaustiveEvalCap) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
      if (!h(mask)) continue;
      // h(mask)=1: all supersets must be 1; equivalently check each superset
      // from its subset side
      for (std::size_t e = 0; e < m; ++e) {
        uint64_t sup = mask | (uint64_t{1} << e);
        if (sup != mask && !h(sup))
          return MonotoneCounterexample{mask, sup};
      }
    }
    return std::nullopt;
  }
  Rng rng(seed);
  for (std::size_t it = 0; it < kRandomSweep; ++it) {
    uint64_t mask = rng.next() & ((m == 64) ? ~uint64_t{0}
                                            : ((uint64_t{1} << m) - 1));
    uint64_t sup = mask | (rng.next() & ((m == 64) ? ~uint64_t{0}
                                                   : ((uint64_t{1} << m) - 1)));
    if (h(mask) > h(sup)) return MonotoneCounterexample{mask, sup};
  }
  return std::nullopt;
}

std::optional<InvarianceCounterexample> check_invariant(const PropertyOracle& h,
                                                        uint64_t seed) {
  std::size_t m = h.num_edges();
  uint64_t full = (m == 64) ? ~uint64_t{0} : ((uint64_t{1} << m) - 1);
  if (h.universe) {
    const EdgeUniverse& u = *h.universe;
    std::vector<std::vector<int>> perms = all_perms(u.n);
    std::vector<VertexId> dom(u.n);
    std::iota(dom.begin(), dom.end(), 0);
    auto sigma_of = [&](const std::vector<int>& p) {
      std::vector<VertexId> img(p.begin(), p.end());
      return Permutation(dom, img);
    };
    if (u.n <= 8 && factorial(u.n) * (uint64_t{1} << m) <= kExhaustiveEvalCap) {
      for (const auto& p : perms) {
        Permutation sigma = sigma_of(p);
        for (uint64_t mask = 0; mask <= full; ++mask) {
          if (h(mask) != h(u.apply_vertex_perm(sigma, mask)))
            return InvarianceCounterexample{mask, sigma.to_cycle_string()};
        }
      }
      return std::nullopt;
    }
    Rng rng(seed);
    for (std::size_t it = 0; it < kRandomSweep; ++it) {
      uint64_t mask = rng.next() & full;
      Permutation sigma = sigma_of(perms[rng.below(perms.size())]);
      if (h(mask) != h(u.apply_vertex_perm(sigma, mask)))
        return InvarianceCounterexample{mask, sigma.to_cycle_string()};
    }
    return std::nullopt;
  }
  if (h.bipartite) {
    const BipartiteUniverse& u = *h.bipartite;
    auto yperms = all_perms(u.y), zperms = all_perms(u.z);
    auto cycle_str = [&](const std::vector<int>& yp, const std::vector<int>& zp) {
      std::ostringstream os;
      os << "Y[";
      for (int v : yp) os << v;
      os << "] Z[";
      for (int v : zp) os << v;
      os << "]";
      return os.str();
    };
    if (u.y <= 6 && u.z <= 6 &&
        factorial(u.y) * factorial(u.z) * (uint64_t{1} << m) <=
            kExhaustiveEvalCap) {
      for (const auto& yp : yperms)
        for (const auto& zp : zperms)
          for (uint64_t mask = 0; mask <= full; ++mask)
            if (h(mask) != h(u.apply_perms(yp, zp, mask)))
              return InvarianceCounterexample{mask, cycle_str(yp, zp)};
      return std::nullopt;
    }
    Rng rng(seed);
    for (std::size_t it = 0; it < kRandomSweep; ++it) {
      uint64_t mask = rng.next() & full;
      const auto& yp = yperms[rng.below(yperms.size())];
      const auto& zp = zperms[rng.below(zperms.size())];
      if (h(mask) != h(u.apply_perms(yp, zp, mask)))
        return InvarianceCounterexample{mask, cycle_str(yp, zp)};
    }
    return std::nullopt;
  }
  throw std::invalid_argument(
      "check_invariant: oracle has no (bipartite) edge universe attached");
}

bool is_trivial(const PropertyOracle& h) {
  std::size_t m = h.num_edges();
  int first = h(0);
  if (m <= 24) {
    for (uint64_t mask = 1; mask < (uint64_t{1} << m); ++mask)
      if (h(mask) != first) return false;
    return true;
  }
  // beyond the exhaustive cap: seeded sweep plus the extreme graphs
  uint64_t full = (m == 64) ? ~uint64_t{0} : ((uint64_t{1} << m) - 1);
  if (h(full) != first) return false;
  Rng rng(kDefaultSeed);
  for (std::size_t it = 0; it < kRandomSweep; ++it)
    if (h(rng.next() & full) != first) return false;
  return true;
}

namespace {

Complex delta_from_masks(const PropertyOracle& h) {
  std::size_t m = h.num_edges();
  if (m > 24)
    throw std::invalid_argument("delta_of_property: universe too large");
  if (h.claimed_monotone) {
    if (auto ce = check_monotone(h))
      throw std::invalid_argument(
          "delta_of_property: monotonicity violated by pair (" +
          std::to_string(ce->subset) + ", " + std::to_string(ce->superset) +
          ")");
  }
  std::vector<Simplex> simplices;
  for (uint64_t mask = 1; mask < (uint64_t{1} << m); ++mask) {
    if (h(mask) != 0) continue;
    std::vector<VertexId> verts;
    for (std::size_t e = 0; e < m; ++e)
      if (mask & (uint64_t{1} << e)) verts.push_back((VertexId)e);
    simplices.emplace_back(std::move(verts));
  }
  if (simplices.empty()) return Complex();
  return Complex::from_simplices(simplices);
}

}  // namespace

Complex delta_of_property(const PropertyOracle& h) { return delta_from_masks(h); }

Complex bipartite_delta(const PropertyOracle& f) {
  if (!f.bipartite)
    throw std::invalid_argument("bipartite_delta: oracle is not bipartite");
  return delta_from_masks(f);
}

long long WeightEnumerator::eval_at_minus_one() const {
  long long v = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    v += (j % 2 == 0) ? coeffs[j] : -coeffs[j];
  return v;
}

std::string WeightEnumerator::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!coeffs[j]) continue;
    if (!first) os << " + ";
    os << coeffs[j] << "*t^" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

WeightEnumerator weight_enumerator(const PropertyOracle& h) {
  std::size_t m = h.num_edges();
  if (m > 24)
    throw std::invalid_argument("weight_enumerator: universe too large");
  WeightEnumerator w;
  w.coeffs.assign(m + 1, 0);
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask)
    if (h(mask)) w.coeffs[std::popcount(mask)]++;
  return w;
}

bool rv_divisibility_check(const WeightEnumerator& w, int k) {
  if (k < 0) throw std::invalid_argument("rv_divisibility_check: k < 0");
  std::vector<long long> c = w.coeffs;
  for (int round = 0; round < k; ++round) {
    // divide c(t) by (1+t): c = (1+t) q + r
    if (c.empty()) break;
    std::size_t d = c.size() - 1;
    std::vector<long long> q(d, 0);
    for (std::size_t i = d; i >= 1; --i) {
      q[i - 1] = c[i];
      c[i - 1] -= q[i - 1];
      c[i] = 0;
    }
    if (c[0] != 0) return false;  // remainder
    q.push_back(0);
    c = std::move(q);
  }
  return true;
}

namespace {

int count_components(int n, uint64_t mask, const EdgeUniverse& u) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int comps = n;
  for (std::size_t e = 0; e < u.m(); ++e) {
    if (!(mask & (uint64_t{1} << e))) continue;
    int a = find(u.edges[e].first), b = find(u.edges[e].second);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --comps;
    }
  }
  return comps;
}

bool has_cycle(int n, uint64_t mask, const EdgeUniverse& u) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t e = 0; e < u.m(); ++e) {
    if (!(mask & (uint64_t{1} << e))) continue;
    int a = find(u.edges[e].first), b = find(u.edges[e].second);
    if (a == b) return true;
    parent[std::max(a, b)] = std::min(a, b);
  }
  return false;
}

}  // namespace

PropertyOracle builtin_property(const std::string& name, int n,
                                long long param) {
  EdgeUniverse u = EdgeUniverse::complete(n);
  PropertyOracle out;
  if (name == "contains_cycle") {
    out = PropertyOracle(u.m(), [n, u](uint64_t mask) {
      return has_cycle(n, mask, u) ? 1 : 0;
    }, name);
    out.claimed_monotone = out.claimed_invariant = true;
  } else if (name == "connectedness") {
    out = PropertyOracle(u.m(), [n, u](uint64_t mask) {
      return count_components(n, mask, u) == 1 ? 1 : 0;
    }, name);
    out.claimed_monotone = out.claimed_invariant = true;
  } else if (name == "min_edges") {
    if (param < 0) throw std::invalid_argument("min_edges: needs k");
    out = PropertyOracle(u.m(), [param](uint64_t mask) {
      return std::popcount(mask) >= param ? 1 : 0;
    }, name + "(" + std::to_string(param) + ")");
    out.claimed_monotone = out.claimed_invariant = true;
  } else if (name == "contains_clique") {
    if (param < 1) throw std::invalid_argument("contains_clique: needs r");
    std::vector<uint64_t> cliques;
    std::vector<int> members;
    auto rec = [&](auto&& self, int start, int left) -> void {
      if (left == 0) {
        uint64_t cm = 0;
        for (std::size_t i = 0; i < members.size(); ++i)
          for (std::size_t j = i + 1; j < members.size(); ++j)
            cm |= uint64_t{1} << u.index_of((VertexId)members[i],
                                            (VertexId)members[j]);
        cliques.push_back(cm);
        return;
      }
      for (int v = start; v <= n - left; ++v) {
        members.push_back(v);
        self(self, v + 1, left - 1);
        members.pop_back();
      }
    };
    rec(rec, 0, (int)param);
    out = PropertyOracle(u.m(), [cliques](uint64_t mask) {
      for (uint64_t cm : cliques)
        if ((mask & cm) == cm) return 1;
      return 0;
    }, name + "(" + std::to_string(param) + ")");
    out.claimed_monotone = out.claimed_invariant = true;
  } else if (name == "vertex2_incident") {
    uint64_t inc = 0;
    for (std::size_t e = 0; e < u.m(); ++e)
      if (u.edges[e].first == 2 || u.edges[e].second == 2)
        inc |= uint64_t{1} << e;
    out = PropertyOracle(u.m(), [inc](uint64_t mask) {
      return (mask & inc) ? 1 : 0;
    }, name);
    out.claimed_monotone = true;
    out.claimed_invariant = false;
  } else if (name == "equals_mask") {
    if (param < 0) throw std::invalid_argument("equals_mask: needs a mask");
    uint64_t target = (uint64_t)param;
    out = PropertyOracle(u.m(), [target](uint64_t mask) {
      return mask == target ? 1 : 0;
    }, name + "(" + std::to_string(param) + ")");
  } else if (name == "nonempty") {
    out = PropertyOracle(u.m(), [](uint64_t mask) { return mask ? 1 : 0; },
                         name);
    out.claimed_monotone = out.claimed_invariant = true;
  } else {
    throw std::invalid_argument("builtin_property: unknown name " + name);
  }
  out.universe = u;
  return out;
}

PropertyOracle builtin_bipartite_property(const std::string& name, int y,
                                          int z, long long param) {
  BipartiteUniverse u{y, z};
  if (u.m() > 64) throw std::invalid_argument("bipartite universe too large");
  PropertyOracle out;
  if (name == "bipartite_threshold") {
    if (param < 0) throw std::invalid_argument("bipartite_threshold: needs k");
    out = PropertyOracle(u.m(), [u, param](uint64_t mask) {
      int full = 0;
      for (int j = 0; j < u.z; ++j) {
        bool all = true;
        for (int i = 0; i < u.y; ++i)
          if (!(mask & (uint64_t{1} << u.index_of(i, j)))) all = false;
        if (all) ++full;
      }
      return full > param ? 1 : 0;
    }, name + "(" + std::to_string(param) + ")");
    out.claimed_monotone = out.claimed_invariant = true;
  } else if (name == "bipartite_min_edges") {
    if (param < 0) throw std::invalid_argument("bipartite_min_edges: needs k");
    out = PropertyOracle(u.m(), [param](uint64_t mask) {
      return std::popcount(mask) >= param ? 1 : 0;
    }, name + "(" + std::to_string(param) + ")");
    out.claimed_monotone = out.claimed_invariant = true;
  } else {
    throw std::invalid_argument("builtin_bipartite_property: unknown name " +
                                name);
  }
  out.bipartite = u;
  return out;
}

PropertyOracle truth_table_oracle(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  int n = j.at("n").get<int>();
  EdgeUniverse u = EdgeUniverse::complete(n);
  auto ones = std::make_shared<std::vector<uint8_t>>(
      std::size_t{1} << u.m(), 0);
  for (const auto& v : j.at("ones")) {
    uint64_t mask = v.get<uint64_t>();
    if (mask >= ones->size())
      throw std::invalid_argument("truth_table_oracle: mask out of range");
    (*ones)[mask] = 1;
  }
  PropertyOracle out(u.m(), [ones](uint64_t mask) { return (*ones)[mask]; },
                     "truth_table");
  out.universe = u;
  return out;
}

uint64_t canonical_graph_mask(uint64_t mask, const EdgeUniverse& u) {
  std::vector<std::vector<int>> perms = all_perms(u.n);
  std::vector<VertexId> dom(u.n);
  std::iota(dom.begin(), dom.end(), 0);
  uint64_t best = ~uint64_t{0};
  for (const auto& p : perms) {
    std::vector<VertexId> img(p.begin(), p.end());
    Permutation sigma(dom, img);
    best = std::min(best, u.apply_vertex_perm(sigma, mask));
  }
  return best;
}

uint64_t canonical_bipartite_mask(uint64_t mask, const BipartiteUniverse& u) {
  auto yperms = all_perms(u.y), zperms = all_perms(u.z);
  uint64_t best = ~uint64_t{0};
  for (const auto& yp : yperms)
    for (const auto& zp : zperms)
      best = std::min(best, u.apply_perms(yp, zp, mask));
  return best;
}

namespace {

GraphClassPoset poset_from_table(std::vector<int> class_of_mask,
                                 std::vector<uint64_t> reps) {
  GraphClassPoset out;
  out.reps = std::move(reps);
  out.class_of_mask = std::move(class_of_mask);
  std::size_t k = out.reps.size();
  out.leq.assign(k, std::vector<bool>(k, false));
  for (std::size_t j = 0; j < k; ++j) {
    uint64_t rep = out.reps[j];
    // all submasks of rep, including rep and 0
    uint64_t s = rep;
    while (true) {
      out.leq[out.class_of_mask[s]][j] = true;
      if (s == 0) break;
      s = (s - 1) & rep;
    }
  }
  return out;
}

}  // namespace

GraphClassPoset graph_class_poset(int n) {
  EdgeUniverse u = EdgeUniverse::complete(n);
  std::size_t m = u.m();
  if (m > 16) throw std::invalid_argument("graph_class_poset: n too large");
  // precompute edge remaps for all vertex perms
  std::vector<std::vector<int>> perms = all_perms(n);
  std::vector<std::vector<int>> edge_remap;
  std::vector<VertexId> dom(n);
  std::iota(dom.begin(), dom.end(), 0);
  for (const auto& p : perms) {
    std::vector<VertexId> img(p.begin(), p.end());
    Permutation sigma(dom, img);
    std::vector<int> remap(m);
    for (std::size_t e = 0; e < m; ++e)
      remap[e] = (int)u.index_of(sigma(u.edges[e].first),
                                 sigma(u.edges[e].second));
    edge_remap.push_back(std::move(remap));
  }
  std::size_t total = std::size_t{1} << m;
  std::vector<int> class_of(total, -1);
  std::vector<uint64_t> reps;
  for (uint64_t mask = 0; mask < total; ++mask) {
    if (class_of[mask] >= 0) continue;
    // canonical representative of this orbit is the smallest member; mask is
    // the smallest unseen, so it is canonical
    int cls = (int)reps.size();
    reps.push_back(mask);
    for (const auto& remap : edge_remap) {
      uint64_t img = 0;
      for (std::size_t e = 0; e < m; ++e)
        if (mask & (uint64_t{1} << e)) img |= uint64_t{1} << remap[e];
      class_of[img] = cls;
    }
  }
  return poset_from_table(std::move(class_of), std::move(reps));
}

GraphClassPoset bipartite_class_poset(int y, int z) {
  BipartiteUniverse u{y, z};
  std::size_t m = u.m();
  if (m > 16)
    throw std::invalid_argument("bipartite_class_poset: universe too large");
  auto yperms = all_perms(y), zperms = all_perms(z);
  std::vector<std::vector<int>> edge_remap;
  for (const auto& yp : yperms)
    for (const auto& zp : zperms) {
      std::vector<int> remap(m);
      for (int j = 0; j < z; ++j)
        for (int i = 0; i < y; ++i)
          remap[u.index_of(i, j)] = (int)u.index_of(yp[i], zp[j]);
      edge_remap.push_back(std::move(remap));
    }
  std::size_t total = std::size_t{1} << m;
  std::vector<int> class_of(total, -1);
  std::vector<uint64_t> reps;
  for (uint64_t mask = 0; mask < total; ++mask) {
    if (class_of[mask] >= 0) continue;
    int cls = (int)reps.size();
    reps.push_back(mask);
    for (const auto& remap : edge_remap) {
      uint64_t img = 0;
      for (std::size_t e = 0; e < m; ++e)
        if (mask & (uint64_t{1} << e)) img |= uint64_t{1} << remap[e];
      class_of[img] = cls;
    }
  }
  return poset_from_table(std::move(class_of), std::move(reps));
}

std::vector<uint64_t> enumerate_up_sets(const GraphClassPoset& poset,
                                        std::size_t cap) {
  std::size_t k = poset.reps.size();
  if (k > 63) throw std::invalid_argument("enumerate_up_sets: too many classes");
  // process classes in decreasing edge count (a linear extension from the top)
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int pa = std::popcount(poset.reps[a]), pb = std::popcount(poset.reps[b]);
    if (pa != pb) return pa > pb;
    return a < b;
  });
  std::vector<uint64_t> result;
  uint64_t current = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == k) {
      result.push_back(current);
      if (result.size() > cap)
        throw std::runtime_error("enumerate_up_sets: cap exceeded");
      return;
    }
    std::size_t cls = order[idx];
    // include: legal iff every class strictly above is already included
    bool can_include = true;
    for (std::size_t j = 0; j < k; ++j)
      if (j != cls && poset.leq[cls][j] && !(current & (uint64_t{1} << j))) {
        can_include = false;
        break;
      }
    if (can_include) {
      current |= uint64_t{1} << cls;
      self(self, idx + 1);
      current &= ~(uint64_t{1} << cls);
    }
    self(self, idx + 1);
  };
  rec(rec, 0);
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

PropertyOracle oracle_from_class_table(const GraphClassPoset& poset,
                                       uint64_t up_set, std::size_t m) {
  auto table = std::make_shared<std::vector<uint8_t>>(std::size_t{1} << m, 0);
  for (std::size_t mask = 0; mask < table->size(); ++mask)
    (*table)[mask] =
        (up_set >> poset.class_of_mask[mask]) & 1 ? 1 : 0;
  PropertyOracle out(m, [table](uint64_t mask) { return (*table)[mask]; },
                     "up_set");
  out.claimed_monotone = true;
  out.claimed_invariant = true;
  return out;
}

}  // namespace

PropertyOracle property_from_up_set(const GraphClassPoset& poset,
                                    uint64_t up_set, int n) {
  EdgeUniverse u = EdgeUniverse::complete(n);
  PropertyOracle out = oracle_from_class_table(poset, up_set, u.m());
  out.universe = u;
  return out;
}

PropertyOracle bipartite_property_from_up_set(const GraphClassPoset& poset,
                                              uint64_t up_set, int y, int z) {
  BipartiteUniverse u{y, z};
  PropertyOracle out = oracle_from_class_table(poset, up_set, u.m());
  out.bipartite = u;
  return out;
}

}  // namespace evatop
