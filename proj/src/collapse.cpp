#include "evatop/collapse.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace evatop {

namespace {

// Primitive free pairs (beta, alpha): cofacets(beta) == {alpha} and alpha has
// no cofacet.  Explored in (dim descending, lex) order of beta.
std::vector<std::pair<Simplex, Simplex>> primitive_pairs(const Complex& c) {
  std::unordered_map<Simplex, std::pair<int, Simplex>, SimplexHash> cofacets;
  c.for_each([&](const Simplex& s) {
    if (s.card() < 2) return;
    for (const Simplex& f : s.facets()) {
      auto [it, fresh] = cofacets.emplace(f, std::make_pair(0, s));
      it->second.first++;
      it->second.second = s;
    }
  });
  std::vector<std::pair<Simplex, Simplex>> out;
  c.for_each([&](const Simplex& beta) {
    auto it = cofacets.find(beta);
    if (it == cofacets.end() || it->second.first != 1) return;
    const Simplex& alpha = it->second.second;
    auto ita = cofacets.find(alpha);
    if (ita != cofacets.end() && ita->second.first > 0) return;  // not maximal
    out.emplace_back(beta, alpha);
  });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.card() != b.first.card()) return a.first.card() > b.first.card();
    return dimlex_less(a.first, b.first);
  });
  return out;
}

std::vector<Simplex> cofaces_of(const Complex& c, const Simplex& beta) {
  std::vector<Simplex> out;
  c.for_each([&](const Simplex& s) {
    if (beta.is_face_of(s)) out.push_back(s);
  });
  std::sort(out.begin(), out.end(), dimlex_less);
  return out;
}

struct SearchCtx {
  uint64_t budget;
  uint64_t visited_count = 0;
  bool budget_hit = false;
  std::unordered_set<std::string> dead;
  std::vector<CollapseStep> path;
};

// DFS over primitive collapses until |state| == stop_size and state == target
// (target empty means "any single simplex").  Returns true when found.
bool dfs(const Complex& state, const Complex* target, std::size_t stop_size,
         SearchCtx& ctx) {
  if (state.size() == stop_size) {
    if (!target) return true;
    return state == *target;
  }
  if (ctx.visited_count >= ctx.budget) {
    ctx.budget_hit = true;
    return false;
  }
  ++ctx.visited_count;
  std::string key = state.canonical_key();
  if (ctx.dead.count(key)) return false;
  for (const auto& [beta, alpha] : primitive_pairs(state)) {
    if (target && (target->contains(beta) || target->contains(alpha)))
      continue;
    std::vector<Simplex> removed{beta, alpha};
    std::sort(removed.begin(), removed.end(), dimlex_less);
    ctx.path.push_back(CollapseStep{beta, removed});
    Complex next = state.without(removed);
    if (dfs(next, target, stop_size, ctx)) return true;
    ctx.path.pop_back();
    if (ctx.budget_hit) return false;
  }
  ctx.dead.insert(std::move(key));
  return false;
}

}  // namespace

std::vector<std::pair<Simplex, Simplex>> free_faces(const Complex& c) {
  std::vector<Simplex> maximal = c.facets();
  std::vector<std::pair<Simplex, Simplex>> out;
  c.for_each([&](const Simplex& beta) {
    int count = 0;
    const Simplex* unique = nullptr;
    for (const Simplex& m : maximal) {
      if (beta.is_face_of(m)) {
        ++count;
        unique = &m;
        if (count > 1) break;
      }
    }
    if (count == 1 && beta != *unique) out.emplace_back(beta, *unique);
  });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.card() != b.first.card()) return a.first.card() < b.first.card();
    return dimlex_less(a.first, b.first);
  });
  return out;
}

Complex elementary_collapse(const Complex& c, const Simplex& beta) {
  auto pairs = free_faces(c);
  bool free = false;
  for (const auto& [b, a] : pairs)
    if (b == beta) {
      free = true;
      break;
    }
  if (!free)
    throw std::invalid_argument("elementary_collapse: " + beta.to_string() +
                                " is not a free face");
  return c.without(cofaces_of(c, beta));
}

std::vector<CollapseStep> expand_to_primitive(const Complex& c,
                                              const Simplex& beta) {
  auto pairs = free_faces(c);
  const Simplex* alpha = nullptr;
  for (const auto& [b, a] : pairs)
    if (b == beta) {
      alpha = &a;
      break;
    }
  if (!alpha)
    throw std::invalid_argument("expand_to_primitive: " + beta.to_string() +
                                " is not a free face");
  // Pair Q in [beta, alpha \ {x}] with Q + {x}, x the largest added vertex;
  // descending dimension keeps every step primitive on replay.
  VertexId x = 0;
  for (VertexId v : alpha->vertices())
    if (!beta.contains_vertex(v)) x = std::max(x, v);
  std::vector<VertexId> gap;
  for (VertexId v : alpha->vertices())
    if (!beta.contains_vertex(v) && v != x) gap.push_back(v);

  std::vector<Simplex> bases;
  for (uint64_t mask = 0; mask < (uint64_t{1} << gap.size()); ++mask) {
    Simplex q = beta;
    for (std::size_t i = 0; i < gap.size(); ++i)
      if (mask & (uint64_t{1} << i)) q = q.with_vertex(gap[i]);
    bases.push_back(q);
  }
  std::sort(bases.begin(), bases.end(), [](const Simplex& a, const Simplex& b) {
    if (a.card() != b.card()) return a.card() > b.card();
    return dimlex_less(a, b);
  });
  std::vector<CollapseStep> steps;
  for (const Simplex& q : bases) {
    std::vector<Simplex> removed{q, q.with_vertex(x)};
    std::sort(removed.begin(), removed.end(), dimlex_less);
    steps.push_back(CollapseStep{q, removed});
  }
  return steps;
}

CollapseSearchResult search_collapsible(const Complex& c,
                                        uint64_t node_budget) {
  if (c.empty())
    throw std::invalid_argument("search_collapsible: empty complex");
  SearchCtx ctx;
  ctx.budget = node_budget;
  bool found = dfs(c, nullptr, 1, ctx);
  CollapseSearchResult res;
  res.nodes_visited = ctx.visited_count;
  if (found) {
    res.verdict = CollapseVerdict::Collapsible;
    Complex terminal = c;
    for (const auto& step : ctx.path) terminal = terminal.without(step.removed);
    res.certificate = CollapseSequence{std::move(ctx.path), terminal};
  } else if (ctx.budget_hit) {
    res.verdict = CollapseVerdict::BudgetExceeded;
  } else {
    res.verdict = CollapseVerdict::NotCollapsible;
  }
  return res;
}

bool verify_sequence(const Complex& c, const CollapseSequence& seq) {
  Complex cur = c;
  for (const CollapseStep& step : seq.steps) {
    if (!cur.contains(step.free_face)) return false;
    auto pairs = free_faces(cur);
    bool free = false;
    for (const auto& [b, a] : pairs)
      if (b == step.free_face) {
        free = true;
        break;
      }
    if (!free) return false;
    std::vector<Simplex> expect = cofaces_of(cur, step.free_face);
    std::vector<Simplex> got = step.removed;
    std::sort(got.begin(), got.end(), dimlex_less);
    if (expect != got) return false;
    cur = cur.without(expect);
  }
  return cur == seq.terminal;
}

OntoResult collapse_onto(const Complex& c, const Complex& target,
                         uint64_t node_budget) {
  if (!target.is_subcomplex_of(c))
    throw std::invalid_argument("collapse_onto: target is not a subcomplex");
  SearchCtx ctx;
  ctx.budget = node_budget;
  bool found = dfs(c, &target, target.size(), ctx);
  OntoResult res;
  res.nodes_visited = ctx.visited_count;
  if (found) {
    res.verdict = OntoVerdict::Found;
    res.certificate = CollapseSequence{std::move(ctx.path), target};
  } else {
    res.verdict = OntoVerdict::Unknown;
  }
  return res;
}

namespace {

nlohmann::json simplex_to_array(const Simplex& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (VertexId v : s.vertices()) arr.push_back(v);
  return arr;
}

Simplex simplex_from_array(const nlohmann::json& arr) {
  std::vector<VertexId> verts;
  for (const auto& v : arr) verts.push_back(v.get<VertexId>());
  return Simplex(std::move(verts));
}

}  // namespace

std::string sequence_to_json(const CollapseSequence& seq) {
  nlohmann::json j;
  j["steps"] = nlohmann::json::array();
  for (const CollapseStep& step : seq.steps) {
    nlohmann::json s;
    s["free_face"] = simplex_to_array(step.free_face);
    s["removed"] = nlohmann::json::array();
    for (const Simplex& r : step.removed) s["removed"].push_back(simplex_to_array(r));
    j["steps"].push_back(std::move(s));
  }
  nlohmann::json term;
  term["simplices"] = nlohmann::json::array();
  for (const Simplex& s : seq.terminal.sorted_simplices())
    term["simplices"].push_back(simplex_to_array(s));
  j["terminal"] = std::move(term);
  return j.dump();
}

CollapseSequence sequence_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CollapseSequence seq;
  for (const auto& s : j.at("steps")) {
    CollapseStep step;
    step.free_face = simplex_from_array(s.at("free_face"));
    for (const auto& r : s.at("removed"))
      step.removed.push_back(simplex_from_array(r));
    seq.steps.push_back(std::move(step));
  }
  std::vector<Simplex> term;
  for (const auto& s : j.at("terminal").at("simplices"))
    term.push_back(simplex_from_array(s));
  seq.terminal = Complex::from_simplices(term);
  return seq;
}

}  // namespace evatop
