#include "evatop/group_action.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace evatop {

bool is_automorphism(const Complex& c, const Permutation& f) {
  for (VertexId v : c.vertex_ids())
    if (!f.in_domain(v))
      throw std::invalid_argument("is_automorphism: vertex " +
                                  std::to_string(v) + " outside domain of f");
  bool ok = true;
  c.for_each([&](const Simplex& s) {
    if (ok && !c.contains(f.apply(s))) ok = false;
  });
  return ok;
}

Complex FixedSet::as_complex() const {
  if (!is_subcomplex)
    throw std::invalid_argument("FixedSet: not a subcomplex");
  return Complex::from_simplices(simplices);
}

namespace {

FixedSet fixed_under(const Complex& c, const std::vector<Permutation>& maps) {
  FixedSet out;
  c.for_each([&](const Simplex& s) {
    for (const Permutation& f : maps)
      if (!(f.apply(s) == s)) return;
    out.simplices.push_back(s);
  });
  std::sort(out.simplices.begin(), out.simplices.end(), dimlex_less);
  std::set<Simplex, DimLexOrder> present(out.simplices.begin(),
                                         out.simplices.end());
  out.is_subcomplex = true;
  for (const Simplex& s : out.simplices) {
    if (s.card() == 1) continue;
    for (const Simplex& f : s.facets())
      if (!present.count(f)) {
        out.is_subcomplex = false;
        return out;
      }
  }
  return out;
}

}  // namespace

FixedSet fixed_set(const Complex& c, const Permutation& f) {
  if (!is_automorphism(c, f))
    throw std::invalid_argument("fixed_set: f is not an automorphism of c");
  return fixed_under(c, {f});
}

FixedSet fixed_set(const Complex& c, const PermGroup& g) {
  for (const Permutation& gen : g.generators())
    if (!is_automorphism(c, gen))
      throw std::invalid_argument(
          "fixed_set: a generator is not an automorphism of c");
  return fixed_under(c, g.generators());
}

QuotientComplex quotient_complex(const Complex& c, const PermGroup& g) {
  for (const Permutation& gen : g.generators())
    if (!is_automorphism(c, gen))
      throw std::invalid_argument(
          "quotient_complex: group does not act by automorphisms");
  QuotientComplex out;
  if (c.empty()) return out;

  // orbits restricted to the vertex set of c
  std::vector<VertexId> verts = c.vertex_ids();
  std::set<VertexId> vert_set(verts.begin(), verts.end());
  std::vector<std::vector<VertexId>> all_orbits = g.vertex_orbits();
  for (auto& orbit : all_orbits) {
    std::vector<VertexId> inside;
    for (VertexId v : orbit)
      if (vert_set.count(v)) inside.push_back(v);
    if (!inside.empty()) out.orbits.push_back(std::move(inside));
  }
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });

  // DFS over orbit subsets; unions only grow, and c is downward closed, so a
  // failing union prunes all supersets.
  std::vector<Simplex> simplices;
  std::vector<VertexId> chosen;
  std::vector<VertexId> union_verts;
  auto union_in_c = [&](const std::vector<VertexId>& u) {
    return c.contains(Simplex(u));
  };
  auto dfs = [&](auto&& self, std::size_t next) -> void {
    for (std::size_t i = next; i < out.orbits.size(); ++i) {
      std::vector<VertexId> u = union_verts;
      u.insert(u.end(), out.orbits[i].begin(), out.orbits[i].end());
      std::sort(u.begin(), u.end());
      if (!union_in_c(u)) continue;
      chosen.push_back((VertexId)i);
      simplices.push_back(Simplex(std::vector<VertexId>(chosen.begin(), chosen.end())));
      std::swap(union_verts, u);
      self(self, i + 1);
      std::swap(union_verts, u);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  if (!simplices.empty()) out.complex = Complex::from_simplices(simplices);
  return out;
}

Permutation bar_action(const Complex& c, const Permutation& f,
                       const BarDictionary& dict) {
  if (!is_automorphism(c, f))
    throw std::invalid_argument("bar_action: f is not an automorphism of c");
  std::size_t n = dict.simplex_of.size();
  std::vector<VertexId> domain(n), image(n);
  for (std::size_t i = 0; i < n; ++i) {
    domain[i] = (VertexId)i;
    image[i] = dict.id_of.at(f.apply(dict.simplex_of[i]));
  }
  return Permutation(std::move(domain), std::move(image));
}

bool verify_bar_quotient_iso(const Complex& c, const PermGroup& g) {
  if (c.empty()) return true;
  QuotientComplex q = quotient_complex(c, g);
  if (q.complex.empty()) return false;  // c nonempty forces orbits nonempty
  BarResult bar_q = barycentric_subdivision(q.complex);
  BarResult bar_c = barycentric_subdivision(c);

  std::vector<Permutation> bar_gens;
  for (const Permutation& gen : g.generators())
    bar_gens.push_back(bar_action(c, gen, bar_c.dict));
  FixedSet fixed = fixed_under(bar_c.complex, bar_gens);
  if (!fixed.is_subcomplex) return false;
  std::set<Simplex, DimLexOrder> fixed_lookup(fixed.simplices.begin(),
                                              fixed.simplices.end());

  // vertex map: quotient simplex T (a set of orbit ids) -> bar(c) vertex of
  // the union of those orbits
  auto union_of = [&](const Simplex& t) {
    std::vector<VertexId> u;
    for (VertexId oi : t.vertices())
      u.insert(u.end(), q.orbits[oi].begin(), q.orbits[oi].end());
    std::sort(u.begin(), u.end());
    return Simplex(std::move(u));
  };
  std::vector<VertexId> vmap(bar_q.dict.simplex_of.size());
  for (std::size_t i = 0; i < bar_q.dict.simplex_of.size(); ++i) {
    Simplex u = union_of(bar_q.dict.simplex_of[i]);
    auto it = bar_c.dict.id_of.find(u);
    if (it == bar_c.dict.id_of.end()) return false;
    vmap[i] = it->second;
  }

  // the induced map must send simplices of bar(q) bijectively onto the fixed
  // subcomplex of bar(c)
  std::size_t mapped = 0;
  bool ok = true;
  bar_q.complex.for_each([&](const Simplex& chain) {
    if (!ok) return;
    std::vector<VertexId> image;
    for (VertexId v : chain.vertices()) image.push_back(vmap[v]);
    std::sort(image.begin(), image.end());
    // strictness of the image chain: distinct ids suffice
    for (std::size_t i = 1; i < image.size(); ++i)
      if (image[i] == image[i - 1]) ok = false;
    if (!ok) return;
    if (!fixed_lookup.count(Simplex(image))) {
      ok = false;
      return;
    }
    ++mapped;
  });
  return ok && mapped == fixed.simplices.size();
}

}  // namespace evatop
