#include "evatop/fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace evatop {

Complex hollow_triangle() {
  return Complex::from_facets({Simplex{0, 1}, Simplex{0, 2}, Simplex{1, 2}});
}

Complex solid_triangle() { return Complex::from_facets({Simplex{0, 1, 2}}); }

Complex annulus6() {
  return Complex::from_facets({Simplex{0, 1, 3}, Simplex{1, 3, 4},
                               Simplex{1, 2, 4}, Simplex{2, 4, 5},
                               Simplex{0, 2, 5}, Simplex{0, 3, 5}});
}

Complex two_hole() {
  Complex a = annulus6();
  // second annulus with outer triangle {0,1,6}, inner {7,8,9}
  Complex b = Complex::from_facets({Simplex{0, 1, 7}, Simplex{1, 7, 8},
                                    Simplex{1, 6, 8}, Simplex{6, 8, 9},
                                    Simplex{0, 6, 9}, Simplex{0, 7, 9}});
  return union_of(a, b);
}

Complex torus7() {
  std::vector<Simplex> facets;
  for (VertexId i = 0; i < 7; ++i) {
    facets.push_back(Simplex{i, (VertexId)((i + 1) % 7), (VertexId)((i + 3) % 7)});
    facets.push_back(Simplex{i, (VertexId)((i + 2) % 7), (VertexId)((i + 3) % 7)});
  }
  return Complex::from_facets(facets);
}

Complex fig_two_triangles() {
  return Complex::from_facets({Simplex{0, 1, 2}, Simplex{0, 2, 3}});
}

Complex relabel_shift(const Complex& c, VertexId offset) {
  std::vector<Simplex> out;
  for (const Simplex& s : c.sorted_simplices()) {
    std::vector<VertexId> verts;
    for (VertexId v : s.vertices()) verts.push_back(v + offset);
    out.emplace_back(std::move(verts));
  }
  return Complex::from_simplices(out);
}

Complex relabel(const Complex& c, const Permutation& f) {
  std::vector<Simplex> out;
  for (const Simplex& s : c.sorted_simplices()) out.push_back(f.apply(s));
  return Complex::from_simplices(out);
}

Complex union_of(const Complex& a, const Complex& b) {
  std::vector<Simplex> all = a.sorted_simplices();
  for (const Simplex& s : b.sorted_simplices()) all.push_back(s);
  std::sort(all.begin(), all.end(), dimlex_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return Complex::from_simplices(all);
}

Complex random_complex(Rng& rng, int max_vertices, int max_facet_card,
                       int max_facets) {
  int nv = (int)rng.range(1, max_vertices);
  int nf = (int)rng.range(1, max_facets);
  std::vector<Simplex> facets;
  for (int i = 0; i < nf; ++i) {
    int card = (int)rng.range(1, std::min(max_facet_card, nv));
    std::set<VertexId> verts;
    while ((int)verts.size() < card) verts.insert((VertexId)rng.below(nv));
    facets.emplace_back(std::vector<VertexId>(verts.begin(), verts.end()));
  }
  return Complex::from_facets(facets);
}

Complex random_collapsible(Rng& rng, int expansions, int max_vertices) {
  std::unordered_set<Simplex, SimplexHash> simp;
  simp.insert(Simplex{0});
  VertexId next_vertex = 1;
  std::vector<Simplex> pool{Simplex{0}};

  for (int step = 0; step < expansions; ++step) {
    bool placed = false;
    for (int attempt = 0; attempt < 30 && !placed; ++attempt) {
      const Simplex& phi = pool[rng.below(pool.size())];
      VertexId x;
      bool fresh = (next_vertex < (VertexId)max_vertices) && rng.coin();
      if (fresh) {
        x = next_vertex;
      } else {
        x = (VertexId)rng.below(next_vertex);
        if (phi.contains_vertex(x)) continue;
      }
      Simplex alpha = phi.with_vertex(x);
      if (alpha.card() > 5) continue;
      if (simp.count(alpha)) continue;
      // a reverse primitive collapse needs exactly one missing facet
      const Simplex* beta = nullptr;
      int missing = 0;
      std::vector<Simplex> facets = alpha.facets();
      for (const Simplex& f : facets) {
        if (!simp.count(f)) {
          ++missing;
          beta = &f;
        }
      }
      if (missing != 1) continue;
      simp.insert(alpha);
      simp.insert(*beta);
      pool.push_back(alpha);
      pool.push_back(*beta);
      if (fresh) ++next_vertex;
      placed = true;
    }
    if (!placed) break;
  }
  std::vector<Simplex> all(simp.begin(), simp.end());
  return Complex::from_simplices(all);
}

Complex random_subcomplex(Rng& rng, const Complex& c) {
  // closure of a random subset of the facets
  std::vector<Simplex> facets = c.facets();
  std::vector<Simplex> kept;
  for (const Simplex& f : facets)
    if (rng.coin()) kept.push_back(f);
  if (kept.empty() && !facets.empty())
    kept.push_back(facets[rng.below(facets.size())]);
  Complex sub = kept.empty() ? Complex() : Complex::from_facets(kept);
  return sub;
}

std::vector<Permutation> automorphisms_of(const Complex& c, std::size_t cap) {
  std::vector<VertexId> verts = c.vertex_ids();
  std::size_t k = verts.size();
  std::vector<Permutation> out;
  if (k == 0) return out;
  std::vector<Simplex> simplices = c.sorted_simplices();

  // signature: counts of containing simplices by dimension
  auto signature = [&](VertexId v) {
    std::vector<int> sig(c.dim() + 1, 0);
    for (const Simplex& s : simplices)
      if (s.contains_vertex(v)) sig[s.dim()]++;
    return sig;
  };
  std::map<VertexId, std::vector<int>> sigs;
  for (VertexId v : verts) sigs[v] = signature(v);

  std::map<VertexId, VertexId> partial;
  std::set<VertexId> used;
  auto consistent = [&](VertexId just_assigned) {
    for (const Simplex& s : simplices) {
      bool all_assigned = true, involves = false;
      for (VertexId v : s.vertices()) {
        if (v == just_assigned) involves = true;
        if (!partial.count(v)) {
          all_assigned = false;
          break;
        }
      }
      if (!all_assigned || !involves) continue;
      std::vector<VertexId> img;
      for (VertexId v : s.vertices()) img.push_back(partial[v]);
      std::sort(img.begin(), img.end());
      if (!c.contains(Simplex(img))) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (out.size() > cap)
      throw std::runtime_error("automorphisms_of: cap exceeded");
    if (i == k) {
      std::vector<VertexId> image;
      for (VertexId v : verts) image.push_back(partial[v]);
      out.emplace_back(verts, image);
      return;
    }
    VertexId v = verts[i];
    for (VertexId w : verts) {
      if (used.count(w) || sigs[v] != sigs[w]) continue;
      partial[v] = w;
      used.insert(w);
      if (consistent(v)) self(self, i + 1);
      partial.erase(v);
      used.erase(w);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SymmetricCone symmetric_cone(Rng& rng, int p, int blade_expansions,
                             int fixed_expansions) {
  Complex blade = random_collapsible(rng, blade_expansions, 6);
  std::size_t blade_span = blade.vertex_ids().size();
  Complex base;
  std::vector<std::pair<VertexId, VertexId>> rotation_map;  // from -> to
  for (int j = 0; j < p; ++j) {
    VertexId off = (VertexId)(j * blade_span);
    VertexId off_next = (VertexId)(((j + 1) % p) * blade_span);
    base = union_of(base, relabel_shift(blade, off));
    for (std::size_t v = 0; v < blade_span; ++v)
      rotation_map.emplace_back(off + (VertexId)v, off_next + (VertexId)v);
  }
  VertexId fixed_off = (VertexId)(p * blade_span);
  if (fixed_expansions > 0) {
    Complex fixed_part = relabel_shift(
        random_collapsible(rng, fixed_expansions, 5), fixed_off);
    base = union_of(base, fixed_part);
    for (VertexId v : fixed_part.vertex_ids()) rotation_map.emplace_back(v, v);
  }
  VertexId apex = 0;
  for (VertexId v : base.vertex_ids()) apex = std::max(apex, v);
  ++apex;
  rotation_map.emplace_back(apex, apex);
  Complex cone_complex = cone(apex, base);

  std::vector<VertexId> domain, image;
  for (auto [from, to] : rotation_map) {
    domain.push_back(from);
    image.push_back(to);
  }
  return SymmetricCone{cone_complex, Permutation(domain, image)};
}

}  // namespace evatop
