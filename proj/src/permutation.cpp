#include "evatop/permutation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "evatop/fp.hpp"
#include "json.hpp"

namespace evatop {

Permutation::Permutation(std::vector<VertexId> domain,
                         std::vector<VertexId> image) {
  if (domain.size() != image.size())
    throw std::invalid_argument("Permutation: domain/image size mismatch");
  std::vector<std::size_t> idx(domain.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return domain[a] < domain[b]; });
  domain_.reserve(domain.size());
  image_.reserve(domain.size());
  for (std::size_t i : idx) {
    domain_.push_back(domain[i]);
    image_.push_back(image[i]);
  }
  if (std::adjacent_find(domain_.begin(), domain_.end()) != domain_.end())
    throw std::invalid_argument("Permutation: duplicate domain element");
  std::vector<VertexId> img = image_;
  std::sort(img.begin(), img.end());
  if (std::adjacent_find(img.begin(), img.end()) != img.end())
    throw std::invalid_argument("Permutation: image is not injective");
}

Permutation Permutation::identity(std::vector<VertexId> domain) {
  std::vector<VertexId> img = domain;
  return Permutation(std::move(domain), std::move(img));
}

Permutation Permutation::from_cycles(const std::string& text,
                                     std::vector<VertexId> domain) {
  std::map<VertexId, VertexId> map;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace((unsigned char)text[i])) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw std::invalid_argument("Permutation::from_cycles: expected '('");
    std::size_t close = text.find(')', i);
    if (close == std::string::npos)
      throw std::invalid_argument("Permutation::from_cycles: missing ')'");
    std::istringstream cyc(text.substr(i + 1, close - i - 1));
    std::vector<VertexId> elems;
    VertexId v;
    while (cyc >> v) elems.push_back(v);
    for (std::size_t j = 0; j < elems.size(); ++j) {
      VertexId from = elems[j], to = elems[(j + 1) % elems.size()];
      if (map.count(from))
        throw std::invalid_argument(
            "Permutation::from_cycles: element repeated across cycles");
      map[from] = to;
    }
    i = close + 1;
  }
  std::vector<VertexId> image;
  std::sort(domain.begin(), domain.end());
  for (VertexId d : domain) {
    auto it = map.find(d);
    image.push_back(it == map.end() ? d : it->second);
    if (it != map.end()) map.erase(it);
  }
  if (!map.empty())
    throw std::invalid_argument(
        "Permutation::from_cycles: cycle element outside domain");
  return Permutation(std::move(domain), std::move(image));
}

bool Permutation::in_domain(VertexId v) const {
  return std::binary_search(domain_.begin(), domain_.end(), v);
}

VertexId Permutation::operator()(VertexId v) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
  if (it == domain_.end() || *it != v)
    throw std::invalid_argument("Permutation: vertex " + std::to_string(v) +
                                " outside domain");
  return image_[(std::size_t)(it - domain_.begin())];
}

Simplex Permutation::apply(const Simplex& s) const {
  std::vector<VertexId> img;
  img.reserve(s.card());
  for (VertexId v : s.vertices()) img.push_back((*this)(v));
  return Simplex(std::move(img));
}

bool Permutation::is_endomorphism() const {
  std::vector<VertexId> img = image_;
  std::sort(img.begin(), img.end());
  return img == domain_;
}

bool Permutation::is_identity() const { return domain_ == image_; }

Permutation Permutation::inverse() const {
  return Permutation(image_, domain_);
}

Permutation Permutation::compose_after(const Permutation& g) const {
  std::vector<VertexId> image;
  image.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) image.push_back((*this)(g.image_[i]));
  return Permutation(g.domain_, std::move(image));
}

std::size_t Permutation::order() const {
  if (!is_endomorphism())
    throw std::invalid_argument("Permutation::order: not an endomorphism");
  std::size_t n = 1;
  Permutation f = *this;
  while (!f.is_identity()) {
    f = compose_after(f);
    ++n;
    if (n > 1u << 20)
      throw std::runtime_error("Permutation::order: runaway");
  }
  return n;
}

bool Permutation::operator<(const Permutation& o) const {
  if (domain_ != o.domain_) return domain_ < o.domain_;
  return image_ < o.image_;
}

std::string Permutation::to_cycle_string() const {
  if (!is_endomorphism())
    throw std::invalid_argument("to_cycle_string: not an endomorphism");
  std::ostringstream os;
  std::set<VertexId> seen;
  bool any = false;
  for (VertexId start : domain_) {
    if (seen.count(start)) continue;
    std::vector<VertexId> cyc{start};
    seen.insert(start);
    VertexId v = (*this)(start);
    while (v != start) {
      cyc.push_back(v);
      seen.insert(v);
      v = (*this)(v);
    }
    if (cyc.size() < 2) continue;
    any = true;
    os << "(";
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << " ";
      os << cyc[i];
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

std::string Permutation::to_json() const {
  nlohmann::json j;
  j["domain"] = domain_;
  j["image"] = image_;
  return j.dump();
}

PermGroup PermGroup::from_generators(std::vector<Permutation> gens,
                                     std::size_t cap) {
  if (gens.empty())
    throw std::invalid_argument("PermGroup: need at least one generator");
  for (const Permutation& g : gens) {
    if (!g.is_endomorphism())
      throw std::invalid_argument("PermGroup: generator is not an endomorphism");
    if (g.domain() != gens[0].domain())
      throw std::invalid_argument("PermGroup: generators on different domains");
  }
  PermGroup out;
  out.domain_ = gens[0].domain();
  out.gens_ = gens;
  std::set<Permutation> elems;
  std::vector<Permutation> frontier{Permutation::identity(out.domain_)};
  elems.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& f : frontier) {
      for (const Permutation& g : gens) {
        Permutation h = g.compose_after(f);
        if (elems.insert(h).second) {
          if (elems.size() > cap)
            throw std::runtime_error("PermGroup: closure exceeds cap of " +
                                     std::to_string(cap));
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  out.elements_.assign(elems.begin(), elems.end());
  return out;
}

PermGroup PermGroup::trivial(std::vector<VertexId> domain) {
  return from_generators({Permutation::identity(std::move(domain))});
}

bool PermGroup::contains(const Permutation& f) const {
  return std::binary_search(elements_.begin(), elements_.end(), f);
}

std::size_t PermGroup::index_of(const Permutation& f) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), f);
  if (it == elements_.end() || !(*it == f))
    throw std::invalid_argument("PermGroup: element not in group");
  return (std::size_t)(it - elements_.begin());
}

const std::vector<std::vector<std::size_t>>& PermGroup::table() const {
  if (table_.empty() && !elements_.empty()) {
    std::size_t n = elements_.size();
    table_.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        table_[i][j] = index_of(elements_[i].compose_after(elements_[j]));
  }
  return table_;
}

bool PermGroup::is_abelian() const {
  const auto& t = table();
  std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (t[i][j] != t[j][i]) return false;
  return true;
}

std::vector<std::vector<std::size_t>> PermGroup::subgroups() const {
  const auto& table_ = table();
  std::size_t n = elements_.size();
  std::size_t id = index_of(Permutation::identity(domain_));
  auto closure = [&](std::vector<std::size_t> seed) {
    std::set<std::size_t> elems(seed.begin(), seed.end());
    elems.insert(id);
    std::vector<std::size_t> frontier(elems.begin(), elems.end());
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t a : frontier)
        for (std::size_t b : elems)
          for (std::size_t c : {table_[a][b], table_[b][a]})
            if (elems.insert(c).second) next.push_back(c);
      frontier = std::move(next);
    }
    return std::vector<std::size_t>(elems.begin(), elems.end());
  };
  std::set<std::vector<std::size_t>> found;
  found.insert({id});
  for (std::size_t i = 0; i < n; ++i) found.insert(closure({i}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::size_t>> snapshot(found.begin(), found.end());
    for (const auto& h : snapshot) {
      for (std::size_t x = 0; x < n; ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        std::vector<std::size_t> seed = h;
        seed.push_back(x);
        if (found.insert(closure(seed)).second) grew = true;
      }
    }
  }
  return std::vector<std::vector<std::size_t>>(found.begin(), found.end());
}

bool PermGroup::is_normal(const std::vector<std::size_t>& subgroup) const {
  const auto& table_ = table();
  for (std::size_t g = 0; g < elements_.size(); ++g) {
    std::size_t ginv = index_of(elements_[g].inverse());
    for (std::size_t h : subgroup) {
      std::size_t conj = table_[table_[g][h]][ginv];
      if (!std::binary_search(subgroup.begin(), subgroup.end(), conj))
        return false;
    }
  }
  return true;
}

bool PermGroup::quotient_is_cyclic(
    const std::vector<std::size_t>& normal_sub) const {
  const auto& table_ = table();
  std::size_t n = elements_.size();
  std::size_t m = normal_sub.size();
  if (n % m != 0) throw std::invalid_argument("quotient: not a subgroup?");
  std::size_t q = n / m;
  // coset id of x = minimal element index of x*H
  std::vector<std::size_t> coset(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t mn = n;
    for (std::size_t h : normal_sub) mn = std::min(mn, table_[x][h]);
    coset[x] = mn;
  }
  for (std::size_t x = 0; x < n; ++x) {
    // order of coset x in G/H
    std::size_t cur = x, ord = 1;
    std::size_t id_coset = coset[index_of(Permutation::identity(domain_))];
    while (coset[cur] != id_coset) {
      cur = table_[cur][x];
      ++ord;
    }
    if (ord == q) return true;
  }
  return q == 1;
}

PermGroup PermGroup::subgroup_from_indices(
    const std::vector<std::size_t>& idx) const {
  std::vector<Permutation> gens;
  for (std::size_t i : idx) gens.push_back(elements_[i]);
  return from_generators(std::move(gens));
}

std::vector<std::vector<VertexId>> PermGroup::vertex_orbits() const {
  std::vector<VertexId> dom = domain_;
  std::map<VertexId, VertexId> parent;
  for (VertexId v : dom) parent[v] = v;
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Permutation& g : gens_)
    for (VertexId v : dom) {
      VertexId a = find(v), b = find(g(v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<VertexId, std::vector<VertexId>> buckets;
  for (VertexId v : dom) buckets[find(v)].push_back(v);
  std::vector<std::vector<VertexId>> orbits;
  for (auto& [root, members] : buckets) {
    std::sort(members.begin(), members.end());
    orbits.push_back(std::move(members));
  }
  return orbits;  // map iteration is sorted by min element already
}

// ---- F_{p^k} arithmetic and the affine group ----

namespace {

struct FieldSpec {
  uint64_t p;
  int k;
  std::vector<uint64_t> poly_low;  // x^k = -(poly_low), coefficients 0..k-1
};

const FieldSpec* lookup_field(uint64_t p, int k) {
  static const std::vector<FieldSpec> kTable = {
      {2, 2, {1, 1}},          // x^2+x+1
      {2, 3, {1, 1, 0}},       // x^3+x+1
      {2, 4, {1, 1, 0, 0}},    // x^4+x+1
      {2, 5, {1, 0, 1, 0, 0}}, // x^5+x^2+1
      {2, 6, {1, 1, 0, 0, 0, 0}},  // x^6+x+1
      {3, 2, {1, 0}},          // x^2+1
      {3, 3, {1, 2, 0}},       // x^3+2x+1
      {5, 2, {2, 0}},          // x^2+2
      {7, 2, {1, 0}},          // x^2+1
  };
  for (const auto& f : kTable)
    if (f.p == p && f.k == k) return &f;
  return nullptr;
}

struct Field {
  uint64_t p;
  int k;
  uint64_t q;  // p^k
  std::vector<uint64_t> poly_low;

  std::vector<uint64_t> digits(uint64_t v) const {
    std::vector<uint64_t> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  }
  uint64_t value(const std::vector<uint64_t>& d) const {
    uint64_t v = 0;
    for (int i = k - 1; i >= 0; --i) v = v * p + d[i];
    return v;
  }
  uint64_t add(uint64_t a, uint64_t b) const {
    auto da = digits(a), db = digits(b);
    for (int i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % p;
    return value(da);
  }
  uint64_t mul(uint64_t a, uint64_t b) const {
    auto da = digits(a), db = digits(b);
    std::vector<uint64_t> prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    // reduce: x^k = -poly_low
    for (int d = 2 * k - 2; d >= k; --d) {
      uint64_t c = prod[d];
      if (!c) continue;
      prod[d] = 0;
      for (int i = 0; i < k; ++i)
        prod[d - k + i] = (prod[d - k + i] + c * (p - poly_low[i] % p)) % p;
    }
    prod.resize(k);
    return value(prod);
  }
};

}  // namespace

AffineGroup affine_group(uint64_t p, int k) {
  if (!is_prime(p) || k < 1)
    throw std::invalid_argument("affine_group: need prime p and k >= 1");
  uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxVerticesPerComplex * 4)
      throw std::invalid_argument("affine_group: p^k too large");
  }
  Field field{p, k, q, {}};
  if (k > 1) {
    const FieldSpec* spec = lookup_field(p, k);
    if (!spec)
      throw std::invalid_argument(
          "affine_group: no irreducible polynomial configured for p=" +
          std::to_string(p) + ", k=" + std::to_string(k));
    field.poly_low = spec->poly_low;
  }

  std::vector<VertexId> domain(q);
  for (uint64_t i = 0; i < q; ++i) domain[i] = (VertexId)i;

  auto affine_map = [&](uint64_t a, uint64_t b) {
    std::vector<VertexId> image(q);
    for (uint64_t x = 0; x < q; ++x)
      image[x] = (VertexId)field.add(field.mul(a, x), b);
    return Permutation(domain, image);
  };

  std::vector<Permutation> all, trans;
  for (uint64_t a = 1; a < q; ++a)
    for (uint64_t b = 0; b < q; ++b) {
      all.push_back(affine_map(a, b));
      if (a == 1) trans.push_back(all.back());
    }

  AffineGroup out;
  out.p = p;
  out.k = k;
  // find a multiplicative generator so the group is two-generated
  std::vector<Permutation> gens{affine_map(1, 1)};
  for (uint64_t g = 2; g < q; ++g) {
    uint64_t cur = g;
    std::size_t ord = 1;
    while (cur != 1) {
      cur = field.mul(cur, g);
      ++ord;
    }
    if (ord == q - 1) {
      gens.push_back(affine_map(g, 0));
      break;
    }
  }
  out.group = PermGroup::from_generators(gens);
  // the additive group needs one translation per digit: b = p^j
  std::vector<Permutation> trans_gens;
  uint64_t basis = 1;
  for (int j = 0; j < k; ++j) {
    trans_gens.push_back(affine_map(1, basis));
    basis *= p;
  }
  out.translations = PermGroup::from_generators(trans_gens);
  if (out.group.order() != q * (q - 1) || out.translations.order() != q)
    throw std::logic_error("affine_group: constructed order is wrong");

  // structural observations, checked without the multiplication table
  for (const Permutation& t : trans_gens)
    for (const Permutation& s : trans_gens)
      if (!(t.compose_after(s) == s.compose_after(t)))
        throw std::logic_error("affine_group: translations do not commute");
  for (const Permutation& g : gens)
    for (const Permutation& gi : {g, g.inverse()})
      for (const Permutation& t : trans_gens)
        if (!out.translations.contains(
                gi.compose_after(t).compose_after(gi.inverse())))
          throw std::logic_error("affine_group: translations are not normal");
  // G/G' is generated by the coset of the multiplicative generator, whose
  // order q-1 equals the index, so the quotient is cyclic
  if (out.group.order() / out.translations.order() != q - 1)
    throw std::logic_error("affine_group: quotient index is wrong");
  if (q >= 2) {
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const Permutation& g : out.group.elements())
      pairs.insert({g(0), g(1)});
    if (pairs.size() != q * (q - 1))
      throw std::logic_error("affine_group: not transitive on ordered pairs");
  }
  return out;
}

}  // namespace evatop
