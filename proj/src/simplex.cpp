#include "evatop/simplex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace evatop {

Simplex::Simplex(std::vector<VertexId> vertices) : v_(std::move(vertices)) {
  if (v_.empty()) throw std::invalid_argument("Simplex: empty vertex list");
  std::sort(v_.begin(), v_.end());
  if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
    throw std::invalid_argument("Simplex: duplicate vertex");
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

bool Simplex::contains_vertex(VertexId v) const {
  return std::binary_search(v_.begin(), v_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (v_.size() < 2) return out;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    std::vector<VertexId> f;
    f.reserve(v_.size() - 1);
    for (std::size_t j = 0; j < v_.size(); ++j)
      if (j != i) f.push_back(v_[j]);
    out.emplace_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), dimlex_less);
  return out;
}

std::vector<Simplex> Simplex::all_faces() const {
  std::vector<Simplex> out;
  std::size_t n = v_.size();
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    std::vector<VertexId> f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (uint64_t{1} << i)) f.push_back(v_[i]);
    out.emplace_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), dimlex_less);
  return out;
}

Simplex Simplex::with_vertex(VertexId v) const {
  if (contains_vertex(v))
    throw std::invalid_argument("Simplex::with_vertex: already present");
  std::vector<VertexId> w = v_;
  w.push_back(v);
  return Simplex(std::move(w));
}

Simplex Simplex::without_vertex(VertexId v) const {
  if (!contains_vertex(v))
    throw std::invalid_argument("Simplex::without_vertex: not present");
  if (v_.size() == 1)
    throw std::invalid_argument("Simplex::without_vertex: would be empty");
  std::vector<VertexId> w;
  w.reserve(v_.size() - 1);
  for (VertexId u : v_)
    if (u != v) w.push_back(u);
  return Simplex(std::move(w));
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) os << ",";
    os << v_[i];
  }
  os << "]";
  return os.str();
}

bool dimlex_less(const Simplex& a, const Simplex& b) {
  if (a.card() != b.card()) return a.card() < b.card();
  auto av = a.vertices(), bv = b.vertices();
  return std::lexicographical_compare(av.begin(), av.end(), bv.begin(),
                                      bv.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const {
  // FNV-1a over the vertex words
  uint64_t h = 1469598103934665603ull;
  for (VertexId v : s.vertices()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return (std::size_t)h;
}

Complex Complex::from_set(std::unordered_set<Simplex, SimplexHash> set) {
  Complex c;
  c.simp_ = std::move(set);
  c.check_vertex_cap();
  return c;
}

void Complex::check_vertex_cap() const {
  std::set<VertexId> verts;
  for (const auto& s : simp_)
    for (VertexId v : s.vertices()) verts.insert(v);
  if (verts.size() > kMaxVerticesPerComplex)
    throw std::invalid_argument(
        "Complex: vertex count " + std::to_string(verts.size()) +
        " exceeds the supported cap of " +
        std::to_string(kMaxVerticesPerComplex));
}

Complex Complex::from_facets(std::span<const Simplex> facets) {
  std::unordered_set<Simplex, SimplexHash> set;
  for (const Simplex& f : facets)
    for (Simplex& face : f.all_faces()) set.insert(std::move(face));
  return from_set(std::move(set));
}

Complex Complex::from_facets(std::initializer_list<Simplex> facets) {
  std::vector<Simplex> v(facets);
  return from_facets(std::span<const Simplex>(v));
}

Complex Complex::from_simplices(std::span<const Simplex> simplices) {
  std::unordered_set<Simplex, SimplexHash> set(simplices.begin(),
                                               simplices.end());
  for (const Simplex& s : set) {
    if (s.card() == 1) continue;
    for (const Simplex& f : s.facets())
      if (!set.count(f))
        throw std::invalid_argument(
            "Complex::from_simplices: not downward closed, missing " +
            f.to_string() + " under " + s.to_string());
  }
  return from_set(std::move(set));
}

int Complex::dim() const {
  int d = -1;
  for (const auto& s : simp_) d = std::max(d, s.dim());
  return d;
}

std::vector<Simplex> Complex::sorted_simplices() const {
  std::vector<Simplex> out(simp_.begin(), simp_.end());
  std::sort(out.begin(), out.end(), dimlex_less);
  return out;
}

std::vector<Simplex> Complex::simplices_of_dim(int n) const {
  std::vector<Simplex> out;
  for (const auto& s : simp_)
    if (s.dim() == n) out.push_back(s);
  std::sort(out.begin(), out.end(), dimlex_less);
  return out;
}

std::size_t Complex::count_of_dim(int n) const {
  std::size_t c = 0;
  for (const auto& s : simp_)
    if (s.dim() == n) ++c;
  return c;
}

std::vector<Simplex> Complex::facets() const {
  std::vector<Simplex> out;
  const std::vector<VertexId> verts = vertex_ids();
  for (const auto& s : simp_) {
    bool maximal = true;
    // s is maximal iff no cofacet of s is present
    for (VertexId v : verts) {
      if (s.contains_vertex(v)) continue;
      if (contains(s.with_vertex(v))) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), dimlex_less);
  return out;
}

std::vector<VertexId> Complex::vertex_ids() const {
  std::set<VertexId> verts;
  for (const auto& s : simp_)
    for (VertexId v : s.vertices()) verts.insert(v);
  return std::vector<VertexId>(verts.begin(), verts.end());
}

bool Complex::is_subcomplex_of(const Complex& other) const {
  for (const auto& s : simp_)
    if (!other.contains(s)) return false;
  return true;
}

std::string Complex::canonical_key() const {
  std::vector<Simplex> sorted = sorted_simplices();
  std::string key;
  for (const Simplex& s : sorted) {
    for (VertexId v : s.vertices()) {
      key.push_back((char)(v & 0xff));
      key.push_back((char)((v >> 8) & 0xff));
    }
    key.push_back('\xff');
    key.push_back('\xff');
  }
  return key;
}

Complex Complex::without(std::span<const Simplex> removed) const {
  Complex out;
  out.simp_ = simp_;
  for (const Simplex& s : removed) out.simp_.erase(s);
  return out;
}

long long euler_characteristic(std::span<const Simplex> simplices) {
  long long chi = 0;
  for (const Simplex& s : simplices) chi += (s.dim() % 2 == 0) ? 1 : -1;
  return chi;
}

long long euler_characteristic(const Complex& c) {
  long long chi = 0;
  c.for_each([&](const Simplex& s) { chi += (s.dim() % 2 == 0) ? 1 : -1; });
  return chi;
}

Complex cone(VertexId t, const Complex& c) {
  for (VertexId v : c.vertex_ids())
    if (v == t)
      throw std::invalid_argument("cone: apex " + std::to_string(t) +
                                  " is already a vertex");
  std::vector<Simplex> simplices = c.sorted_simplices();
  std::vector<Simplex> all = simplices;
  all.push_back(Simplex{t});
  for (const Simplex& s : simplices) all.push_back(s.with_vertex(t));
  return Complex::from_simplices(all);
}

Complex standard_complex(StandardKind kind, int n) {
  int min_n = kind == StandardKind::Pi ? 0 : 1;
  if (n < min_n || n + 1 > (int)kMaxVerticesPerComplex)
    throw std::invalid_argument("standard_complex: n out of range");
  std::vector<VertexId> top;
  for (int i = 0; i <= n; ++i) top.push_back((VertexId)i);
  Simplex cell(top);
  std::vector<Simplex> simplices = cell.all_faces();
  auto drop = [&](const Simplex& s) {
    simplices.erase(std::remove(simplices.begin(), simplices.end(), s),
                    simplices.end());
  };
  if (kind == StandardKind::Theta || kind == StandardKind::Lambda) drop(cell);
  if (kind == StandardKind::Lambda) {
    std::vector<VertexId> sub(top.begin(), top.end() - 1);
    drop(Simplex(sub));
  }
  return Complex::from_simplices(simplices);
}

std::string complex_to_json(const Complex& c) {
  nlohmann::json j;
  j["facets"] = nlohmann::json::array();
  for (const Simplex& f : c.facets()) {
    nlohmann::json arr = nlohmann::json::array();
    for (VertexId v : f.vertices()) arr.push_back(v);
    j["facets"].push_back(arr);
  }
  return j.dump();
}

Complex complex_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  auto parse_list = [](const nlohmann::json& arr) {
    std::vector<Simplex> out;
    for (const auto& item : arr) {
      std::vector<VertexId> verts;
      for (const auto& v : item) verts.push_back(v.get<VertexId>());
      out.emplace_back(std::move(verts));
    }
    return out;
  };
  if (j.contains("facets")) {
    std::vector<Simplex> facets = parse_list(j["facets"]);
    return Complex::from_facets(facets);
  }
  if (j.contains("simplices")) {
    std::vector<Simplex> simplices = parse_list(j["simplices"]);
    return Complex::from_simplices(simplices);
  }
  throw std::invalid_argument(
      "complex_from_json: need a \"facets\" or \"simplices\" key");
}

}  // namespace evatop
