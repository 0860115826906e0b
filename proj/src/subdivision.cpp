#include "evatop/subdivision.hpp"

#include <stdexcept>

namespace evatop {

BarResult barycentric_subdivision(const Complex& c) {
  if (c.empty())
    throw std::invalid_argument("barycentric_subdivision: empty complex");
  BarResult out;
  std::vector<Simplex> originals = c.sorted_simplices();
  if (originals.size() > kMaxVerticesPerComplex)
    throw std::invalid_argument(
        "barycentric_subdivision: complex has too many simplices (" +
        std::to_string(originals.size()) + ") to name as vertices");
  out.dict.simplex_of = originals;
  for (std::size_t i = 0; i < originals.size(); ++i)
    out.dict.id_of.emplace(originals[i], (VertexId)i);

  // Chains are enumerated by extending each chain upward through strict
  // cofaces; since ids ascend with (dim, lex), chains are ascending id lists.
  std::vector<std::vector<VertexId>> chains;
  std::vector<VertexId> stack;
  auto extend = [&](auto&& self, std::size_t idx) -> void {
    stack.push_back((VertexId)idx);
    chains.push_back(stack);
    const Simplex& cur = originals[idx];
    for (std::size_t j = idx + 1; j < originals.size(); ++j) {
      if (originals[j].card() > cur.card() && cur.is_face_of(originals[j]))
        self(self, j);
    }
    stack.pop_back();
  };
  for (std::size_t i = 0; i < originals.size(); ++i) extend(extend, i);

  std::vector<Simplex> simplices;
  simplices.reserve(chains.size());
  for (auto& chain : chains) simplices.emplace_back(std::move(chain));
  out.complex = Complex::from_simplices(simplices);
  return out;
}

}  // namespace evatop
