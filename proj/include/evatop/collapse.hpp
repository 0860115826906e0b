// Free faces, elementary collapses, and collapsibility search.
//
// A free face is a nonmaximal simplex contained in exactly one maximal
// simplex; an elementary collapse removes a free face together with
// everything containing it.  The search works over primitive collapses
// (codimension-1 free pairs, two simplices removed per step), backtracking
// with a visited-set of canonical complex encodings.  NotCollapsible is
// reported only on exhaustive completion; running out of budget is
// inconclusive.

#ifndef EVATOP_COLLAPSE_HPP
#define EVATOP_COLLAPSE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "evatop/simplex.hpp"

namespace evatop {

struct CollapseStep {
  Simplex free_face;
  std::vector<Simplex> removed;  // every simplex containing free_face, (dim, lex)
};

struct CollapseSequence {
  std::vector<CollapseStep> steps;
  Complex terminal;
};

enum class CollapseVerdict { Collapsible, NotCollapsible, BudgetExceeded };

struct CollapseSearchResult {
  CollapseVerdict verdict;
  std::optional<CollapseSequence> certificate;
  uint64_t nodes_visited = 0;
};

inline constexpr uint64_t kDefaultNodeBudget = 1000000;

// All pairs (free face, its unique maximal simplex), ordered (dim, lex) by
// the free face.
std::vector<std::pair<Simplex, Simplex>> free_faces(const Complex& c);

// Removes beta and every simplex containing it; throws if beta is not free.
Complex elementary_collapse(const Complex& c, const Simplex& beta);

// Decomposes the elementary collapse at beta into primitive steps whose
// replay equals the one-shot collapse; pairs are matched by descending
// dimension.
std::vector<CollapseStep> expand_to_primitive(const Complex& c,
                                              const Simplex& beta);

CollapseSearchResult search_collapsible(const Complex& c,
                                        uint64_t node_budget = kDefaultNodeBudget);

// True iff every step replays as a legal elementary collapse and the final
// complex equals seq.terminal.
bool verify_sequence(const Complex& c, const CollapseSequence& seq);

enum class OntoVerdict { Found, Unknown };

struct OntoResult {
  OntoVerdict verdict;
  std::optional<CollapseSequence> certificate;
  uint64_t nodes_visited = 0;
};

// Budgeted, incomplete search for a collapse of c onto the subcomplex
// target; throws if target is not a subcomplex of c.
OntoResult collapse_onto(const Complex& c, const Complex& target,
                         uint64_t node_budget = kDefaultNodeBudget);

std::string sequence_to_json(const CollapseSequence& seq);
CollapseSequence sequence_from_json(const std::string& text);

}  // namespace evatop

#endif
