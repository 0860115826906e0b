// Executable verifications of the fixed-point and evasiveness theorems, plus
// the seeded verification suites behind the `verify` subcommand.  Every
// report carries its individual assertions with witnesses; a verdict is the
// conjunction of the applicable checks.

#ifndef EVATOP_THEOREM_HPP
#define EVATOP_THEOREM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evatop/collapse.hpp"
#include "evatop/graph_props.hpp"
#include "evatop/group_action.hpp"
#include "evatop/permutation.hpp"
#include "evatop/rng.hpp"
#include "evatop/simplex.hpp"

namespace evatop {

struct CheckItem {
  std::string name;
  bool pass = false;
  bool applicable = true;
  std::string witness;
};

struct TheoremReport {
  std::string theorem_id;
  std::string inputs;
  std::vector<CheckItem> checks;

  enum class Verdict { Pass, Fail, NotApplicable };
  Verdict verdict() const;
  bool passed() const { return verdict() == Verdict::Pass; }

  void require(const std::string& name, bool ok, const std::string& witness = "");
  void not_applicable(const std::string& name, const std::string& why);
  std::string to_json() const;
  std::string summary_line() const;
};

// Some simplex fixed by the automorphism f of the F_p-acyclic complex c, by
// scan in (dim, lex) order; nullopt means the guaranteed simplex was not
// found (a theorem failure, not an input error).
std::optional<Simplex> lefschetz_invariant_simplex(const Complex& c,
                                                   const Permutation& f,
                                                   uint64_t p);

// chi(fixed set) = 1 plus the alternating trace identity mod p.
TheoremReport euler_fixed_check(const Complex& c, const Permutation& f,
                                uint64_t p);

// Order-p automorphism on an F_p-acyclic complex: the fixed subcomplex is
// F_p-acyclic, and the kernel/image dimension identities of the sigma/delta
// operators hold degreewise.
TheoremReport smith_acyclicity_check(const Complex& c, const Permutation& f,
                                     uint64_t p);

// Group with a normal prime-power subgroup and cyclic quotient acting on a
// collapsible complex: chi of the orbit quotient is 1 and the invariant set
// is nonempty.
TheoremReport oliver_check(const Complex& c, const PermGroup& g, uint64_t p,
                           uint64_t node_budget = kDefaultNodeBudget);

// Nontrivial monotone invariant property on p^k vertices is evasive: direct
// decision-tree verdict plus the structural ingredients (affine action on
// the property complex, edge-orbit transitivity).
TheoremReport kss_evasiveness_check(const PropertyOracle& h);

// Nontrivial monotone invariant bipartite property is evasive: threshold
// detection, quotient Euler characteristic against the closed form, and the
// direct decision-tree verdict.
TheoremReport yao_check(const PropertyOracle& f);

struct ReductionStep {
  int n = 0;        // vertex count at this level
  int case_id = 0;  // 1, 2, or 3
  std::string note;
};

struct LowerBoundCertificate {
  long long bound_num = 0, bound_den = 1;
  long long prime = 0;
  std::vector<ReductionStep> chain;
  TheoremReport report;
};

// The case-analysis reduction chain: strips vertices via the star/clique
// cases down to the largest prime (or exits through the bipartite case),
// materializing and validating every induced oracle.
LowerBoundCertificate lower_bound_certificate(const PropertyOracle& h);

// ---- verification suites ----

struct SuiteResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// every runnable suite id (aliases like thm-4.4 are accepted by run_suite)
const std::vector<std::string>& all_suite_ids();
// the twelve acceptance criteria, in order
const std::vector<std::string>& acceptance_suite_ids();
SuiteResult run_suite(const std::string& id, uint64_t seed = kDefaultSeed);
std::string suites_to_json(const std::vector<SuiteResult>& results);

}  // namespace evatop

#endif
