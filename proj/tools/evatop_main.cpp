// evatop: command-line front door.  JSON results go to stdout, diagnostics
// and summary tables to stderr.  Exit codes: 0 success, 1 check failure
// (verify), 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "evatop/chain.hpp"
#include "evatop/collapse.hpp"
#include "evatop/decision_tree.hpp"
#include "evatop/fpkernel.hpp"
#include "evatop/graph_props.hpp"
#include "evatop/group_action.hpp"
#include "evatop/rng.hpp"
#include "evatop/subdivision.hpp"
#include "evatop/theorem.hpp"
#include "json.hpp"

namespace {

using namespace evatop;

Complex load_complex(const std::string& facets_inline,
                     const std::string& input_path) {
  if (!facets_inline.empty())
    return complex_from_json("{\"facets\":" + facets_inline + "}");
  if (!input_path.empty()) {
    std::ifstream in(input_path);
    if (!in) throw std::runtime_error("cannot open " + input_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return complex_from_json(ss.str());
  }
  throw CLI::ValidationError("need --facets or --input");
}

PropertyOracle load_property(const std::string& name, int n, long long param,
                             const std::string& truth_table_path) {
  if (!truth_table_path.empty()) {
    std::ifstream in(truth_table_path);
    if (!in) throw std::runtime_error("cannot open " + truth_table_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return truth_table_oracle(ss.str());
  }
  return builtin_property(name, n, param);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for graph-property evasiveness and the topology "
               "of property complexes"};
  app.require_subcommand(1);
  app.fallthrough();

  uint64_t prime = 2;
  uint64_t seed = kDefaultSeed;
  uint64_t node_budget = kDefaultNodeBudget;
  int threads = 1;
  std::string format = "json";
  app.add_option("-p,--prime", prime, "prime modulus for homology")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized suites")
      ->capture_default_str();
  app.add_option("--node-budget", node_budget, "search node budget")
      ->capture_default_str();
  app.add_option("--threads", threads,
                 "worker threads (results are identical at any count)")
      ->capture_default_str();
  app.add_option("--format", format, "output format: json|text|dot")
      ->capture_default_str();

  std::string facets, input;
  std::string prop_name = "connectedness";
  std::string truth_table;
  int nverts = 4;
  long long param = -1;
  std::string group_cycles;
  std::string verify_id = "all";
  std::string target_facets;

  CLI::App* homology = app.add_subcommand("homology", "reduced F_p homology");
  homology->add_option("--facets", facets, "facet list, e.g. [[0,1],[1,2]]");
  homology->add_option("--input", input, "path to a complex JSON file");

  CLI::App* collapse_cmd =
      app.add_subcommand("collapse", "collapsibility search with certificate");
  collapse_cmd->add_option("--facets", facets, "facet list");
  collapse_cmd->add_option("--input", input, "path to a complex JSON file");
  collapse_cmd->add_option("--onto", target_facets,
                           "facet list of a target subcomplex");

  CLI::App* subdivide =
      app.add_subcommand("subdivide", "barycentric subdivision");
  subdivide->add_option("--facets", facets, "facet list");
  subdivide->add_option("--input", input, "path to a complex JSON file");

  CLI::App* quotient =
      app.add_subcommand("quotient", "orbit quotient complex");
  quotient->add_option("--facets", facets, "facet list");
  quotient->add_option("--input", input, "path to a complex JSON file");
  quotient->add_option("--group", group_cycles,
                       "generators in cycle notation, ';'-separated")
      ->required();

  CLI::App* delta = app.add_subcommand(
      "delta", "property complex of a monotone property");
  delta->add_option("--property", prop_name, "builtin property name");
  delta->add_option("-n,--vertices", nverts, "vertex count");
  delta->add_option("--param", param, "property parameter");
  delta->add_option("--truth-table", truth_table, "truth-table JSON file");

  CLI::App* dtc_cmd =
      app.add_subcommand("dtc", "exact decision-tree complexity");
  dtc_cmd->add_option("--property", prop_name, "builtin property name");
  dtc_cmd->add_option("-n,--vertices", nverts, "vertex count");
  dtc_cmd->add_option("--param", param, "property parameter");
  dtc_cmd->add_option("--truth-table", truth_table, "truth-table JSON file");

  CLI::App* export_dot = app.add_subcommand(
      "export-dot", "optimal decision tree in DOT format");
  export_dot->add_option("--property", prop_name, "builtin property name");
  export_dot->add_option("-n,--vertices", nverts, "vertex count");
  export_dot->add_option("--param", param, "property parameter");
  export_dot->add_option("--truth-table", truth_table, "truth-table JSON file");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("id", verify_id, "suite id or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  (void)threads;
  try {
    if (homology->parsed()) {
      Complex c = load_complex(facets, input);
      HomologyProfile prof = reduced_homology_dims(c, prime);
      if (format == "text") {
        if (prof.empty_complex) {
          std::cout << "empty complex\n";
        } else {
          for (std::size_t i = 0; i < prof.dims.size(); ++i)
            std::cout << (i ? " " : "") << prof.dims[i];
          std::cout << "\n";
        }
      } else {
        std::cout << prof.to_json() << "\n";
      }
      return 0;
    }
    if (collapse_cmd->parsed()) {
      Complex c = load_complex(facets, input);
      if (!target_facets.empty()) {
        Complex target =
            complex_from_json("{\"facets\":" + target_facets + "}");
        OntoResult res = collapse_onto(c, target, node_budget);
        nlohmann::json j;
        j["verdict"] =
            res.verdict == OntoVerdict::Found ? "found" : "unknown";
        if (res.certificate)
          j["certificate"] = nlohmann::json::parse(
              sequence_to_json(*res.certificate));
        std::cout << j.dump() << "\n";
        return 0;
      }
      CollapseSearchResult res = search_collapsible(c, node_budget);
      nlohmann::json j;
      j["verdict"] = res.verdict == CollapseVerdict::Collapsible
                         ? "collapsible"
                         : (res.verdict == CollapseVerdict::NotCollapsible
                                ? "not-collapsible"
                                : "budget-exceeded");
      j["nodes_visited"] = res.nodes_visited;
      if (res.certificate)
        j["certificate"] =
            nlohmann::json::parse(sequence_to_json(*res.certificate));
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (subdivide->parsed()) {
      Complex c = load_complex(facets, input);
      BarResult bar = barycentric_subdivision(c);
      nlohmann::json j;
      j["complex"] = nlohmann::json::parse(complex_to_json(bar.complex));
      nlohmann::json dict = nlohmann::json::array();
      for (std::size_t i = 0; i < bar.dict.simplex_of.size(); ++i) {
        nlohmann::json entry;
        entry["vertex"] = i;
        nlohmann::json verts = nlohmann::json::array();
        for (VertexId v : bar.dict.simplex_of[i].vertices()) verts.push_back(v);
        entry["simplex"] = verts;
        dict.push_back(std::move(entry));
      }
      j["dictionary"] = std::move(dict);
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (quotient->parsed()) {
      Complex c = load_complex(facets, input);
      std::vector<Permutation> gens;
      std::stringstream ss(group_cycles);
      std::string part;
      while (std::getline(ss, part, ';'))
        if (!part.empty())
          gens.push_back(Permutation::from_cycles(part, c.vertex_ids()));
      if (gens.empty())
        gens.push_back(Permutation::identity(c.vertex_ids()));
      PermGroup g = PermGroup::from_generators(gens);
      QuotientComplex q = quotient_complex(c, g);
      nlohmann::json j;
      j["complex"] = nlohmann::json::parse(complex_to_json(q.complex));
      nlohmann::json orbits = nlohmann::json::array();
      for (const auto& orbit : q.orbits) orbits.push_back(orbit);
      j["orbits"] = std::move(orbits);
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (delta->parsed()) {
      PropertyOracle h = load_property(prop_name, nverts, param, truth_table);
      Complex c = delta_of_property(h);
      std::cout << complex_to_json(c) << "\n";
      return 0;
    }
    if (dtc_cmd->parsed()) {
      PropertyOracle h = load_property(prop_name, nverts, param, truth_table);
      if (format == "text") {
        std::cout << dtc(h) << "\n";
        return 0;
      }
      nlohmann::json j;
      j["property"] = h.name();
      j["edges"] = h.num_edges();
      j["dtc"] = dtc(h);
      j["evasive"] = is_evasive(h);
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (export_dot->parsed()) {
      PropertyOracle h = load_property(prop_name, nverts, param, truth_table);
      DecisionTree t = extract_tree(h);
      if (format == "json")
        std::cout << t.to_json() << "\n";
      else
        std::cout << t.to_dot();
      return 0;
    }
    if (verify->parsed()) {
      std::vector<std::string> ids;
      if (verify_id == "all")
        ids = all_suite_ids();
      else
        ids.push_back(verify_id);
      std::vector<SuiteResult> results;
      bool all_pass = true;
      for (const std::string& id : ids) {
        SuiteResult r = run_suite(id, seed);
        all_pass = all_pass && r.pass;
        std::ostringstream line;
        line << (r.pass ? "PASS" : "FAIL") << "  " << r.id;
        line << std::string(r.id.size() < 18 ? 18 - r.id.size() : 1, ' ');
        line << "(" << r.seconds << "s) " << r.title;
        std::cerr << line.str() << "\n";
        results.push_back(std::move(r));
      }
      if (format != "text") std::cout << suites_to_json(results) << "\n";
      return all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
