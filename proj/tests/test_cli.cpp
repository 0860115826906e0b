#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(EVATOP_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), (int)buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("homology subcommand reproduces the hollow-triangle profile") {
  RunResult r = run("homology --facets '[[0,1],[1,2],[0,2]]' -p 5");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"p\":5,\"reduced_dims\":[0,1]}\n");
  // byte-identical across runs
  CHECK(run("homology --facets '[[0,1],[1,2],[0,2]]' -p 5").out == r.out);
}

TEST_CASE("dtc subcommand") {
  RunResult r = run("dtc --property contains_cycle -n 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"dtc\":6") != std::string::npos);
  CHECK(r.out.find("\"evasive\":true") != std::string::npos);
}

TEST_CASE("collapse subcommand emits a verifiable verdict") {
  RunResult collapsible = run("collapse --facets '[[0,1,2]]'");
  CHECK(collapsible.code == 0);
  CHECK(collapsible.out.find("\"verdict\":\"collapsible\"") != std::string::npos);
  RunResult hollow = run("collapse --facets '[[0,1],[1,2],[0,2]]'");
  CHECK(hollow.out.find("not-collapsible") != std::string::npos);
}

TEST_CASE("export-dot and delta") {
  RunResult dot = run("export-dot --property connectedness -n 3 --format dot");
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph") != std::string::npos);
  RunResult delta = run("delta --property vertex2_incident -n 4");
  CHECK(delta.code == 0);
  CHECK(delta.out.find("\"facets\"") != std::string::npos);
}

TEST_CASE("node budget reaches the collapse search") {
  RunResult r = run("collapse --facets '[[0,1,2]]' --node-budget 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("budget-exceeded") != std::string::npos);
}

TEST_CASE("subdivide and quotient subcommands") {
  RunResult sub = run("subdivide --facets '[[0,1,2]]'");
  CHECK(sub.code == 0);
  CHECK(sub.out.find("\"dictionary\"") != std::string::npos);
  RunResult quot =
      run("quotient --facets '[[0,1,2],[0,2,3]]' --group '(0 2)'");
  CHECK(quot.code == 0);
  CHECK(quot.out ==
        "{\"complex\":{\"facets\":[[0,1],[0,2]]},"
        "\"orbits\":[[0,2],[1],[3]]}\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("homology").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("verify subcommand runs a suite") {
  RunResult r = run("verify golden-homology");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
}
