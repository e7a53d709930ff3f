#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "relcop/families.hpp"
#include "relcop/graph.hpp"

#ifndef RELCOP_CLI_PATH
#error "RELCOP_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(RELCOP_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("poly golden output") {
  const RunResult r = run_cli("poly --family U:6 --kind cw");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"schema\":\"relcop.poly/1\",\"graph6\":\"E{a?\",\"n\":6,\"m\":6,\"kind\":\"cw\",\"var\":\"x\","
        "\"coeffs\":[\"0\",\"6\",\"6\",\"10\",\"10\",\"5\",\"1\"],"
        "\"pretty\":\"x^6 + 5x^5 + 10x^4 + 10x^3 + 6x^2 + 6x\"}\n");
}

TEST_CASE("poly K_1 golden output") {
  const RunResult r = run_cli("poly --graph6 @ --kind cs");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"schema\":\"relcop.poly/1\",\"graph6\":\"@\",\"n\":1,\"m\":0,\"kind\":\"cs\",\"var\":\"x\","
        "\"coeffs\":[\"0\",\"1\"],\"pretty\":\"x\"}\n");
}

TEST_CASE("classify golden output") {
  const RunResult r = run_cli("classify --family G3:1,1,4");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"schema\":\"relcop.bicyclic/1\",\"graph6\":\"G]_GIC\",\"type\":3,\"params\":[1,1,4]}\n");
}

TEST_CASE("compare golden output") {
  const RunResult r = run_cli("compare --g U:6 --h C:6 --measure ncrel");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"schema\":\"relcop.dominance/1\",\"measure\":\"ncrel\",\"g\":\"E{a?\",\"h\":\"EhEG\","
        "\"verdict\":\"DominatesStrictlyOnOpenInterval\",\"difference_coeffs\":[\"0\",\"0\",\"0\",\"4\",\"-8\","
        "\"3\",\"2\"],\"root_count_in_01\":0,\"fastpath\":false,"
        "\"witnesses\":[{\"p\":\"0\",\"sign\":0},{\"p\":\"1/2\",\"sign\":1},{\"p\":\"1\",\"sign\":1}]}\n");
}

TEST_CASE("family golden output") {
  const RunResult r = run_cli("family --spec B:5");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"schema\":\"relcop.family/1\",\"spec\":\"B:5\",\"graph6\":\"D{o\",\"n\":5,\"m\":6}\n");
}

TEST_CASE("roots golden output") {
  const RunResult r = run_cli("roots --family C:4 --measure ecrel");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"schema\":\"relcop.roots/1\",\"graph6\":\"Cl\",\"measure\":\"ecrel\","
        "\"coeffs\":[\"0\",\"0\",\"0\",\"4\",\"-4\"],"
        "\"roots\":[[0.0,0.0],[0.0,0.0],[0.0,0.0],[1.0,0.0]],"
        "\"max_dist_from_one\":1.0,\"inside_disk\":true,\"converged\":true}\n");
}

TEST_CASE("enumerate output parses and is exactly the class") {
  const RunResult r = run_cli("enumerate --n 4 --cyclomatic 2");
  CHECK(r.exit_code == 0);
  // the unique (4,2) graph is K_4 minus an edge
  std::string line = r.out;
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  CHECK(line.find('\n') == std::string::npos);
  const relcop::Graph g = relcop::parse_graph6(line);
  CHECK(g.n == 4);
  CHECK(g.edge_count() == 5);

  const RunResult rc = run_cli("enumerate --n 5 --cyclomatic 1 --count");
  CHECK(rc.out == "5\n");
}

TEST_CASE("umr reports the winner with its family tag") {
  const RunResult r = run_cli("umr --n 8 --cyclomatic 2 --measure ncrel --jobs 2");
  CHECK(r.exit_code == 0);
  // single winner, tagged B:8; graph6 is the canonical representative
  CHECK(r.out.find("\"family\":\"B:8\"") != std::string::npos);
  CHECK(r.out.find("\"class_size\":236") != std::string::npos);
  const size_t at = r.out.find("\"winners\":[{\"graph6\":\"");
  REQUIRE(at != std::string::npos);
  const size_t start = at + std::string("\"winners\":[{\"graph6\":\"").size();
  const std::string g6 = r.out.substr(start, r.out.find('"', start) - start);
  CHECK(relcop::canonical_key(relcop::parse_graph6(g6)) ==
        relcop::canonical_key(relcop::build(relcop::FamilySpec::parse("B:8"))));
}

TEST_CASE("graph6 inputs accept literals and files") {
  char tmpl[] = "/tmp/relcop_g6_XXXXXX";
  const int fd = mkstemp(tmpl);
  REQUIRE(fd >= 0);
  FILE* f = fdopen(fd, "w");
  fputs("@\nD@{\n", f);
  fclose(f);
  const RunResult r = run_cli(std::string("copwin --graph6-file ") + tmpl);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"graph6\":\"@\"") != std::string::npos);
  CHECK(r.out.find("\"graph6\":\"D@{\"") != std::string::npos);
  std::remove(tmpl);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("poly --family U:6 --kind bogus").exit_code == 2);
  CHECK(run_cli("poly --graph6 not_graph6!").exit_code == 2);
  CHECK(run_cli("poly").exit_code == 2);
  CHECK(run_cli("enumerate --n 50 --cyclomatic 2").exit_code == 2);
  CHECK(run_cli("no-such-subcommand").exit_code == 2);
  CHECK(run_cli("compare --g U:6 --h U:7").exit_code == 2);
}

TEST_CASE("verify-paper scoped run") {
  const RunResult r = run_cli("verify-paper --scope table1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[PASS] criterion 1 (table1)") != std::string::npos);
}
