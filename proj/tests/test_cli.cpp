#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bell/bell_graph.hpp"
#include "bell/canonical.hpp"
#include "bell/commands.hpp"
#include "bell/graph.hpp"
#include "bell/partition.hpp"
#include "bell/verify.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

using namespace bell;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Scratch files go under the system temp directory, not the working tree.
std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string write_file(const std::string& name, const std::string& content) {
  std::string path = tmp_path(name);
  std::ofstream f(path);
  REQUIRE(f.good());
  f << content;
  return path;
}

}  // namespace

TEST_CASE("cli: build emits the bell graph as json") {
  CliResult r = cli({"build", "-g", "Ch", "-k", "3"});  // P_4
  REQUIRE(r.code == 0);
  nlohmann::json j = r.json();
  CHECK(j["k"] == 3);
  CHECK(j["base"] == "Ch");
  CHECK(j["vertices"].size() == 4);
  CHECK(j["edges"].size() == 4);
  int doubled = 0;
  for (const auto& e : j["edges"])
    if (e[2].size() == 2) ++doubled;
  CHECK(doubled == 2);

  CliResult one = cli({"build", "-g", "C~", "-k", "4"});  // K_4, k = n
  REQUIRE(one.code == 0);
  CHECK(one.json()["vertices"].size() == 1);
  CHECK(one.json()["edges"].empty());

  CliResult multi = cli({"build", "-g", "Ch", "-k", "3", "--multigraph"});
  REQUIRE(multi.code == 0);
  CHECK(multi.json()["n_vertices"] == 4);
}

TEST_CASE("cli: build rejects bad inputs with the documented codes") {
  CHECK(cli({"build", "-g", "!!notgraph6!!", "-k", "3"}).code == 2);
  CHECK(cli({"build", "-g", "Ch", "-k", "0"}).code == 3);
  CHECK(cli({"build", "-g", "Ch", "-k", "6"}).code == 3);  // n+1 = 5 is max
  CHECK(cli({"build", "-g", "Ch", "-k", "5"}).code == 0);
  CHECK(cli({"build", "-g", "Ch"}).code == 2);  // missing -k
  CHECK(cli({"bogus-subcommand"}).code == 2);
  CHECK(cli({}).code == 2);
  CliResult help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("build") != std::string::npos);
}

TEST_CASE("cli: classify prints the census") {
  CliResult r = cli({"classify", "-g", "B?", "-k", "3"});
  REQUIRE(r.code == 0);
  nlohmann::json j = r.json();
  CHECK(j["triangles"]["s"] == 3);
  CHECK(j["triangles"]["radial_t"] == 3);
  CHECK(j["triangles"]["cyclic_t"] == 1);
  CHECK(j["tetrahedra"]["split"] == 1);
  CHECK(j["tetrahedra"]["fused"] == 1);
  CHECK(j["tetrahedra"]["s"] == 0);
}

TEST_CASE("cli: realize emits a verified certificate") {
  CliResult r = cli({"realize", "cycle", "5"});
  REQUIRE(r.code == 0);
  nlohmann::json j = r.json();
  CHECK(j["k"] == 3);
  CHECK(j["target"] == write_graph6(cycle_graph(5)));
  CHECK(j["iso"].size() == 5);
  // iso rows are (bell vertex, target vertex), sorted by bell vertex
  int last = -1;
  for (const auto& row : j["iso"]) {
    CHECK(row.size() == 2);
    CHECK(int(row[0]) > last);
    last = row[0];
  }

  CliResult t = cli({"realize", "tree", "Ch"});
  REQUIRE(t.code == 0);
  CHECK(t.json()["k"] == 4);
  CHECK(parse_graph6(t.json()["base"].get<std::string>()).order() == 7);

  CHECK(cli({"realize", "cycle", "2"}).code == 3);
  CHECK(cli({"realize", "tree", "Bw"}).code == 3);  // K_3 is no tree
  CHECK(cli({"realize", "tree", "zzz!"}).code == 2);
}

TEST_CASE("cli: reconstruct-tree from graph6 and from bell json") {
  // graph6 input through a file
  Graph b = build_bell(path_graph(5), 3).to_simple();
  std::string g6_in = write_file("cli_tree_in.g6", write_graph6(b) + "\n");
  CliResult r = cli({"reconstruct-tree", "--in", g6_in});
  REQUIRE(r.code == 0);
  nlohmann::json j = r.json();
  Graph tree = parse_graph6(j["tree"].get<std::string>());
  CHECK(testutil::brute_isomorphic(tree, path_graph(5)));
  CHECK(j["trace"]["n"] == 5);
  CHECK(j["trace"]["class"] == "brute_force");

  // bell json input, with verification
  std::string json_in = write_file(
      "cli_tree_in.json", bell_to_json(build_bell(double_broom(3, 2), 3)).dump());
  CliResult broom = cli({"reconstruct-tree", "--in", json_in, "--verify"});
  REQUIRE(broom.code == 0);
  CHECK(broom.json()["trace"]["class"] == "double_broom");
  CHECK(broom.json()["trace"]["a"] == 3);
  CHECK(broom.json()["trace"]["b"] == 2);

  // stdin variant
  std::istringstream feed(write_graph6(b));
  std::streambuf* saved = std::cin.rdbuf(feed.rdbuf());
  CliResult piped = cli({"reconstruct-tree", "--in", "-"});
  std::cin.rdbuf(saved);
  REQUIRE(piped.code == 0);
  CHECK(piped.json()["trace"]["n"] == 5);

  // non-power-of-two order
  std::string bad = write_file("cli_tree_bad.g6", "Bw\n");
  CHECK(cli({"reconstruct-tree", "--in", bad}).code == 4);
  CHECK(cli({"reconstruct-tree", "--in", tmp_path("no_such_file.g6")}).code == 2);
}

TEST_CASE("cli: reconstruct-core from multigraph json") {
  BellGraph b = build_bell(empty_graph(3), 3);
  std::string core_in =
      write_file("cli_core_in.json", multigraph_to_json(b.to_multigraph()).dump());
  CliResult r = cli({"reconstruct-core", "--in", core_in});
  REQUIRE(r.code == 0);
  nlohmann::json j = r.json();
  CHECK(parse_graph6(j["core"].get<std::string>()) == empty_graph(3));
  CHECK(j["trace"]["q_id"] ==
        b.index_of(StablePartition::from_string("0|1|2", 3)));
  CHECK(j["trace"]["line_graph_order"] == 3);
  REQUIRE(j["trace"]["components"].size() == 1);
  CHECK(j["trace"]["components"][0]["size"] == 3);
  CHECK(j["trace"]["components"][0]["root_order"] == 3);
  CHECK(j["trace"]["components"][0]["ambiguous"] == true);
  CHECK(j["trace"]["components"][0]["resolved"] == "K3");

  // bell json also works as input
  std::string as_bell = write_file("cli_core_bell.json", bell_to_json(b).dump());
  CHECK(cli({"reconstruct-core", "--in", as_bell}).code == 0);

  // a flat multigraph is not a Bell multigraph
  std::string flat = write_file(
      "cli_core_bad.json",
      R"({"edges": [[0, 1, 1], [1, 2, 1], [0, 2, 1]], "n_vertices": 3})");
  CHECK(cli({"reconstruct-core", "--in", flat}).code == 4);
  std::string junk = write_file("cli_core_junk.json", "{not json");
  CHECK(cli({"reconstruct-core", "--in", junk}).code == 2);
}

TEST_CASE("cli: verify runs a suite and reflects failures in the exit code") {
  CliResult r = cli({"verify", "figures"});
  REQUIRE(r.code == 0);
  nlohmann::json j = r.json();
  CHECK(j["suite"] == "figures");
  CHECK(j["ok"] == true);
  CHECK(j["cases"] == 6);
  CHECK(j["failures"].empty());
  CHECK(cli({"verify", "no-such-suite"}).code == 2);
}

TEST_CASE("cli: output file option writes the same json") {
  std::string out_path = tmp_path("cli_out.json");
  CliResult r = cli({"build", "-g", "B?", "-k", "2", "-o", out_path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out_path);
  REQUIRE(f.good());
  nlohmann::json j = nlohmann::json::parse(f);
  CHECK(j["k"] == 2);
  CHECK(j["vertices"].size() == 4);
}

TEST_CASE("thread count respects the environment cap") {
  setenv("BELL_THREADS", "3", 1);
  CHECK(suite_thread_count() == 3);
  setenv("BELL_THREADS", "0", 1);
  CHECK(suite_thread_count() == 1);
  unsetenv("BELL_THREADS");
  CHECK(suite_thread_count() >= 1);
}
