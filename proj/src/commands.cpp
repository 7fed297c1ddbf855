#include "bell/commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "bell/bell_graph.hpp"
#include "bell/cliques.hpp"
#include "bell/core_reconstruct.hpp"
#include "bell/errors.hpp"
#include "bell/graph.hpp"
#include "bell/matchings.hpp"
#include "bell/tree_reconstruct.hpp"
#include "bell/verify.hpp"

namespace bell {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitReconstruction = 4;
constexpr int kExitVerification = 5;

// "-" means stdin; anything else is a file path.
std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw MalformedGraph6("cannot open input '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

void emit(const nlohmann::json& j, const std::string& out_file,
          std::ostream& out) {
  if (out_file.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out_file);
  if (!f) throw MalformedGraph6("cannot open output '" + out_file + "'");
  f << j.dump(2) << "\n";
}

std::string trimmed(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Graph parse_base(const std::string& g6, int k, std::ostream& err, int& rc) {
  Graph g = parse_graph6(g6);
  if (k < 1 || k > g.order() + 1) {
    err << "error: k must satisfy 1 <= k <= n+1 (n = " << g.order()
        << ", beyond n+1 the Bell graph repeats B_{n+1})\n";
    rc = kExitPrecondition;
  }
  return g;
}

int cmd_build(const std::string& g6, int k, bool as_multigraph,
              const std::string& out_file, std::ostream& out,
              std::ostream& err) {
  int rc = kExitOk;
  Graph g = parse_base(g6, k, err, rc);
  if (rc != kExitOk) return rc;
  BellGraph b = build_bell(g, k);
  emit(as_multigraph ? multigraph_to_json(b.to_multigraph()) : bell_to_json(b),
       out_file, out);
  return kExitOk;
}

int cmd_classify(const std::string& g6, int k, const std::string& out_file,
                 std::ostream& out, std::ostream& err) {
  int rc = kExitOk;
  Graph g = parse_base(g6, k, err, rc);
  if (rc != kExitOk) return rc;
  emit(census_to_json(clique_census(build_bell(g, k))), out_file, out);
  return kExitOk;
}

nlohmann::json certificate_to_json(const RealizationCertificate& cert) {
  nlohmann::json iso = nlohmann::json::array();
  std::vector<std::pair<int, int>> pairs;
  for (int t = 0; t < cert.target.order(); ++t)
    pairs.emplace_back(cert.iso[t], t);
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [bv, tv] : pairs)
    iso.push_back(nlohmann::json::array({bv, tv}));
  return {{"target", write_graph6(cert.target)},
          {"base", write_graph6(cert.base)},
          {"k", cert.budget},
          {"iso", iso}};
}

int cmd_realize_tree(const std::string& g6, const std::string& out_file,
                     std::ostream& out) {
  emit(certificate_to_json(realize_tree(parse_graph6(g6))), out_file, out);
  return kExitOk;
}

int cmd_realize_cycle(int m, const std::string& out_file, std::ostream& out) {
  emit(certificate_to_json(realize_cycle(m)), out_file, out);
  return kExitOk;
}

int cmd_reconstruct_tree(const std::string& in_path, bool verify,
                         const std::string& out_file, std::ostream& out) {
  const std::string text = trimmed(read_input(in_path));
  Graph b(0, {});
  if (!text.empty() && text.front() == '{') {
    b = bell_from_json(nlohmann::json::parse(text)).to_simple();
  } else {
    b = parse_graph6(text);
  }
  TreeReconstruction r = reconstruct_tree(b, verify);
  nlohmann::json trace = {{"class", r.method}, {"n", r.n}};
  if (r.a >= 0) trace["a"] = r.a;
  if (r.b >= 0) trace["b"] = r.b;
  if (r.z >= 0) trace["z_id"] = r.z;
  emit({{"tree", write_graph6(r.tree)}, {"trace", trace}}, out_file, out);
  return kExitOk;
}

int cmd_reconstruct_core(const std::string& in_path,
                         const std::string& out_file, std::ostream& out) {
  const std::string text = trimmed(read_input(in_path));
  nlohmann::json j = nlohmann::json::parse(text);
  Multigraph bm = j.contains("base") ? bell_from_json(j).to_multigraph()
                                     : multigraph_from_json(j);
  CoreReconstruction r = reconstruct_core_trace(bm);
  nlohmann::json comps = nlohmann::json::array();
  for (const RootRecovery& rec : r.recoveries) {
    nlohmann::json c = {{"size", static_cast<int>(rec.component_ids.size())},
                        {"root_order", rec.root.order()},
                        {"ambiguous", rec.ambiguous}};
    if (rec.resolved)
      c["resolved"] = *rec.resolved == TriangleRoot::K3 ? "K3" : "K13";
    else
      c["resolved"] = nullptr;
    comps.push_back(std::move(c));
  }
  nlohmann::json trace = {{"q_id", r.q},
                          {"line_graph_order", r.neighborhood.graph.order()},
                          {"components", comps}};
  emit({{"core", write_graph6(r.core)}, {"trace", trace}}, out_file, out);
  return kExitOk;
}

int cmd_verify(const std::string& suite, int max_n,
               const std::string& out_file, std::ostream& out) {
  VerifySuiteReport rep = run_verify_suite(suite, max_n);
  emit(report_to_json(rep), out_file, out);
  return rep.ok() ? kExitOk : kExitVerification;
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const MalformedGraph6& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotPowerOfTwoOrder& e) {
    err << "error: " << e.what() << "\n";
    return kExitReconstruction;
  } catch (const NoBroomSolution& e) {
    err << "error: " << e.what() << "\n";
    return kExitReconstruction;
  } catch (const NotATreeResult& e) {
    err << "error: " << e.what() << "\n";
    return kExitReconstruction;
  } catch (const NotABellTreeGraph& e) {
    err << "error: " << e.what() << "\n";
    return kExitReconstruction;
  } catch (const NotALineGraph& e) {
    err << "error: " << e.what() << "\n";
    return kExitReconstruction;
  } catch (const NotABellMultigraph& e) {
    err << "error: " << e.what() << "\n";
    return kExitReconstruction;
  } catch (const CounterexampleFound& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const BadFamilyParams& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotAClique& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const TrianglePresent& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotNearPerfect& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotUniquelyUnmatched& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotATree& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const BadCycleLength& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    // Malformed JSON shapes and unknown suite names are input errors.
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Bell coloring graph toolkit"};
  app.name("bell");
  app.require_subcommand(1);

  std::string g6;
  int k = 0;
  bool as_multigraph = false;
  std::string out_file;
  std::string in_path;
  bool do_verify = false;
  std::string tree_g6;
  int cycle_len = 0;
  std::string suite;
  int max_n = -1;

  CLI::App* build = app.add_subcommand(
      "build", "Construct the Bell k-coloring graph of a base graph");
  build->add_option("-g,--graph", g6, "base graph in graph6")->required();
  build->add_option("-k,--colors", k, "number of color classes")->required();
  build->add_flag("--multigraph", as_multigraph,
                  "emit the multigraph with edge multiplicities");
  build->add_option("-o,--out", out_file, "write JSON to this file");

  CLI::App* classify = app.add_subcommand(
      "classify", "Census the cliques of the Bell k-coloring graph");
  classify->add_option("-g,--graph", g6, "base graph in graph6")->required();
  classify->add_option("-k,--colors", k, "number of color classes")
      ->required();
  classify->add_option("-o,--out", out_file, "write JSON to this file");

  CLI::App* realize = app.add_subcommand(
      "realize", "Build a base graph whose Bell coloring graph is the target");
  realize->require_subcommand(1);
  CLI::App* realize_tree_cmd =
      realize->add_subcommand("tree", "target tree in graph6");
  realize_tree_cmd->add_option("target", tree_g6, "tree in graph6")
      ->required();
  realize_tree_cmd->add_option("-o,--out", out_file, "write JSON to this file");
  CLI::App* realize_cycle_cmd =
      realize->add_subcommand("cycle", "target cycle length");
  realize_cycle_cmd->add_option("target", cycle_len, "cycle length m >= 3")
      ->required();
  realize_cycle_cmd->add_option("-o,--out", out_file,
                                "write JSON to this file");

  CLI::App* rtree = app.add_subcommand(
      "reconstruct-tree", "Recover a tree from its Bell 3-coloring graph");
  rtree->add_option("--in", in_path,
                    "Bell graph JSON or graph6 file, '-' for stdin")
      ->required();
  rtree->add_flag("--verify", do_verify,
                  "rebuild the Bell graph of the answer and compare");
  rtree->add_option("-o,--out", out_file, "write JSON to this file");

  CLI::App* rcore = app.add_subcommand(
      "reconstruct-core",
      "Recover a graph core from its Bell n-coloring multigraph");
  rcore->add_option("--in", in_path,
                    "multigraph JSON or Bell graph JSON file, '-' for stdin")
      ->required();
  rcore->add_option("-o,--out", out_file, "write JSON to this file");

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite,
                     "one of: figures, cliques, forbidden, matching, realize, "
                     "tree-roundtrip, core-roundtrip, properties")
      ->required();
  verify->add_option("--max-n", max_n, "cap the instance size where relevant");
  verify->add_option("-o,--out", out_file, "write JSON to this file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  return guarded(
      [&]() -> int {
        if (build->parsed())
          return cmd_build(g6, k, as_multigraph, out_file, out, err);
        if (classify->parsed()) return cmd_classify(g6, k, out_file, out, err);
        if (realize->parsed()) {
          if (realize_tree_cmd->parsed())
            return cmd_realize_tree(tree_g6, out_file, out);
          return cmd_realize_cycle(cycle_len, out_file, out);
        }
        if (rtree->parsed())
          return cmd_reconstruct_tree(in_path, do_verify, out_file, out);
        if (rcore->parsed()) return cmd_reconstruct_core(in_path, out_file, out);
        if (verify->parsed()) return cmd_verify(suite, max_n, out_file, out);
        return kExitParse;
      },
      err);
}

}  // namespace bell
