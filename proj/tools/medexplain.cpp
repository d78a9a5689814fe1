// Command-line front-end: ingest symmetric maps, compute modular
// decomposition trees, build explaining median graphs, verify, classify.
//
// Exit codes: 0 ok / verified; 1 verification mismatch; 2 parse error;
// 3 hypercube cap exceeded; 4 internal explains failure; 5 graph is not a
// median graph; 6 axiom/MDT classification disagreement.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "medexplain/constructions.hpp"
#include "medexplain/io.hpp"
#include "medexplain/mdt.hpp"
#include "medexplain/oracle.hpp"
#include "medexplain/pvr.hpp"
#include "medexplain/symmap.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;
constexpr int kExitNotMedian = 5;
constexpr int kExitDisagree = 6;

// Internal verification is skipped above this size; the definitional median
// check is cubic and meant for desk-scale graphs.
constexpr std::size_t kVerifyVertexLimit = 2000;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write '" << out_path << "'\n";
      std::exit(kExitParse);
    }
    out << text;
  }
}

int cmd_mdt(const std::string& input, const std::string& format) {
  medex::SymMap delta = medex::read_map_file(input);
  medex::MDTree tree = medex::compute_mdt(delta);
  if (format == "dot")
    std::cout << medex::mdt_to_dot(tree, delta.alphabet());
  else
    std::cout << medex::mdt_to_json(tree, delta.alphabet()).dump(2) << "\n";
  return 0;
}

int cmd_explain(const std::string& input, const std::string& construction,
                const std::string& format, const std::string& out_path,
                int cap) {
  medex::SymMap delta = medex::read_map_file(input);
  medex::RootedLabeledGraph graph;
  if (construction == "pvr") {
    graph = medex::pvr_expand(delta).graph;
  } else if (construction == "halfgrid") {
    graph = medex::explain_by_halfgrid(delta);
  } else {
    try {
      graph = medex::explain_by_hypercube(delta, cap);
    } catch (const medex::DimensionCapExceeded& e) {
      std::cerr << e.what() << "\n";
      return kExitCap;
    }
  }

  if (graph.num_vertices() <= kVerifyVertexLimit) {
    auto report = graph.explains(delta);
    if (!report.ok) {
      std::cerr << "internal error: construction does not explain the map\n";
      return kExitInternal;
    }
  } else {
    std::cerr << "note: graph too large for the definitional explains check, "
                 "skipping internal verification\n";
  }

  std::string text;
  if (format == "dot")
    text = medex::graph_to_dot(graph, delta.alphabet());
  else if (format == "graphml")
    text = medex::graph_to_graphml(graph, delta.alphabet());
  else
    text = medex::graph_to_json(graph, delta.alphabet()).dump(2) + "\n";
  emit(text, out_path);
  return 0;
}

int cmd_verify(const std::string& map_path, const std::string& graph_path) {
  medex::SymMap delta = medex::read_map_file(map_path);
  std::ifstream in(graph_path);
  if (!in) throw medex::ParseError("cannot open '" + graph_path + "'");
  medex::ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw medex::ParseError(std::string("invalid JSON: ") + e.what());
  }
  medex::LoadedGraph loaded = medex::read_graph_json(j, delta);

  auto mc = loaded.graph.is_median_graph();
  if (!mc.is_median) {
    const auto& w = mc.witness;
    std::cerr << "not a median graph; witness triple ("
              << loaded.graph.vertex(w.u).id << ", "
              << loaded.graph.vertex(w.v).id << ", "
              << loaded.graph.vertex(w.w).id << ") has " << w.common.size()
              << " common interval vertices\n";
    return kExitNotMedian;
  }

  auto report = loaded.graph.explains(delta);
  medex::ordered_json out;
  out["explains"] = report.ok;
  medex::ordered_json mism = medex::ordered_json::array();
  for (const auto& m : report.mismatches)
    mism.push_back({delta.point_name(m[0]), delta.point_name(m[1]),
                    delta.alphabet().symbol(m[2])});
  out["mismatches"] = std::move(mism);
  medex::ordered_json unl = medex::ordered_json::array();
  for (const auto& [x, y] : report.unlabeled)
    unl.push_back({delta.point_name(x), delta.point_name(y)});
  out["unlabeled_medians"] = std::move(unl);
  std::cout << out.dump(2) << "\n";
  return report.ok ? 0 : kExitMismatch;
}

int run_sweep(const std::vector<std::string>& tokens, std::uint64_t seed,
              std::uint64_t budget) {
  medex::InstanceSpec spec;
  spec.seed = seed;
  spec.budget = budget;
  for (const auto& tok : tokens) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw medex::ParseError("sweep token '" + tok + "' is not key=value");
    std::string key = tok.substr(0, eq);
    std::uint64_t value = std::stoull(tok.substr(eq + 1));
    if (key == "n") spec.points = static_cast<int>(value);
    else if (key == "k") spec.alphabet = static_cast<int>(value);
    else if (key == "count") spec.count = value;
    else throw medex::ParseError("unknown sweep key '" + key + "'");
  }
  medex::InstanceGenerator gen(spec);
  std::uint64_t total = 0, ultra = 0;
  while (auto delta = gen.next()) {
    ++total;
    bool axioms = medex::is_symbolic_ultrametric(*delta).ok;
    bool tree = !medex::compute_mdt(*delta).has_prime_vertex();
    if (axioms != tree) {
      std::cerr << "disagreement on instance " << total
                << ": axioms=" << axioms << " mdt=" << tree << "\n";
      return kExitDisagree;
    }
    if (axioms) ++ultra;
  }
  std::cout << "sweep: " << total << " instances, " << ultra
            << " symbolic ultrametrics, 0 disagreements\n";
  return 0;
}

int cmd_check(const std::string& input, const std::vector<std::string>& sweep,
              std::uint64_t seed, std::uint64_t budget) {
  if (!sweep.empty()) return run_sweep(sweep, seed, budget);

  medex::SymMap delta = medex::read_map_file(input);
  auto axioms = medex::is_symbolic_ultrametric(delta);
  medex::MDTree tree = medex::compute_mdt(delta);
  bool tree_says = !tree.has_prime_vertex();

  medex::ordered_json out;
  out["symbolic_ultrametric"] = axioms.ok;
  if (!axioms.ok) {
    out["violated_axiom"] = axioms.axiom;
    medex::ordered_json witness = medex::ordered_json::array();
    for (int p : axioms.witness) witness.push_back(delta.point_name(p));
    out["witness"] = std::move(witness);
  }
  out["mdt_prime_vertices"] = tree.prime_vertex_count();
  std::cout << out.dump(2) << "\n";

  if (axioms.ok != tree_says) {
    std::cerr << "internal error: axiom check and MDT check disagree\n";
    return kExitDisagree;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular decomposition and explaining median graphs"};
  app.require_subcommand(1);

  std::string input, graph_path, out_path;
  std::string format = "json";
  std::string construction = "pvr";
  int cap = 12;
  std::uint64_t seed = 0, budget = 1'000'000;
  std::vector<std::string> sweep;

  auto* mdt = app.add_subcommand("mdt", "compute the modular decomposition tree");
  mdt->add_option("input", input, "map file (JSON or TSV)")->required();
  mdt->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  auto* explain = app.add_subcommand("explain", "build an explaining median graph");
  explain->add_option("input", input, "map file (JSON or TSV)")->required();
  explain->add_option("--construction", construction)
      ->check(CLI::IsMember({"pvr", "halfgrid", "hypercube"}));
  explain->add_option("--format", format)
      ->check(CLI::IsMember({"json", "dot", "graphml"}));
  explain->add_option("--out", out_path, "output file (default stdout)");
  explain->add_option("--cap-hypercube", cap, "hypercube dimension cap");

  auto* verify = app.add_subcommand("verify", "check that a graph explains a map");
  verify->add_option("input", input, "map file")->required();
  verify->add_option("graph", graph_path, "graph JSON file")->required();

  auto* check = app.add_subcommand("check", "symbolic-ultrametric classification");
  check->add_option("input", input, "map file");
  check->add_option("--sweep", sweep, "random sweep, e.g. n=7 k=3 count=500");
  check->add_option("--seed", seed, "sweep RNG seed");
  check->add_option("--budget", budget, "instance budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mdt->parsed()) return cmd_mdt(input, format);
    if (explain->parsed())
      return cmd_explain(input, construction, format, out_path, cap);
    if (verify->parsed()) return cmd_verify(input, graph_path);
    if (check->parsed()) {
      if (sweep.empty() && input.empty()) {
        std::cerr << "check needs a map file or --sweep\n";
        return kExitParse;
      }
      return cmd_check(input, sweep, seed, budget);
    }
  } catch (const medex::MapError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const medex::GraphError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
