#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "walkreg/catalog.hpp"
#include "walkreg/constructions.hpp"
#include "walkreg/errors.hpp"
#include "walkreg/exact_walk.hpp"
#include "walkreg/graph6.hpp"
#include "walkreg/io.hpp"
#include "walkreg/report.hpp"

namespace {

using namespace walkreg;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open output file: " + path);
  out << text;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, std::string> out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw InputError("--param expects key=value, got: " + kv);
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

int param_int(const std::map<std::string, std::string>& params,
              const std::string& key, std::optional<int> fallback = std::nullopt) {
  auto it = params.find(key);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw InputError("missing required --param " + key + "=<value>");
  }
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw InputError("--param " + key + " must be an integer");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"walk-regularity analyzer: exact + spectral graph verification"};
  app.require_subcommand(1);

  std::string in_path, in2_path, out_path, format_name = "auto";
  int max_n = 2000;
  long long node_budget = 10000000;
  bool no_geometry = false;
  std::vector<std::string> params;

  auto* analyze_cmd = app.add_subcommand("analyze", "full analysis report (JSON)");
  analyze_cmd->add_option("input", in_path, "graph file or - for stdin")->required();
  analyze_cmd->add_option("--format", format_name, "graph6|json|auto");
  analyze_cmd->add_option("--out", out_path, "report destination");
  analyze_cmd->add_option("--max-n", max_n, "largest accepted vertex count");
  analyze_cmd->add_option("--node-budget", node_budget, "exact-cover node budget");
  analyze_cmd->add_flag("--no-geometry", no_geometry, "skip the clique-cover search");

  auto* construct_cmd = app.add_subcommand("construct", "derived graph as graph6");
  std::string op;
  std::vector<std::string> inputs;
  construct_cmd->add_option("op", op,
                            "bipartite_double|distance_k|halved|line_graph|"
                            "kronecker|cartesian_square|coclique_extension|"
                            "complement_block_double")
      ->required();
  construct_cmd->add_option("input", inputs, "input graph file(s)")->required();
  construct_cmd->add_option("--format", format_name, "graph6|json|auto");
  construct_cmd->add_option("--out", out_path, "output destination");
  construct_cmd->add_option("--param", params, "construction parameter key=value");

  auto* catalog_cmd = app.add_subcommand("catalog", "named graph as graph6");
  std::string name;
  std::vector<long long> cat_params;
  catalog_cmd->add_option("name", name, "family name")->required();
  catalog_cmd->add_option("params", cat_params, "family parameters");
  catalog_cmd->add_option("--out", out_path, "output destination");

  auto* geometry_cmd = app.add_subcommand("geometry", "clique-cover search (JSON)");
  geometry_cmd->add_option("input", in_path, "graph file or - for stdin")->required();
  geometry_cmd->add_option("--format", format_name, "graph6|json|auto");
  geometry_cmd->add_option("--node-budget", node_budget, "exact-cover node budget");
  geometry_cmd->add_option("--out", out_path, "output destination");

  auto* diagram_cmd = app.add_subcommand("diagram", "distance-distribution DOT");
  diagram_cmd->add_option("input", in_path, "graph file or - for stdin")->required();
  diagram_cmd->add_option("--format", format_name, "graph6|json|auto");
  diagram_cmd->add_option("--out", out_path, "output destination");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (analyze_cmd->parsed()) {
    Graph g = read_graph(in_path, parse_format_name(format_name));
    report::Options opt;
    opt.max_n = max_n;
    opt.node_budget = node_budget;
    opt.with_geometry = !no_geometry;
    opt.source = in_path;
    write_output(out_path, report::analyze_json(g, opt));
    return 0;
  }

  if (construct_cmd->parsed()) {
    auto fmt = parse_format_name(format_name);
    auto kv = parse_params(params);
    std::vector<Graph> gs;
    for (const auto& p : inputs) gs.push_back(read_graph(p, fmt));
    std::string text;
    using namespace constructions;
    if (op == "bipartite_double") {
      text = encode_graph6(bipartite_double(gs.at(0)).graph) + "\n";
    } else if (op == "distance_k") {
      text = encode_graph6(distance_k_graph(gs.at(0), param_int(kv, "i", 2)).graph) + "\n";
    } else if (op == "halved") {
      auto [h0, h1] = halved_graphs(gs.at(0));
      text = encode_graph6(h0.graph) + "\n" + encode_graph6(h1.graph) + "\n";
    } else if (op == "line_graph") {
      text = encode_graph6(line_graph(gs.at(0)).graph) + "\n";
    } else if (op == "kronecker") {
      if (gs.size() != 2) throw InputError("kronecker needs two input graphs");
      text = encode_graph6(kronecker_product(gs.at(0), gs.at(1)).graph) + "\n";
    } else if (op == "cartesian_square") {
      text = encode_graph6(cartesian_square(gs.at(0)).graph) + "\n";
    } else if (op == "coclique_extension") {
      text = encode_graph6(coclique_extension(gs.at(0), param_int(kv, "s", 2)).graph) + "\n";
    } else if (op == "complement_block_double") {
      text = encode_graph6(complement_block_double(gs.at(0)).graph) + "\n";
    } else {
      throw InputError("unknown construction op: " + op);
    }
    write_output(out_path, text);
    return 0;
  }

  if (catalog_cmd->parsed()) {
    write_output(out_path, encode_graph6(catalog(name, cat_params)) + "\n");
    return 0;
  }

  if (geometry_cmd->parsed()) {
    Graph g = read_graph(in_path, parse_format_name(format_name));
    report::Options opt;
    opt.node_budget = node_budget;
    opt.source = in_path;
    auto res = report::analyze(g, opt);
    nlohmann::ordered_json j;
    j["schema"] = "walkreg-report/1";
    j["input"] = {{"n", g.n()}, {"graph6", encode_graph6(g)}};
    if (!res.analyzed) {
      j["status"] = "skipped";
      j["reason"] = res.skip_reason;
    } else if (!res.geometry.evaluated) {
      j["status"] = "skipped";
      j["reason"] = "graph is not 1-walk-regular";
    } else {
      switch (res.geometry.result.status) {
        case cliques::GeometryStatus::kGeometric: j["status"] = "geometric"; break;
        case cliques::GeometryStatus::kNotGeometric: j["status"] = "not_geometric"; break;
        case cliques::GeometryStatus::kUnknown: j["status"] = "unknown"; break;
      }
      if (res.geometry.result.cover) {
        auto lines = nlohmann::ordered_json::array();
        for (const auto& line : res.geometry.result.cover->lines) lines.push_back(line);
        j["cover"] = lines;
        if (res.geometry.dual_graph6) j["dualGraph6"] = *res.geometry.dual_graph6;
      }
      if (!res.geometry.result.reason.empty()) j["reason"] = res.geometry.result.reason;
    }
    write_output(out_path, j.dump(2) + "\n");
    return res.analyzed && res.geometry.evaluated &&
                   res.geometry.result.status == cliques::GeometryStatus::kUnknown
               ? 3
               : 0;
  }

  if (diagram_cmd->parsed()) {
    Graph g = read_graph(in_path, parse_format_name(format_name));
    auto walks = exact::analyze_walks(g);
    write_output(out_path, diagram::emit_diagram(g, walks));
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const walkreg::BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const walkreg::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n"
              << "witness: " << e.witness() << "\n";
    return 2;
  } catch (const walkreg::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
