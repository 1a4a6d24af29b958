#include "walkreg/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "walkreg/errors.hpp"
#include "walkreg/graph6.hpp"

namespace walkreg {

Graph parse_json_graph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON graph: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw InputError("JSON graph must be an object with \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw InputError("JSON graph: \"n\" must be an integer");
  int n = j["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw InputError("JSON graph: each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::from_edges(n, edges);
}

std::string encode_json_graph(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  auto& arr = j["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) arr.push_back({u, v});
  return j.dump();
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw InputError("empty graph input");
  if (format == GraphFormat::kAuto)
    format = text[first] == '{' ? GraphFormat::kJson : GraphFormat::kGraph6;
  if (format == GraphFormat::kJson) return parse_json_graph(text);
  return parse_graph6(text.substr(first));
}

Graph read_graph(const std::string& path, GraphFormat format) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_graph(text, format);
}

GraphFormat parse_format_name(const std::string& name) {
  if (name == "auto") return GraphFormat::kAuto;
  if (name == "graph6") return GraphFormat::kGraph6;
  if (name == "json") return GraphFormat::kJson;
  throw InputError("unknown graph format: " + name);
}

}  // namespace walkreg
