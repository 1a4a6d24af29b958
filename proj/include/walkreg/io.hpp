#pragma once

#include <string>
#include <string_view>

#include "walkreg/graph.hpp"

namespace walkreg {

enum class GraphFormat { kAuto, kGraph6, kJson };

/// Parses {"n": int, "edges": [[u,v], ...]}.
Graph parse_json_graph(std::string_view text);
std::string encode_json_graph(const Graph& g);

/// Reads a graph from a file path, or from standard input when path is "-".
/// kAuto sniffs JSON by a leading '{'.
Graph read_graph(const std::string& path, GraphFormat format = GraphFormat::kAuto);

Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);

GraphFormat parse_format_name(const std::string& name);  // "graph6" | "json" | "auto"

}  // namespace walkreg
