#pragma once

#include <string>
#include <string_view>

#include "walkreg/graph.hpp"

namespace walkreg {

/// Decodes one graph6 record (standard or extended vertex-count header,
/// optional ">>graph6<<" prefix, trailing newline tolerated).
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding: shortest vertex-count header, zero padding,
/// no prefix, no newline. parse_graph6(encode_graph6(g)) == g.
std::string encode_graph6(const Graph& g);

}  // namespace walkreg
