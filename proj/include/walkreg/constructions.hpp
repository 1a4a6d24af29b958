#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "walkreg/graph.hpp"

namespace walkreg::constructions {

/// A derived graph together with the walk-regularity order its construction
/// guarantees (when one is guaranteed) and a description of how output
/// vertices were labeled.
struct ConstructionResult {
  Graph graph;
  std::vector<std::string> vertex_labels;
  std::optional<int> guaranteed_order;  // nullopt = no order claimed
  bool output_connected = true;
  std::string note;
};

/// Vertices x+ (0..n-1) and x- (n..2n-1); x+ ~ y- iff x ~ y. Guarantees
/// min(s, t) where 2s+1 is the odd-girth and t the input order; no claim for
/// bipartite input (the double is then disconnected and gets flagged).
/// input_order: pass the known walk-regularity order of g, or nullopt to have
/// it computed when needed.
ConstructionResult bipartite_double(const Graph& g,
                                    std::optional<int> input_order = std::nullopt);

/// Same vertex set, edges = pairs at distance exactly i. For i = 2 on a
/// non-complete-multipartite graph of order t >= 2 and odd-girth 2s+1 the
/// result is guaranteed min(floor(s/2), floor(t/2))-walk-regular.
ConstructionResult distance_k_graph(const Graph& g, int i,
                                    std::optional<int> input_order = std::nullopt);

/// The two graphs induced on the bipartition classes by distance 2; each is
/// guaranteed floor(t/2)-walk-regular. Requires connected bipartite input.
std::pair<ConstructionResult, ConstructionResult> halved_graphs(
    const Graph& g, std::optional<int> input_order = std::nullopt);

/// Vertices = edges of g (lexicographic), adjacency = shared endpoint.
/// Guarantees the largest t with order(g) >= t+1 and girth(g) > 2t+1.
ConstructionResult line_graph(const Graph& g,
                              std::optional<int> input_order = std::nullopt);

/// (x,u) ~ (y,v) iff x~y and u~v. Both factors must be connected and
/// 1-walk-regular (verified); guarantees order 1. Output is disconnected
/// (and flagged) exactly when both factors are bipartite.
ConstructionResult kronecker_product(const Graph& g, const Graph& h);

/// (x,u) ~ (y,v) iff (x=y and u~v) or (x~y and u=v), same factor twice.
/// Requires 1-walk-regular input; guarantees order 1.
ConstructionResult cartesian_square(const Graph& g);

/// Each vertex blown up into an independent s-set, complete bipartite joins
/// between blobs of adjacent vertices. Requires 1-walk-regular input;
/// guarantees order 1.
ConstructionResult coclique_extension(const Graph& g, int s);

/// 2n vertices in two blocks; adjacency within a block follows g, across
/// blocks follows the complement of g. Input must be connected and regular.
/// Flags the exceptional case where g is strongly regular with
/// n = 4k - 2*mu - 2*lambda.
ConstructionResult complement_block_double(const Graph& g);

}  // namespace walkreg::constructions
