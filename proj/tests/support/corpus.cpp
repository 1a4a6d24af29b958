#include "corpus.hpp"

#include <fstream>
#include <sstream>

#include "walkreg/catalog.hpp"
#include "walkreg/constructions.hpp"
#include "walkreg/errors.hpp"
#include "walkreg/graph6.hpp"

namespace walkreg::testsupport {

std::string fixture_path(const std::string& filename) {
  return std::string(WALKREG_FIXTURE_DIR) + "/" + filename;
}

Graph load_fixture(const std::string& filename) {
  std::ifstream in(fixture_path(filename));
  if (!in) throw InputError("missing fixture: " + fixture_path(filename));
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph6(ss.str());
}

namespace {

Graph prism() {
  return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5},
                               {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

std::vector<CorpusGraph> build_corpus() {
  using constructions::bipartite_double;
  using constructions::cartesian_square;
  using constructions::coclique_extension;
  using constructions::complement_block_double;
  using constructions::distance_k_graph;
  using constructions::halved_graphs;
  using constructions::kronecker_product;
  using constructions::line_graph;

  std::vector<CorpusGraph> out;
  auto add = [&](std::string name, Graph g, std::optional<int> order,
                 bool none = false, bool skip = false) {
    out.push_back({std::move(name), std::move(g), order, none, skip});
  };

  // Catalog members with pinned exact orders.
  add("C5", catalog("cycle", {5}), 2);
  add("C6", catalog("cycle", {6}), 3);
  add("C8", catalog("cycle", {8}), 4);
  add("K4", catalog("complete", {4}), 1);
  add("K5", catalog("complete", {5}), 1);
  add("octahedron", catalog("octahedron"), 2);
  add("cube", catalog("hypercube", {3}), 3);
  add("hypercube4", catalog("hypercube", {4}), 4);
  add("petersen", catalog("petersen"), 2);
  add("dodecahedron", catalog("dodecahedron"), 5);
  add("icosahedron", catalog("icosahedron"), 3);
  add("GP(8,3)", catalog("generalized_petersen", {8, 3}), 2);
  add("GP(12,5)", catalog("generalized_petersen", {12, 5}), 2);
  add("GP(24,5)", catalog("generalized_petersen", {24, 5}), 2);
  add("L2(3)", catalog("rook", {3}), 2);
  add("L2(4)", catalog("rook", {4}), 2);
  add("hamming(3,3)", catalog("hamming", {3, 3}), 3);
  add("cocktail4", catalog("cocktail_party", {4}), 2);
  add("paley13", catalog("paley", {13}), 2);

  // Derived graphs.
  Graph dodeca = catalog("dodecahedron");
  add("dodecahedron double", bipartite_double(dodeca, 5).graph, 3);
  add("dodecahedron distance-2", distance_k_graph(dodeca, 2, 5).graph, 1);
  auto halves = halved_graphs(bipartite_double(dodeca, 5).graph, 3);
  add("halved dodecahedron double", halves.first.graph, 1);
  add("Petersen x C5",
      kronecker_product(catalog("petersen"), catalog("cycle", {5})).graph, 1);
  add("C3 x C3", kronecker_product(catalog("cycle", {3}), catalog("cycle", {3})).graph,
      2);
  add("K3 + K3", cartesian_square(catalog("complete", {3})).graph, 2);
  add("C5 + C5", cartesian_square(catalog("cycle", {5})).graph, 1);
  add("2-coclique L2(4)", coclique_extension(catalog("rook", {4}), 2).graph, 1);
  add("3-coclique K3", coclique_extension(catalog("complete", {3}), 3).graph, 2);
  add("conference double paley5",
      bipartite_double(complement_block_double(catalog("paley", {5})).graph).graph, 1);
  add("conference double paley13",
      bipartite_double(complement_block_double(catalog("paley", {13})).graph).graph, 1);
  add("prism", prism(), 0);

  // Fixtures.
  Graph flag = load_fixture("flag_biplane11.g6");
  add("flag graph", flag, 3);
  add("flag graph double", bipartite_double(flag, 3).graph, 2);
  add("flag graph line graph", line_graph(flag, 3).graph, 1);
  Graph bs = load_fixture("biggs_smith.g6");
  add("Biggs-Smith", bs, 7);
  add("Biggs-Smith distance-2", distance_k_graph(bs, 2, 7).graph, 2);
  add("cubic non-walk-regular", load_fixture("cubic_non_walk_regular.g6"),
      std::nullopt, /*none=*/true);

  // Members the walk analyses must reject.
  add("two disjoint edges", Graph::from_edges(4, {{0, 1}, {2, 3}}), std::nullopt,
      false, /*skip=*/true);
  add("path P3", Graph::from_edges(3, {{0, 1}, {1, 2}}), std::nullopt, false,
      /*skip=*/true);

  return out;
}

}  // namespace

const std::vector<CorpusGraph>& corpus() {
  static const std::vector<CorpusGraph> c = build_corpus();
  return c;
}

std::vector<CorpusGraph> analyzable_corpus() {
  std::vector<CorpusGraph> out;
  for (const auto& cg : corpus())
    if (!cg.skip_walk_analysis) out.push_back(cg);
  return out;
}

}  // namespace walkreg::testsupport
