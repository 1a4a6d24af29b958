#include "walkreg/constructions.hpp"

#include <algorithm>

#include "walkreg/errors.hpp"
#include "walkreg/exact_walk.hpp"

namespace walkreg::constructions {

namespace {

std::optional<int> order_of(const Graph& g, std::optional<int> known) {
  if (known) return known;
  if (!g.distance_data().connected || !g.valency()) return std::nullopt;
  return exact::walk_regularity_order(g).order;
}

void require_connected(const Graph& g, const char* what) {
  if (g.n() == 0 || !g.distance_data().connected)
    throw InputError(std::string(what) + " requires a connected input graph");
}

}  // namespace

ConstructionResult bipartite_double(const Graph& g, std::optional<int> input_order) {
  require_connected(g, "bipartite_double");
  const int n = g.n();
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, n + v);
    edges.emplace_back(v, n + u);
  }
  ConstructionResult res;
  res.graph = Graph::from_edges(2 * n, edges);
  for (int v = 0; v < n; ++v) res.vertex_labels.push_back(std::to_string(v) + "+");
  for (int v = 0; v < n; ++v) res.vertex_labels.push_back(std::to_string(v) + "-");
  res.output_connected = res.graph.distance_data().connected;

  GraphMetrics m = metrics(g);
  if (!m.bipartite && m.odd_girth) {
    int s = (*m.odd_girth - 1) / 2;
    auto t = order_of(g, input_order);
    if (t) res.guaranteed_order = std::min(s, *t);
  } else {
    res.note = "input bipartite: double is two disjoint copies";
  }
  return res;
}

ConstructionResult distance_k_graph(const Graph& g, int i,
                                    std::optional<int> input_order) {
  require_connected(g, "distance_k_graph");
  const auto& dd = g.distance_data();
  if (i < 1 || i > dd.diameter)
    throw InputError("distance_k_graph: i must be in [1, diameter]");
  std::vector<Edge> edges;
  const int n = g.n();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (dd.at(u, v) == i) edges.emplace_back(u, v);
  ConstructionResult res;
  res.graph = Graph::from_edges(n, edges);
  for (int v = 0; v < n; ++v) res.vertex_labels.push_back(std::to_string(v));
  res.output_connected = res.graph.distance_data().connected;

  if (i == 2) {
    GraphMetrics m = metrics(g);
    auto t = order_of(g, input_order);
    if (t && *t >= 2 && !m.complete_multipartite && m.odd_girth) {
      int s = (*m.odd_girth - 1) / 2;
      res.guaranteed_order = std::min(s / 2, *t / 2);
    }
  }
  return res;
}

std::pair<ConstructionResult, ConstructionResult> halved_graphs(
    const Graph& g, std::optional<int> input_order) {
  require_connected(g, "halved_graphs");
  GraphMetrics m = metrics(g);
  if (!m.bipartite) throw InputError("halved_graphs requires a bipartite graph");

  // 2-color by BFS parity; sides keep ascending vertex order.
  const int n = g.n();
  std::vector<int> color(n, -1);
  std::vector<int> queue{0};
  color[0] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : g.neighbors(u))
      if (color[w] == -1) {
        color[w] = color[u] ^ 1;
        queue.push_back(w);
      }
  }
  const auto& dd = g.distance_data();
  auto build = [&](int side) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (color[v] == side) verts.push_back(v);
    std::vector<Edge> edges;
    for (size_t a = 0; a < verts.size(); ++a)
      for (size_t b = a + 1; b < verts.size(); ++b)
        if (dd.at(verts[a], verts[b]) == 2)
          edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    ConstructionResult res;
    res.graph = Graph::from_edges(static_cast<int>(verts.size()), edges);
    for (int v : verts) res.vertex_labels.push_back(std::to_string(v));
    res.output_connected = res.graph.distance_data().connected;
    auto t = order_of(g, input_order);
    if (t && *t >= 2) res.guaranteed_order = *t / 2;
    return res;
  };
  return {build(0), build(1)};
}

ConstructionResult line_graph(const Graph& g, std::optional<int> input_order) {
  require_connected(g, "line_graph");
  if (!g.valency() || *g.valency() < 2)
    throw InputError("line_graph requires a regular graph with valency >= 2");
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<Edge> ledges;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      auto [u1, v1] = edges[a];
      auto [u2, v2] = edges[b];
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) ledges.emplace_back(a, b);
    }
  ConstructionResult res;
  res.graph = Graph::from_edges(m, ledges);
  for (auto [u, v] : edges)
    res.vertex_labels.push_back("{" + std::to_string(u) + "," + std::to_string(v) + "}");
  res.output_connected = res.graph.distance_data().connected;

  auto t_in = order_of(g, input_order);
  auto girth = metrics(g).girth;
  if (t_in && girth) {
    // largest t with order >= t+1 and girth > 2t+1
    int t = std::min(*t_in - 1, (*girth - 2) / 2);
    if (t >= 0) res.guaranteed_order = t;
  }
  return res;
}

namespace {

void require_one_walk_regular(const Graph& g, const char* what) {
  require_connected(g, what);
  if (!g.valency())
    throw InputError(std::string(what) + " requires a regular input graph");
  auto ord = exact::walk_regularity_order(g).order;
  if (!ord || *ord < 1)
    throw InputError(std::string(what) + " requires a 1-walk-regular input graph");
}

}  // namespace

ConstructionResult kronecker_product(const Graph& g, const Graph& h) {
  require_one_walk_regular(g, "kronecker_product");
  require_one_walk_regular(h, "kronecker_product");
  const int ng = g.n(), nh = h.n();
  std::vector<Edge> edges;
  auto id = [nh](int x, int u) { return x * nh + u; };
  for (auto [x, y] : g.edges())
    for (auto [u, v] : h.edges()) {
      edges.emplace_back(std::min(id(x, u), id(y, v)), std::max(id(x, u), id(y, v)));
      edges.emplace_back(std::min(id(x, v), id(y, u)), std::max(id(x, v), id(y, u)));
    }
  ConstructionResult res;
  res.graph = Graph::from_edges(ng * nh, edges);
  for (int x = 0; x < ng; ++x)
    for (int u = 0; u < nh; ++u)
      res.vertex_labels.push_back("(" + std::to_string(x) + "," + std::to_string(u) + ")");
  res.output_connected = res.graph.distance_data().connected;
  res.guaranteed_order = 1;
  if (!res.output_connected) res.note = "both factors bipartite: product disconnected";
  return res;
}

ConstructionResult cartesian_square(const Graph& g) {
  require_one_walk_regular(g, "cartesian_square");
  const int n = g.n();
  std::vector<Edge> edges;
  auto id = [n](int x, int u) { return x * n + u; };
  for (int x = 0; x < n; ++x)
    for (auto [u, v] : g.edges()) edges.emplace_back(id(x, u), id(x, v));
  for (auto [x, y] : g.edges())
    for (int u = 0; u < n; ++u)
      edges.emplace_back(std::min(id(x, u), id(y, u)), std::max(id(x, u), id(y, u)));
  ConstructionResult res;
  res.graph = Graph::from_edges(n * n, edges);
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < n; ++u)
      res.vertex_labels.push_back("(" + std::to_string(x) + "," + std::to_string(u) + ")");
  res.output_connected = res.graph.distance_data().connected;
  res.guaranteed_order = 1;
  return res;
}

ConstructionResult coclique_extension(const Graph& g, int s) {
  if (s < 1) throw InputError("coclique_extension: s must be >= 1");
  require_one_walk_regular(g, "coclique_extension");
  const int n = g.n();
  std::vector<Edge> edges;
  auto id = [s](int x, int i) { return x * s + i; };
  for (auto [u, v] : g.edges())
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        edges.emplace_back(std::min(id(u, i), id(v, j)), std::max(id(u, i), id(v, j)));
  ConstructionResult res;
  res.graph = Graph::from_edges(n * s, edges);
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < s; ++i)
      res.vertex_labels.push_back(std::to_string(x) + "." + std::to_string(i));
  res.output_connected = res.graph.distance_data().connected;
  res.guaranteed_order = 1;
  return res;
}

namespace {

// Strongly regular parameter scan: constant common-neighbor counts over
// adjacent and non-adjacent pairs. Returns (lambda, mu) when g qualifies.
std::optional<std::pair<int, int>> srg_parameters(const Graph& g) {
  const int n = g.n();
  if (!g.valency() || n < 3) return std::nullopt;
  int lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const auto& nu = g.neighbors(u);
      const auto& nv = g.neighbors(v);
      int common = 0;
      size_t i = 0, j = 0;
      while (i < nu.size() && j < nv.size()) {
        if (nu[i] == nv[j]) ++common, ++i, ++j;
        else if (nu[i] < nv[j]) ++i;
        else ++j;
      }
      if (g.adjacent(u, v)) {
        if (lambda == -1) lambda = common;
        else if (lambda != common) return std::nullopt;
      } else {
        if (mu == -1) mu = common;
        else if (mu != common) return std::nullopt;
      }
    }
  if (lambda == -1 || mu == -1) return std::nullopt;
  return std::make_pair(lambda, mu);
}

}  // namespace

ConstructionResult complement_block_double(const Graph& g) {
  require_connected(g, "complement_block_double");
  if (!g.valency()) throw InputError("complement_block_double requires a regular graph");
  const int n = g.n();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) {
        edges.emplace_back(u, v);
        edges.emplace_back(n + u, n + v);
      } else {
        edges.emplace_back(u, n + v);
        edges.emplace_back(v, n + u);
      }
    }
  ConstructionResult res;
  res.graph = Graph::from_edges(2 * n, edges);
  for (int v = 0; v < n; ++v) res.vertex_labels.push_back(std::to_string(v) + ".L");
  for (int v = 0; v < n; ++v) res.vertex_labels.push_back(std::to_string(v) + ".R");
  res.output_connected = res.graph.distance_data().connected;

  if (auto lm = srg_parameters(g)) {
    auto [lambda, mu] = *lm;
    int k = *g.valency();
    if (n == 4 * k - 2 * mu - 2 * lambda)
      res.note = "exceptional case n = 4k - 2mu - 2lambda: two-graph switching class";
  }
  return res;
}

}  // namespace walkreg::constructions
