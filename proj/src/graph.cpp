#include "walkreg/graph.hpp"

#include <algorithm>
#include <mutex>
#include <queue>
#include <set>

#include "walkreg/errors.hpp"

namespace walkreg {

struct Graph::Impl {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<Edge> edges;  // lex sorted, u < v

  mutable std::once_flag dist_once;
  mutable std::unique_ptr<const DistanceData> dist;
};

Graph::Graph() : impl_(std::make_shared<Impl>()) {}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->adj.resize(n);
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge endpoint out of range: (" + std::to_string(u) +
                       "," + std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw InputError("duplicate edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
  }
  for (auto [u, v] : seen) {
    impl->adj[u].push_back(v);
    impl->adj[v].push_back(u);
    impl->edges.emplace_back(u, v);
  }
  for (auto& nb : impl->adj) std::sort(nb.begin(), nb.end());
  return Graph(std::move(impl));
}

int Graph::n() const { return impl_->n; }
int Graph::edge_count() const { return static_cast<int>(impl_->edges.size()); }

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= impl_->n) throw InputError("vertex out of range: " + std::to_string(v));
  return impl_->adj[v];
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = neighbors(u);
  if (v < 0 || v >= impl_->n) throw InputError("vertex out of range: " + std::to_string(v));
  return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<Edge>& Graph::edges() const { return impl_->edges; }

std::optional<int> Graph::valency() const {
  if (impl_->n == 0) return std::nullopt;
  int k = degree(0);
  for (int v = 1; v < impl_->n; ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

bool Graph::operator==(const Graph& other) const {
  return impl_->n == other.impl_->n && impl_->edges == other.impl_->edges;
}

namespace {

DistanceData compute_distances(const Graph& g) {
  const int n = g.n();
  DistanceData d;
  d.n = n;
  d.dist.assign(static_cast<size_t>(n) * n, kUnreachable);
  d.class_counts.resize(n);
  d.diameter = 0;
  d.connected = n <= 1;

  std::vector<int> queue;
  queue.reserve(n);
  for (int s = 0; s < n; ++s) {
    int* row = d.dist.data() + static_cast<size_t>(s) * n;
    queue.clear();
    queue.push_back(s);
    row[s] = 0;
    int reached = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (row[w] == kUnreachable) {
          row[w] = row[u] + 1;
          queue.push_back(w);
          ++reached;
        }
      }
    }
    int ecc = row[queue.back()];
    d.diameter = std::max(d.diameter, ecc);
    if (s == 0) d.connected = (reached == n);
    auto& counts = d.class_counts[s];
    counts.assign(ecc + 1, 0);
    for (int v = 0; v < n; ++v)
      if (row[v] != kUnreachable) ++counts[row[v]];
  }
  return d;
}

}  // namespace

const DistanceData& Graph::distance_data() const {
  std::call_once(impl_->dist_once, [this] {
    impl_->dist = std::make_unique<const DistanceData>(compute_distances(*this));
  });
  return *impl_->dist;
}

std::vector<int> DistanceData::sphere(int x, int i) const {
  std::vector<int> out;
  const int* row = dist.data() + static_cast<size_t>(x) * n;
  for (int v = 0; v < n; ++v)
    if (row[v] == i) out.push_back(v);
  return out;
}

Graph Graph::complement() const {
  std::vector<Edge> ce;
  const int n = impl_->n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!adjacent(u, v)) ce.emplace_back(u, v);
  return from_edges(n, ce);
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  std::vector<int> index(g.n(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.n()) throw InputError("vertex out of range: " + std::to_string(v));
    if (index[v] != -1) throw InputError("duplicate vertex in induced set");
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (int v : vertices)
    for (int w : g.neighbors(v))
      if (v < w && index[w] != -1) edges.emplace_back(index[v], index[w]);
  return {Graph::from_edges(static_cast<int>(vertices.size()), edges), vertices};
}

std::pair<Graph, std::vector<int>> local_graph(const Graph& g, int x) {
  return induced_subgraph(g, g.neighbors(x));
}

}  // namespace walkreg
