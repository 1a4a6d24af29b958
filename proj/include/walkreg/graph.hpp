#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace walkreg {

/// Sentinel distance for vertex pairs in different components.
inline constexpr int kUnreachable = -1;

using Edge = std::pair<int, int>;  // stored with first < second

/// All-pairs hop distances plus data derived from them.
///
/// dist is row-major n*n, symmetric, zero diagonal, kUnreachable across
/// components. diameter is the maximum finite entry.
struct DistanceData {
  int n = 0;
  std::vector<int> dist;
  int diameter = 0;
  bool connected = true;
  std::vector<std::vector<int>> class_counts;  // [x][i] = |Γ_i(x)|

  int at(int x, int y) const { return dist[static_cast<size_t>(x) * n + y]; }

  /// Vertices at distance exactly i from x, ascending.
  std::vector<int> sphere(int x, int i) const;

  int eccentricity(int x) const { return static_cast<int>(class_counts[x].size()) - 1; }
};

struct GraphMetrics {
  std::optional<int> valency;    // set iff the graph is regular
  bool connected = false;
  bool bipartite = false;
  std::optional<int> girth;      // nullopt when acyclic
  std::optional<int> odd_girth;  // nullopt when no odd cycle exists
  bool complete_multipartite = false;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Copies are cheap handles onto shared storage; the all-pairs distance data
/// is computed once on first use and then shared, so a Graph can be analyzed
/// concurrently from several threads.
class Graph {
 public:
  Graph();  // empty graph on 0 vertices

  /// Validates and normalizes the edge list. Throws InputError on self-loops,
  /// duplicate edges, or endpoints outside [0, n).
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int n() const;
  int edge_count() const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;

  /// Edges in lexicographic order, each as (u, v) with u < v.
  const std::vector<Edge>& edges() const;

  /// Common valency, or nullopt if degrees differ (or n = 0).
  std::optional<int> valency() const;

  /// BFS-from-every-vertex distance data, cached after the first call.
  const DistanceData& distance_data() const;

  Graph complement() const;

  bool operator==(const Graph& other) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit Graph(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

/// Induced subgraph on `vertices` (need not be sorted); second element maps
/// new labels back to labels in g.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    std::vector<int> vertices);

/// Induced subgraph on the neighbors of x. Throws InputError if x is out of
/// range.
std::pair<Graph, std::vector<int>> local_graph(const Graph& g, int x);

GraphMetrics metrics(const Graph& g);

}  // namespace walkreg
