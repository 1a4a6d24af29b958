#include <algorithm>
#include <limits>
#include <vector>

#include "walkreg/errors.hpp"
#include "walkreg/graph.hpp"

namespace walkreg {

namespace {

bool two_colorable(const Graph& g) {
  const int n = g.n();
  std::vector<int> color(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = color[u] ^ 1;
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Shortest cycle: BFS from every vertex, closing a cycle the first time a
// non-tree edge joins two vertices of the same BFS tree.
std::optional<int> shortest_cycle(const Graph& g) {
  const int n = g.n();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    parent[s] = -1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      if (2 * dist[u] >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

// Shortest odd closed walk (equivalently, shortest odd cycle): BFS over the
// two-layer parity graph, looking for the shortest walk from a vertex back to
// itself with flipped parity.
std::optional<int> shortest_odd_cycle(const Graph& g) {
  const int n = g.n();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(2 * n);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(2 * s);
    dist[2 * s] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int state = queue[head];
      int u = state >> 1, parity = state & 1;
      if (dist[state] >= best) break;
      for (int w : g.neighbors(u)) {
        int next = 2 * w + (parity ^ 1);
        if (dist[next] == -1) {
          dist[next] = dist[state] + 1;
          queue.push_back(next);
        }
      }
    }
    if (dist[2 * s + 1] != -1) best = std::min(best, dist[2 * s + 1]);
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

// Complete multipartite <=> non-adjacency is an equivalence relation
// <=> the complement is a disjoint union of cliques.
bool is_complete_multipartite(const Graph& g) {
  const int n = g.n();
  std::vector<int> part(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (part[v] != -1) continue;
    int id = next++;
    part[v] = id;
    const auto& nb = g.neighbors(v);
    for (int w = 0; w < n; ++w)
      if (w != v && !std::binary_search(nb.begin(), nb.end(), w)) {
        if (part[w] != -1) return false;  // w already claimed by another class
        part[w] = id;
      }
  }
  for (auto [u, v] : g.edges())
    if (part[u] == part[v]) return false;
  // Classes must be pairwise completely joined.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[u] != part[v] && !g.adjacent(u, v)) return false;
  return true;
}

}  // namespace

GraphMetrics metrics(const Graph& g) {
  GraphMetrics m;
  m.valency = g.valency();
  m.connected = g.distance_data().connected;
  m.bipartite = two_colorable(g);
  m.girth = shortest_cycle(g);
  m.odd_girth = shortest_odd_cycle(g);
  m.complete_multipartite = is_complete_multipartite(g);
  return m;
}

}  // namespace walkreg
