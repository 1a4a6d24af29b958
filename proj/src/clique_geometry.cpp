#include "walkreg/clique_geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "walkreg/errors.hpp"

namespace walkreg::cliques {

namespace {

using Bitset = std::vector<uint64_t>;

struct BitOps {
  int n = 0;
  int words = 0;

  Bitset make() const { return Bitset(words, 0); }
  static void set(Bitset& b, int i) { b[i >> 6] |= uint64_t{1} << (i & 63); }
  static bool test(const Bitset& b, int i) {
    return (b[i >> 6] >> (i & 63)) & 1;
  }
  static bool empty(const Bitset& b) {
    for (auto w : b)
      if (w) return false;
    return true;
  }
  static int popcount_and(const Bitset& a, const Bitset& b) {
    int c = 0;
    for (size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
  }
};

class BronKerbosch {
 public:
  BronKerbosch(const Graph& g, size_t cap) : cap_(cap) {
    ops_.n = g.n();
    ops_.words = (g.n() + 63) / 64;
    adj_.resize(g.n(), ops_.make());
    for (auto [u, v] : g.edges()) {
      BitOps::set(adj_[u], v);
      BitOps::set(adj_[v], u);
    }
  }

  std::vector<std::vector<int>> run() {
    Bitset p = ops_.make(), x = ops_.make();
    for (int v = 0; v < ops_.n; ++v) BitOps::set(p, v);
    std::vector<int> r;
    expand(r, p, x);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void expand(std::vector<int>& r, Bitset p, Bitset x) {
    if (BitOps::empty(p) && BitOps::empty(x)) {
      if (out_.size() >= cap_) throw BudgetError("maximal clique cap exceeded");
      auto clique = r;
      std::sort(clique.begin(), clique.end());
      out_.push_back(std::move(clique));
      return;
    }
    // Tomita pivot: vertex of P ∪ X maximizing |P ∩ N(u)| (lowest index wins).
    int pivot = -1, best = -1;
    for (int u = 0; u < ops_.n; ++u)
      if (BitOps::test(p, u) || BitOps::test(x, u)) {
        int score = BitOps::popcount_and(p, adj_[u]);
        if (score > best) {
          best = score;
          pivot = u;
        }
      }
    for (int v = 0; v < ops_.n; ++v) {
      if (!BitOps::test(p, v) || BitOps::test(adj_[pivot], v)) continue;
      Bitset np = ops_.make(), nx = ops_.make();
      for (int i = 0; i < ops_.words; ++i) {
        np[i] = p[i] & adj_[v][i];
        nx[i] = x[i] & adj_[v][i];
      }
      r.push_back(v);
      expand(r, np, nx);
      r.pop_back();
      p[v >> 6] &= ~(uint64_t{1} << (v & 63));
      BitOps::set(x, v);
    }
  }

  size_t cap_;
  BitOps ops_;
  std::vector<Bitset> adj_;
  std::vector<std::vector<int>> out_;
};

bool is_clique(const Graph& g, const std::vector<int>& c) {
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j)
      if (!g.adjacent(c[i], c[j])) return false;
  return true;
}

}  // namespace

CliqueSet maximal_cliques(const Graph& g, size_t cap) {
  CliqueSet out;
  if (g.n() == 0) return out;
  out.cliques = BronKerbosch(g, cap).run();
  return out;
}

DelsarteBound delsarte_bound(int k, double theta_min) {
  if (!(theta_min < 0)) throw InputError("Delsarte bound needs a negative eigenvalue");
  DelsarteBound b;
  b.bound = 1.0 - k / theta_min;
  double nearest = std::round(b.bound);
  if (std::abs(b.bound - nearest) <= 1e-6)
    b.integer_candidate = static_cast<int>(nearest);
  return b;
}

bool is_delsarte_clique(const Graph& g, const spectral::Idempotent& e_min,
                        const std::vector<int>& c) {
  if (!is_clique(g, c)) throw InputError("is_delsarte_clique: set is not a clique");
  if (c.empty()) return false;
  Eigen::VectorXd chi = Eigen::VectorXd::Zero(g.n());
  for (int v : c) chi(v) = 1.0;
  return (e_min.matrix * chi).norm() <= 1e-7 * std::sqrt(static_cast<double>(c.size()));
}

std::vector<CliqueRankRecord> clique_rank_check(
    const Graph& g, const std::vector<spectral::Idempotent>& idempotents,
    const CliqueSet& cliques) {
  int max_clique = 0;
  for (const auto& c : cliques.cliques)
    max_clique = std::max(max_clique, static_cast<int>(c.size()));
  double k = static_cast<double>(g.valency().value_or(-1));
  std::vector<CliqueRankRecord> out;
  for (const auto& e : idempotents) {
    if (std::abs(e.theta - k) <= 1e-9 * std::max(1.0, k)) continue;
    CliqueRankRecord rec;
    rec.theta = e.theta;
    rec.rank = e.multiplicity;
    rec.max_clique = max_clique;
    rec.tight = (max_clique == rec.rank + 1);
    if (max_clique > rec.rank + 1)
      throw VerificationError(
          "clique of size " + std::to_string(max_clique) +
          " exceeds idempotent rank bound m+1 = " + std::to_string(rec.rank + 1));
    out.push_back(rec);
  }
  return out;
}

CliqueProfile clique_profile(const Graph& g, const std::vector<int>& c, int t,
                             int d_index) {
  if (!is_clique(g, c) || c.empty())
    throw InputError("clique_profile: need a non-empty clique");
  const int n = g.n();
  const auto& dd = g.distance_data();

  std::vector<int> dist_to_c(n, -1);
  std::vector<int> queue;
  for (int v : c) {
    dist_to_c[v] = 0;
    queue.push_back(v);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : g.neighbors(u))
      if (dist_to_c[w] == -1) {
        dist_to_c[w] = dist_to_c[u] + 1;
        queue.push_back(w);
      }
  }
  CliqueProfile prof;
  prof.covering_radius = *std::max_element(dist_to_c.begin(), dist_to_c.end());
  if (prof.covering_radius > d_index - 1)
    throw VerificationError("Delsarte clique covering radius " +
                            std::to_string(prof.covering_radius) +
                            " exceeds d-1 = " + std::to_string(d_index - 1));

  prof.phi.assign(std::max(0, t), -1);
  prof.phi_constant.assign(std::max(0, t), true);
  for (int v = 0; v < n; ++v) {
    int i = dist_to_c[v];
    if (i < 0 || i >= t) continue;
    int cnt = 0;
    for (int u : c)
      if (dd.at(v, u) == i) ++cnt;
    if (prof.phi[i] == -1) prof.phi[i] = cnt;
    else if (prof.phi[i] != cnt) {
      prof.phi_constant[i] = false;
      throw VerificationError(
          "clique profile phi_" + std::to_string(i) + " not constant (vertex " +
          std::to_string(v) + " sees " + std::to_string(cnt) + ", expected " +
          std::to_string(prof.phi[i]) + ")");
    }
  }
  return prof;
}

namespace {

class ExactCover {
 public:
  ExactCover(const Graph& g, const std::vector<std::vector<int>>& lines,
             int64_t budget)
      : budget_(budget) {
    const auto& edges = g.edges();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
      edge_index_[edges[i]] = i;
    line_edges_.resize(lines.size());
    edge_lines_.resize(edges.size());
    for (size_t li = 0; li < lines.size(); ++li) {
      const auto& c = lines[li];
      for (size_t a = 0; a < c.size(); ++a)
        for (size_t b = a + 1; b < c.size(); ++b) {
          int ei = edge_index_.at({std::min(c[a], c[b]), std::max(c[a], c[b])});
          line_edges_[li].push_back(ei);
          edge_lines_[ei].push_back(static_cast<int>(li));
        }
      std::sort(line_edges_[li].begin(), line_edges_[li].end());
    }
    covered_by_.assign(edges.size(), -1);
  }

  // Returns true when a cover was found (stored in chosen_), false when the
  // search space is exhausted. Throws BudgetError when nodes run out.
  bool solve() { return descend(); }

  std::vector<int> chosen() const { return chosen_; }
  int64_t nodes() const { return nodes_; }

 private:
  bool descend() {
    int target = -1;
    for (int e = 0; e < static_cast<int>(covered_by_.size()); ++e)
      if (covered_by_[e] == -1) {
        target = e;
        break;
      }
    if (target == -1) return true;
    for (int li : edge_lines_[target]) {
      bool free = true;
      for (int e : line_edges_[li])
        if (covered_by_[e] != -1) {
          free = false;
          break;
        }
      if (!free) continue;
      if (++nodes_ > budget_)
        throw BudgetError("exact-cover node budget exhausted after " +
                          std::to_string(nodes_) + " nodes");
      for (int e : line_edges_[li]) covered_by_[e] = li;
      chosen_.push_back(li);
      if (descend()) return true;
      chosen_.pop_back();
      for (int e : line_edges_[li]) covered_by_[e] = -1;
    }
    return false;
  }

  int64_t budget_;
  std::map<Edge, int> edge_index_;
  std::vector<std::vector<int>> line_edges_;
  std::vector<std::vector<int>> edge_lines_;
  std::vector<int> covered_by_;
  std::vector<int> chosen_;
  int64_t nodes_ = 0;
};

}  // namespace

GeometryResult geometric_decomposition(const Graph& g,
                                       const spectral::Idempotent& e_min,
                                       int64_t node_budget) {
  GeometryResult res;
  auto k = g.valency();
  if (!k || !g.distance_data().connected)
    throw InputError("geometric_decomposition requires a connected regular graph");
  res.bound = delsarte_bound(*k, e_min.theta);
  if (!res.bound.integer_candidate) {
    res.status = GeometryStatus::kNotGeometric;
    res.reason = "Delsarte bound is not an integer";
    return res;
  }
  const int target = *res.bound.integer_candidate;

  CliqueSet maximal = maximal_cliques(g);
  for (const auto& c : maximal.cliques)
    if (static_cast<int>(c.size()) == target && is_delsarte_clique(g, e_min, c))
      res.delsarte_cliques.push_back(c);
  if (res.delsarte_cliques.empty()) {
    res.status = GeometryStatus::kNotGeometric;
    res.reason = "no Delsarte cliques exist";
    return res;
  }

  ExactCover solver(g, res.delsarte_cliques, node_budget);
  bool found;
  try {
    found = solver.solve();
  } catch (const BudgetError&) {
    res.status = GeometryStatus::kUnknown;
    res.reason = "exact-cover node budget exhausted";
    res.nodes_used = node_budget;
    return res;
  }
  res.nodes_used = solver.nodes();
  if (!found) {
    res.status = GeometryStatus::kNotGeometric;
    res.reason = "exact-cover search exhausted without a cover";
    return res;
  }

  CliqueCover cover;
  for (int li : solver.chosen()) cover.lines.push_back(res.delsarte_cliques[li]);
  std::sort(cover.lines.begin(), cover.lines.end());
  for (size_t li = 0; li < cover.lines.size(); ++li) {
    const auto& c = cover.lines[li];
    for (size_t a = 0; a < c.size(); ++a)
      for (size_t b = a + 1; b < c.size(); ++b)
        cover.edge_assignment[{std::min(c[a], c[b]), std::max(c[a], c[b])}] =
            static_cast<int>(li);
  }
  res.cover = std::move(cover);
  res.status = GeometryStatus::kGeometric;
  return res;
}

Graph dual_graph(const CliqueCover& cover, const Graph& g) {
  const int m = static_cast<int>(cover.lines.size());
  std::vector<std::vector<int>> lines_of(g.n());
  for (int li = 0; li < m; ++li)
    for (int v : cover.lines[li]) lines_of[v].push_back(li);
  std::set<Edge> edges;
  for (const auto& ls : lines_of)
    for (size_t i = 0; i < ls.size(); ++i)
      for (size_t j = i + 1; j < ls.size(); ++j)
        edges.insert({std::min(ls[i], ls[j]), std::max(ls[i], ls[j])});
  return Graph::from_edges(m, {edges.begin(), edges.end()});
}

SufficiencyReport geometric_sufficiency(const Graph& g, int omega, int order,
                                        double theta_min, long long a1,
                                        long long c2) {
  SufficiencyReport rep;
  rep.omega = omega;
  rep.theta_min = theta_min;
  rep.a1 = a1;
  rep.c2 = c2;
  rep.threshold = std::pow(static_cast<double>(omega), 4) * c2;
  if (omega < 2) rep.unmet_guards.push_back("omega >= 2");
  if (order < 2) rep.unmet_guards.push_back("2-walk-regular");
  if (g.distance_data().diameter < 2) rep.unmet_guards.push_back("diameter >= 2");
  if (!(theta_min >= -omega - 1e-9 && theta_min < 1 - omega))
    rep.unmet_guards.push_back("smallest eigenvalue in [-omega, 1-omega)");
  if (!rep.unmet_guards.empty()) {
    rep.verdict = SufficiencyVerdict::kGuardsUnmet;
    return rep;
  }
  rep.verdict = (static_cast<double>(a1) > rep.threshold)
                    ? SufficiencyVerdict::kGuaranteed
                    : SufficiencyVerdict::kInconclusive;
  return rep;
}

}  // namespace walkreg::cliques
