#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walkreg/graph.hpp"
#include "walkreg/spectral.hpp"

namespace walkreg::cliques {

struct CliqueSet {
  std::vector<std::vector<int>> cliques;  // each sorted; list lexicographic
  bool maximal = true;
};

/// All maximal cliques via pivoted Bron-Kerbosch, deterministic order.
/// Throws BudgetError when more than `cap` cliques would be emitted.
CliqueSet maximal_cliques(const Graph& g, size_t cap = 1000000);

struct DelsarteBound {
  double bound = 0.0;                       // 1 - k/theta_min
  std::optional<int> integer_candidate;     // set iff bound is near-integral
};

/// Requires theta_min < 0.
DelsarteBound delsarte_bound(int k, double theta_min);

/// True iff the clique attains the bound, tested via ||E chi|| <= 1e-7 sqrt(|c|)
/// for the smallest-eigenvalue idempotent. Throws InputError if c is not a
/// clique.
bool is_delsarte_clique(const Graph& g, const spectral::Idempotent& e_min,
                        const std::vector<int>& c);

struct CliqueRankRecord {
  double theta = 0.0;
  int rank = 0;
  int max_clique = 0;
  bool tight = false;  // max_clique == rank + 1
};

/// For every idempotent with theta != k: every clique has at most rank+1
/// vertices. A violation is a VerificationError (the statement is proven).
std::vector<CliqueRankRecord> clique_rank_check(
    const Graph& g, const std::vector<spectral::Idempotent>& idempotents,
    const CliqueSet& cliques);

struct CliqueProfile {
  int covering_radius = 0;
  std::vector<int> phi;              // phi_i for i < t (verified constant)
  std::vector<bool> phi_constant;
};

/// Covering radius and the per-distance clique-visibility profile of a
/// Delsarte clique. d_index = number of distinct eigenvalues minus one; the
/// radius must not exceed d_index - 1.
CliqueProfile clique_profile(const Graph& g, const std::vector<int>& c, int t,
                             int d_index);

struct CliqueCover {
  std::vector<std::vector<int>> lines;
  std::map<Edge, int> edge_assignment;  // edge -> index into lines
};

enum class GeometryStatus { kGeometric, kNotGeometric, kUnknown };

struct GeometryResult {
  GeometryStatus status = GeometryStatus::kNotGeometric;
  std::optional<CliqueCover> cover;
  std::string reason;
  int64_t nodes_used = 0;
  DelsarteBound bound;
  std::vector<std::vector<int>> delsarte_cliques;
};

/// Decides whether the edge set splits into Delsarte cliques, by exhaustive
/// deterministic exact-cover search over all Delsarte cliques. `node_budget`
/// bounds the number of branch nodes; exhausting it yields kUnknown, never
/// kNotGeometric.
GeometryResult geometric_decomposition(const Graph& g,
                                       const spectral::Idempotent& e_min,
                                       int64_t node_budget = 10000000);

/// Vertices = lines of the cover; two lines adjacent iff they share a vertex.
Graph dual_graph(const CliqueCover& cover, const Graph& g);

enum class SufficiencyVerdict { kGuaranteed, kInconclusive, kGuardsUnmet };

struct SufficiencyReport {
  SufficiencyVerdict verdict = SufficiencyVerdict::kGuardsUnmet;
  int omega = 0;
  double theta_min = 0.0;
  long long a1 = 0, c2 = 0;
  double threshold = 0.0;  // omega^4 * c2
  std::vector<std::string> unmet_guards;
};

/// Sufficient condition "a_1 > omega^4 c_2" under the guards: order >= 2,
/// diameter >= 2, omega >= 2 integral, smallest eigenvalue in [-omega, 1-omega).
SufficiencyReport geometric_sufficiency(const Graph& g, int omega, int order,
                                        double theta_min, long long a1, long long c2);

}  // namespace walkreg::cliques
