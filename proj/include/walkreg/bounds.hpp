#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "walkreg/exact_walk.hpp"
#include "walkreg/graph.hpp"
#include "walkreg/spectral.hpp"

namespace walkreg::bounds {

/// Eigenvalue-multiplicity bound on the valency, k <= (m+2)(m-1)/2, for every
/// eigenvalue theta != +-k with multiplicity m >= 2. Applies to 2-walk-regular,
/// non-complete-multipartite graphs with k >= 3; a violation under the guards
/// is a VerificationError.
struct GodsilRecord {
  double theta = 0.0;
  int multiplicity = 0;
  long long bound = 0;  // (m+2)(m-1)/2
  bool applicable = false;
  std::vector<std::string> unmet_guards;
  bool pass = true;
};

std::vector<GodsilRecord> godsil_bound(const Graph& g,
                                       const spectral::Spectrum& spec,
                                       std::optional<int> order,
                                       const GraphMetrics& m);

/// Two-sided bound on the non-principal local eigenvalues:
/// eta_min >= -1 - b1/(theta_1+1) and eta_1 <= -1 - b1/(theta_d+1).
/// Asserted for order >= 2; evaluated and reported otherwise.
struct TerwilligerVertexRecord {
  int vertex = 0;
  double eta_second = 0.0;  // second largest local eigenvalue
  double eta_min = 0.0;
  bool lower_ok = true;
  bool upper_ok = true;
};

struct TerwilligerReport {
  bool applicable = false;           // b_1 defined, theta_1 != -1
  bool asserted = false;             // order >= 2
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  bool lower_ok = true;
  bool upper_ok = true;
  std::vector<TerwilligerVertexRecord> vertices;
};

TerwilligerReport terwilliger_local_bounds(const Graph& g,
                                           const spectral::Spectrum& spec,
                                           std::optional<int> order,
                                           const exact::IntersectionNumbers& in);

/// For every eigenvalue theta != k with multiplicity m < k (on a graph of
/// order >= 2): theta must be theta_1 or theta_d, and b = -1 - b1/(theta+1)
/// must be a local eigenvalue with multiplicity >= k - m + [b == a_1],
/// at every vertex.
struct LocalMultiplicityRecord {
  double theta = 0.0;
  int multiplicity = 0;
  bool applicable = false;
  std::vector<std::string> unmet_guards;
  bool theta_extremal = false;
  double b_value = 0.0;
  int required_multiplicity = 0;
  int observed_min_multiplicity = 0;
  bool pass = true;
};

std::vector<LocalMultiplicityRecord> local_multiplicity_check(
    const Graph& g, const spectral::Spectrum& spec, std::optional<int> order,
    const exact::IntersectionNumbers& in);

/// (theta_1 + k/(a1+1)) (theta_d + k/(a1+1)) >= -k a1 b1 / (a1+1)^2, with the
/// equality case characterized by locally strongly regular structure (a1 > 0)
/// or bipartiteness (a1 = 0).
struct FundamentalRecord {
  bool applicable = false;
  double lhs = 0.0, rhs = 0.0, gap = 0.0;
  bool equality = false;
  std::string equality_branch;  // "locally strongly regular" | "bipartite" | ""
  bool equality_analysis_ok = true;
  std::optional<std::array<long long, 4>> local_srg;  // (v, k, lambda, mu)
};

FundamentalRecord fundamental_bound(const Graph& g, const spectral::Spectrum& spec,
                                    std::optional<int> order,
                                    const exact::IntersectionNumbers& in,
                                    const GraphMetrics& m);

/// Named implication checks tying small multiplicities, b_t = 1, and
/// distance-regularity together. Violations abort with a witness.
struct TheoremRecord {
  std::string name;
  bool applicable = false;
  std::vector<std::string> unmet_guards;
  bool pass = true;
  std::string detail;
};

std::vector<TheoremRecord> multiplicity_theorems(
    const Graph& g, const spectral::Spectrum& spec, std::optional<int> order,
    const exact::IntersectionNumbers& in, const exact::DistanceRegularity& drg,
    const GraphMetrics& m);

/// Size bounds |V| < (2w^2/eps)^D D k and k < D^2 (2w^2/eps)^{2D+4}, evaluated
/// with w = ceil(-theta_d) and eps = min(c2/max(a1,1), 1-1e-9). Asserted when
/// the guards (order >= 2, D >= 3, w >= 2) hold.
struct FinitenessRecord {
  bool applicable = false;
  std::vector<std::string> unmet_guards;
  int omega = 0;
  double epsilon = 0.0;
  double vertex_bound = 0.0;
  double valency_bound = 0.0;
  bool vertex_ok = true;
  bool valency_ok = true;
};

FinitenessRecord finiteness_bounds(const Graph& g, const spectral::Spectrum& spec,
                                   std::optional<int> order,
                                   const exact::IntersectionNumbers& in);

/// Local adjacency spectrum of the subgraph induced on the neighbors of x,
/// descending.
std::vector<double> local_spectrum(const Graph& g, int x);

struct BoundsReport {
  std::vector<GodsilRecord> godsil;
  TerwilligerReport terwilliger;
  std::vector<LocalMultiplicityRecord> local_multiplicity;
  FundamentalRecord fundamental;
  std::vector<TheoremRecord> theorems;
  FinitenessRecord finiteness;
};

BoundsReport evaluate_bounds(const Graph& g, const spectral::Spectrum& spec,
                             const exact::WalkAnalysis& walks,
                             const GraphMetrics& m);

}  // namespace walkreg::bounds
