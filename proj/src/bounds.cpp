#include "walkreg/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "walkreg/errors.hpp"
#include "walkreg/graph6.hpp"
#include "walkreg/util.hpp"

namespace walkreg::bounds {

namespace {

constexpr double kEigTol = 1e-6;   // eigenvalue matching
constexpr double kSlack = 1e-8;    // inequality slack

double valency_of(const Graph& g) {
  auto k = g.valency();
  return k ? static_cast<double>(*k) : -1.0;
}

bool near(double x, double y, double tol = kEigTol) { return std::abs(x - y) <= tol; }

std::string witness(const Graph& g, const std::string& detail) {
  return "{\"graph6\":\"" + encode_graph6(g) + "\",\"detail\":\"" + detail + "\"}";
}

std::vector<std::vector<double>> all_local_spectra(const Graph& g) {
  std::vector<std::vector<double>> out(g.n());
  parallel_for(g.n(), [&](int x) { out[x] = local_spectrum(g, x); });
  return out;
}

}  // namespace

std::vector<double> local_spectrum(const Graph& g, int x) {
  auto [sub, map] = local_graph(g, x);
  const int m = sub.n();
  if (m == 0) return {};
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (auto [u, v] : sub.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  std::vector<double> eta(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + m);
  std::reverse(eta.begin(), eta.end());
  return eta;
}

std::vector<GodsilRecord> godsil_bound(const Graph& g,
                                       const spectral::Spectrum& spec,
                                       std::optional<int> order,
                                       const GraphMetrics& m) {
  const double k = valency_of(g);
  std::vector<std::string> guard_fail;
  if (!order || *order < 2) guard_fail.push_back("2-walk-regular");
  if (m.complete_multipartite) guard_fail.push_back("not complete multipartite");
  if (k < 3) guard_fail.push_back("valency >= 3");

  std::vector<GodsilRecord> out;
  for (const auto& ev : spec.eigenvalues) {
    if (near(ev.value, k, 1e-9 * std::max(1.0, k)) ||
        near(ev.value, -k, 1e-9 * std::max(1.0, k)))
      continue;
    if (ev.multiplicity < 2) continue;
    GodsilRecord rec;
    rec.theta = ev.value;
    rec.multiplicity = ev.multiplicity;
    long long mm = ev.multiplicity;
    rec.bound = (mm + 2) * (mm - 1) / 2;
    rec.unmet_guards = guard_fail;
    rec.applicable = guard_fail.empty();
    rec.pass = !rec.applicable || static_cast<long long>(k) <= rec.bound;
    if (!rec.pass)
      throw VerificationError(
          "valency bound violated: k=" + std::to_string(static_cast<long long>(k)) +
              " > (m+2)(m-1)/2 with m=" + std::to_string(ev.multiplicity),
          witness(g, "godsil"));
    out.push_back(rec);
  }
  return out;
}

TerwilligerReport terwilliger_local_bounds(const Graph& g,
                                           const spectral::Spectrum& spec,
                                           std::optional<int> order,
                                           const exact::IntersectionNumbers& in) {
  TerwilligerReport rep;
  if (!order || *order < 1 || in.t < 1 || spec.d() < 1) return rep;
  double theta1 = spec.eigenvalues[1].value;
  double thetad = spec.eigenvalues.back().value;
  if (near(theta1, -1.0, 1e-9) || near(thetad, -1.0, 1e-9)) return rep;  // complete graph
  double b1 = in.b[1];
  rep.applicable = true;
  rep.asserted = *order >= 2;
  rep.lower_bound = -1.0 - b1 / (theta1 + 1.0);
  rep.upper_bound = -1.0 - b1 / (thetad + 1.0);

  auto spectra = all_local_spectra(g);
  for (int x = 0; x < g.n(); ++x) {
    const auto& eta = spectra[x];
    if (eta.size() < 2) continue;  // valency < 2: no non-principal eigenvalue
    TerwilligerVertexRecord v;
    v.vertex = x;
    v.eta_second = eta[1];
    v.eta_min = eta.back();
    v.lower_ok = v.eta_min >= rep.lower_bound - kSlack;
    v.upper_ok = v.eta_second <= rep.upper_bound + kSlack;
    rep.lower_ok = rep.lower_ok && v.lower_ok;
    rep.upper_ok = rep.upper_ok && v.upper_ok;
    rep.vertices.push_back(v);
  }
  if (rep.asserted && (!rep.lower_ok || !rep.upper_ok))
    throw VerificationError("local eigenvalue bound violated on a 2-walk-regular graph",
                            witness(g, "terwilliger"));
  return rep;
}

std::vector<LocalMultiplicityRecord> local_multiplicity_check(
    const Graph& g, const spectral::Spectrum& spec, std::optional<int> order,
    const exact::IntersectionNumbers& in) {
  std::vector<LocalMultiplicityRecord> out;
  const double k = valency_of(g);
  bool order_ok = order && *order >= 2 && in.t >= 1;
  auto spectra_ready = false;
  std::vector<std::vector<double>> spectra;

  for (size_t c = 0; c < spec.eigenvalues.size(); ++c) {
    const auto& ev = spec.eigenvalues[c];
    if (near(ev.value, k, 1e-9 * std::max(1.0, k))) continue;
    LocalMultiplicityRecord rec;
    rec.theta = ev.value;
    rec.multiplicity = ev.multiplicity;
    if (!order_ok) rec.unmet_guards.push_back("2-walk-regular");
    if (ev.multiplicity >= k) rec.unmet_guards.push_back("multiplicity < valency");
    rec.applicable = rec.unmet_guards.empty();
    if (!rec.applicable) {
      out.push_back(rec);
      continue;
    }
    if (near(ev.value, -1.0, 1e-9))
      throw VerificationError("eigenvalue -1 with multiplicity below the valency",
                              witness(g, "local multiplicity"));

    rec.theta_extremal = (c == 1) || (c + 1 == spec.eigenvalues.size());
    double b1 = in.b[1];
    double a1 = in.a[1];
    rec.b_value = -1.0 - b1 / (ev.value + 1.0);
    rec.required_multiplicity = static_cast<int>(k) - ev.multiplicity +
                                (near(rec.b_value, a1) ? 1 : 0);
    if (!rec.theta_extremal)
      throw VerificationError(
          "small-multiplicity eigenvalue is neither theta_1 nor theta_d",
          witness(g, "local multiplicity"));

    auto spectra_local = [&]() -> const std::vector<std::vector<double>>& {
      if (!spectra_ready) {
        spectra = all_local_spectra(g);
        spectra_ready = true;
      }
      return spectra;
    };
    rec.observed_min_multiplicity = g.n() > 0 ? 1 << 20 : 0;
    for (int x = 0; x < g.n(); ++x) {
      int count = 0;
      for (double eta : spectra_local()[x])
        if (near(eta, rec.b_value)) ++count;
      rec.observed_min_multiplicity = std::min(rec.observed_min_multiplicity, count);
    }
    rec.pass = rec.observed_min_multiplicity >= rec.required_multiplicity;
    if (!rec.pass)
      throw VerificationError(
          "local eigenvalue " + std::to_string(rec.b_value) +
              " has multiplicity " + std::to_string(rec.observed_min_multiplicity) +
              " < required " + std::to_string(rec.required_multiplicity),
          witness(g, "local multiplicity"));
    out.push_back(rec);
  }
  return out;
}

namespace {

// Strongly regular check by direct counting; local graphs here are small.
std::optional<std::array<long long, 4>> srg_parameters_of(const Graph& g) {
  const int n = g.n();
  auto k = g.valency();
  if (!k || n < 2) return std::nullopt;
  long long lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const auto& nu = g.neighbors(u);
      long long common = 0;
      for (int w : nu)
        if (w != v && g.adjacent(w, v)) ++common;
      if (g.adjacent(u, v)) {
        if (lambda == -1) lambda = common;
        else if (lambda != common) return std::nullopt;
      } else {
        if (mu == -1) mu = common;
        else if (mu != common) return std::nullopt;
      }
    }
  if (lambda == -1) lambda = 0;
  if (mu == -1) mu = 0;
  return std::array<long long, 4>{n, *k, lambda, mu};
}

}  // namespace

FundamentalRecord fundamental_bound(const Graph& g, const spectral::Spectrum& spec,
                                    std::optional<int> order,
                                    const exact::IntersectionNumbers& in,
                                    const GraphMetrics& m) {
  FundamentalRecord rec;
  if (!order || *order < 2 || spec.d() < 1) return rec;
  rec.applicable = true;
  const double k = valency_of(g);
  const double theta1 = spec.eigenvalues[1].value;
  const double thetad = spec.eigenvalues.back().value;
  const double a1 = in.a[1];
  const double b1 = in.b[1];
  rec.lhs = (theta1 + k / (a1 + 1.0)) * (thetad + k / (a1 + 1.0));
  rec.rhs = -k * a1 * b1 / ((a1 + 1.0) * (a1 + 1.0));
  rec.gap = rec.lhs - rec.rhs;
  double tol = kSlack * (1.0 + std::abs(rec.rhs));
  if (rec.gap < -tol)
    throw VerificationError("fundamental bound violated (gap " +
                                std::to_string(rec.gap) + ")",
                            witness(g, "fundamental bound"));
  rec.equality = std::abs(rec.gap) <= tol;
  if (!rec.equality) return rec;

  if (in.a[1] == 0) {
    rec.equality_branch = "bipartite";
    rec.equality_analysis_ok = m.bipartite;
  } else {
    rec.equality_branch = "locally strongly regular";
    double sigma = -1.0 - b1 / (thetad + 1.0);
    double tau = -1.0 - b1 / (theta1 + 1.0);
    for (int x = 0; x < g.n() && rec.equality_analysis_ok; ++x) {
      auto [sub, map] = local_graph(g, x);
      auto srg = srg_parameters_of(sub);
      if (!srg || (*srg)[1] != in.a[1]) {
        rec.equality_analysis_ok = false;
        break;
      }
      rec.local_srg = srg;
      for (double eta : local_spectrum(g, x))
        if (!near(eta, in.a[1]) && !near(eta, sigma) && !near(eta, tau)) {
          rec.equality_analysis_ok = false;
          break;
        }
    }
  }
  if (!rec.equality_analysis_ok)
    throw VerificationError(
        "fundamental-bound equality without the matching local structure",
        witness(g, "fundamental bound equality"));
  return rec;
}

std::vector<TheoremRecord> multiplicity_theorems(
    const Graph& g, const spectral::Spectrum& spec, std::optional<int> order,
    const exact::IntersectionNumbers& in, const exact::DistanceRegularity& drg,
    const GraphMetrics& m) {
  std::vector<TheoremRecord> out;
  const double k = valency_of(g);
  const int D = g.distance_data().diameter;
  auto nontrivial = [&](const spectral::EigenvalueGroup& ev) {
    return !near(ev.value, k, 1e-9 * std::max(1.0, k)) &&
           !near(ev.value, -k, 1e-9 * std::max(1.0, k));
  };

  {
    TheoremRecord rec;
    rec.name = "no multiplicity-1 eigenvalue away from +-k";
    rec.applicable = order && *order >= 1;
    if (!rec.applicable) rec.unmet_guards.push_back("1-walk-regular");
    if (rec.applicable)
      for (const auto& ev : spec.eigenvalues)
        if (nontrivial(ev) && ev.multiplicity == 1) {
          rec.pass = false;
          throw VerificationError(
              "1-walk-regular graph with a multiplicity-1 eigenvalue " +
                  std::to_string(ev.value),
              witness(g, rec.name));
        }
    out.push_back(rec);
  }

  {
    TheoremRecord rec;
    rec.name = "multiplicity <= t forces distance-regular";
    bool small = false;
    int mmin = 0;
    if (order && *order >= 2)
      for (const auto& ev : spec.eigenvalues)
        if (nontrivial(ev) && ev.multiplicity <= *order) {
          small = true;
          mmin = ev.multiplicity;
        }
    rec.applicable = small;
    if (!small) rec.unmet_guards.push_back("some theta != +-k with multiplicity <= t >= 2");
    if (small) {
      rec.detail = "multiplicity " + std::to_string(mmin);
      rec.pass = drg.distance_regular;
      if (!rec.pass)
        throw VerificationError(
            "small-multiplicity eigenvalue but graph is not distance-regular",
            witness(g, rec.name));
    }
    out.push_back(rec);
  }

  {
    TheoremRecord rec;
    rec.name = "small idempotent rank forces b_t = 1";
    rec.applicable = false;
    if (order && *order >= 2 && k >= 3) {
      for (int t = 2; t <= *order; ++t) {
        if (D <= t) continue;
        bool witness_mult = false;
        for (const auto& ev : spec.eigenvalues)
          if (nontrivial(ev) && ev.multiplicity <= t) witness_mult = true;
        if (!witness_mult) continue;
        rec.applicable = true;
        rec.detail += "t=" + std::to_string(t) + " ";
        if (in.b[t] != 1) {
          rec.pass = false;
          throw VerificationError("b_t != 1 despite a rank <= t idempotent (t=" +
                                      std::to_string(t) + ")",
                                  witness(g, rec.name));
        }
      }
    }
    if (!rec.applicable)
      rec.unmet_guards.push_back("t >= 2, D > t, valency >= 3, multiplicity <= t");
    out.push_back(rec);
  }

  {
    TheoremRecord rec;
    rec.name = "b_t = 1 forces distance-regular";
    rec.applicable = order && *order >= 1 && in.t >= *order && in.b[*order] == 1;
    if (!rec.applicable) rec.unmet_guards.push_back("b_t = 1 at t = order");
    if (rec.applicable) {
      rec.pass = drg.distance_regular;
      if (!rec.pass)
        throw VerificationError("b_t = 1 but the graph is not distance-regular",
                                witness(g, rec.name));
    }
    out.push_back(rec);
  }

  {
    TheoremRecord rec;
    rec.name = "multiplicity-3 classification";
    bool mult3 = false;
    for (const auto& ev : spec.eigenvalues)
      if (nontrivial(ev) && ev.multiplicity == 3) mult3 = true;
    if (!order || *order < 2) rec.unmet_guards.push_back("2-walk-regular");
    if (m.complete_multipartite) rec.unmet_guards.push_back("not complete multipartite");
    if (k < 3) rec.unmet_guards.push_back("valency >= 3");
    if (!mult3) rec.unmet_guards.push_back("some theta != +-k with multiplicity 3");
    rec.applicable = rec.unmet_guards.empty();
    if (rec.applicable) {
      bool cubic_branch = (k == 3) && in.t >= 2 && in.a[1] == 0 && in.a[2] == 0;
      bool drg_branch = false;
      if (drg.distance_regular) {
        const std::vector<std::pair<std::vector<int>, std::vector<int>>> known = {
            {{3, 2, 1}, {1, 2, 3}},              // cube
            {{3, 2, 1, 1, 1}, {1, 1, 1, 2, 3}},  // dodecahedron
            {{5, 2, 1}, {1, 2, 5}},              // icosahedron
        };
        for (const auto& [bb, cc] : known)
          if (drg.b == bb && drg.c == cc) drg_branch = true;
        rec.detail = drg_branch ? "distance-regular, known intersection array"
                                : "distance-regular, unexpected intersection array";
      } else {
        rec.detail = "cubic with a_1 = a_2 = 0";
      }
      rec.pass = cubic_branch || drg_branch;
      if (!rec.pass)
        throw VerificationError(
            "multiplicity-3 eigenvalue outside the classified cases",
            witness(g, rec.name));
    }
    out.push_back(rec);
  }

  return out;
}

FinitenessRecord finiteness_bounds(const Graph& g, const spectral::Spectrum& spec,
                                   std::optional<int> order,
                                   const exact::IntersectionNumbers& in) {
  FinitenessRecord rec;
  const int D = g.distance_data().diameter;
  const double k = valency_of(g);
  if (!order || *order < 2) rec.unmet_guards.push_back("2-walk-regular");
  if (D < 3) rec.unmet_guards.push_back("diameter >= 3");
  if (spec.d() < 1) rec.unmet_guards.push_back("at least two distinct eigenvalues");
  if (!rec.unmet_guards.empty()) return rec;

  rec.omega = static_cast<int>(std::ceil(-spec.eigenvalues.back().value - 1e-9));
  if (rec.omega < 2) {
    rec.unmet_guards.push_back("omega >= 2");
    return rec;
  }
  long long a1 = in.a[1], c2 = in.c[2];
  rec.epsilon = std::min(static_cast<double>(c2) / std::max<long long>(a1, 1),
                         1.0 - 1e-9);
  rec.applicable = true;
  double base = 2.0 * rec.omega * rec.omega / rec.epsilon;
  rec.vertex_bound = std::pow(base, D) * D * k;
  rec.valency_bound = static_cast<double>(D) * D * std::pow(base, 2 * D + 4);
  rec.vertex_ok = g.n() < rec.vertex_bound;
  rec.valency_ok = k < rec.valency_bound;
  if (!rec.vertex_ok || !rec.valency_ok)
    throw VerificationError("finiteness bound violated", witness(g, "finiteness"));
  return rec;
}

BoundsReport evaluate_bounds(const Graph& g, const spectral::Spectrum& spec,
                             const exact::WalkAnalysis& walks,
                             const GraphMetrics& m) {
  BoundsReport rep;
  auto order = walks.order.order;
  rep.godsil = godsil_bound(g, spec, order, m);
  rep.terwilliger = terwilliger_local_bounds(g, spec, order, walks.intersection);
  rep.local_multiplicity = local_multiplicity_check(g, spec, order, walks.intersection);
  rep.fundamental = fundamental_bound(g, spec, order, walks.intersection, m);
  rep.theorems = multiplicity_theorems(g, spec, order, walks.intersection,
                                       walks.drg, m);
  rep.finiteness = finiteness_bounds(g, spec, order, walks.intersection);
  return rep;
}

}  // namespace walkreg::bounds
