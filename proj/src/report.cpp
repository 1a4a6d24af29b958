#include "walkreg/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "walkreg/errors.hpp"
#include "walkreg/graph6.hpp"

namespace walkreg::report {

nlohmann::ordered_json json_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

namespace {

nlohmann::ordered_json json_order(std::optional<int> order) {
  if (!order) return nullptr;
  return *order;
}

nlohmann::ordered_json json_guards(const std::vector<std::string>& unmet) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : unmet) arr.push_back(s);
  return arr;
}

void check_cosines(const Graph& g, const exact::WalkAnalysis& walks,
                   const std::vector<spectral::Idempotent>& idems,
                   std::vector<CosineTable>& out) {
  if (!walks.order.order) return;
  const int t = *walks.order.order;
  const double k = static_cast<double>(*g.valency());
  const auto& in = walks.intersection;
  for (const auto& e : idems) {
    CosineTable tab;
    tab.theta = e.theta;
    tab.multiplicity = e.multiplicity;
    tab.u = spectral::cosine_sequence(g, e, t);
    if (t >= 1) {
      double expected = e.theta / k;
      if (std::abs(tab.u[1] - expected) > 1e-9 * std::max(1.0, std::abs(expected)))
        throw VerificationError("first cosine disagrees with theta/k for theta " +
                                std::to_string(e.theta));
    }
    for (int j = 1; j + 1 <= t; ++j) {
      double lhs = in.c[j] * tab.u[j - 1] + in.a[j] * tab.u[j] + in.b[j] * tab.u[j + 1];
      double r = std::abs(lhs - e.theta * tab.u[j]);
      tab.max_recurrence_residual = std::max(tab.max_recurrence_residual, r);
      if (r > 1e-8)
        throw VerificationError(
            "three-term cosine recurrence residual " + std::to_string(r) +
            " at distance " + std::to_string(j) + " for theta " +
            std::to_string(e.theta));
    }
    out.push_back(std::move(tab));
  }
}

}  // namespace

AnalysisResult analyze(const Graph& g, const Options& opt) {
  if (g.n() > opt.max_n)
    throw InputError("graph has " + std::to_string(g.n()) +
                     " vertices, above the --max-n limit of " +
                     std::to_string(opt.max_n));
  AnalysisResult res;
  res.graph = g;
  res.metrics = metrics(g);

  if (!res.metrics.connected || !res.metrics.valency) {
    res.analyzed = false;
    res.skip_reason = !res.metrics.connected ? "graph is disconnected"
                                             : "graph is not regular";
    return res;
  }
  res.analyzed = true;
  const int k = *res.metrics.valency;

  // Exact route first; its d gates the floating decomposition.
  res.walks = exact::analyze_walks(g);
  auto dec = spectral::decompose(g, opt.tol);
  res.spectrum = dec.spectrum;
  if (res.spectrum.d() != res.walks.order.d)
    throw VerificationError(
        "eigenvalue cluster count " + std::to_string(res.spectrum.d() + 1) +
            " disagrees with the exact count " + std::to_string(res.walks.order.d + 1) +
            "; tighten the grouping tolerance",
        "{\"graph6\":\"" + encode_graph6(g) + "\"}");

  auto idems = spectral::minimal_idempotents(dec, opt.tol);
  res.spectral_order = spectral::wr_order(dec, opt.tol);
  if (res.spectral_order != res.walks.order.order)
    throw VerificationError(
        "idempotent-constancy order disagrees with the exact walk-count order",
        "{\"graph6\":\"" + encode_graph6(g) + "\"}");

  // Walk-regular graphs have constant idempotent diagonals m/n.
  if (res.walks.order.order) {
    for (const auto& e : idems) {
      double expect = static_cast<double>(e.multiplicity) / g.n();
      if (!e.alphas[0].constant ||
          std::abs(e.alphas[0].value - expect) > 1e-8 * std::max(1.0, expect))
        throw VerificationError("idempotent diagonal differs from m/n");
    }
    // Distance-regular exactly when the order reaches the diameter.
    bool reaches = *res.walks.order.order == g.distance_data().diameter;
    if (reaches != res.walks.drg.distance_regular)
      throw VerificationError(
          "distance-regularity flag disagrees with order == diameter",
          "{\"graph6\":\"" + encode_graph6(g) + "\"}");
  }

  check_cosines(g, res.walks, idems, res.cosines);
  res.bound_report = bounds::evaluate_bounds(g, res.spectrum, res.walks, res.metrics);

  // Clique side. The Delsarte bound needs a 1-walk-regular graph.
  auto cliqueset = cliques::maximal_cliques(g);
  res.clique_summary.clique_count = static_cast<int>(cliqueset.cliques.size());
  for (const auto& c : cliqueset.cliques)
    res.clique_summary.max_clique_size =
        std::max(res.clique_summary.max_clique_size, static_cast<int>(c.size()));

  bool one_wr = res.walks.order.order && *res.walks.order.order >= 1;
  if (one_wr && res.spectrum.d() >= 1) {
    double theta_min = res.spectrum.eigenvalues.back().value;
    res.clique_summary.bound = cliques::delsarte_bound(k, theta_min);
    if (res.clique_summary.max_clique_size >
        res.clique_summary.bound.bound + 1e-6)
      throw VerificationError(
          "maximal clique exceeds the Delsarte bound",
          "{\"graph6\":\"" + encode_graph6(g) + "\"}");
    const auto& e_min = idems.back();
    for (const auto& c : cliqueset.cliques)
      if (res.clique_summary.bound.integer_candidate &&
          static_cast<int>(c.size()) == *res.clique_summary.bound.integer_candidate &&
          cliques::is_delsarte_clique(g, e_min, c))
        ++res.clique_summary.delsarte_clique_count;
    res.clique_summary.rank_records = cliques::clique_rank_check(g, idems, cliqueset);

    if (opt.with_geometry) {
      res.geometry.evaluated = true;
      res.geometry.result = cliques::geometric_decomposition(g, e_min, opt.node_budget);
      if (res.geometry.result.cover) {
        res.geometry.dual_graph6 =
            encode_graph6(cliques::dual_graph(*res.geometry.result.cover, g));
        for (const auto& line : res.geometry.result.cover->lines)
          res.geometry.line_profiles.push_back(cliques::clique_profile(
              g, line, *res.walks.order.order, res.spectrum.d()));
      }
      res.geometry.sufficiency = cliques::geometric_sufficiency(
          g, static_cast<int>(std::ceil(-res.spectrum.eigenvalues.back().value - 1e-9)),
          *res.walks.order.order, res.spectrum.eigenvalues.back().value,
          res.walks.intersection.t >= 1 ? res.walks.intersection.a[1] : 0,
          res.walks.intersection.t >= 2 ? res.walks.intersection.c[2] : 0);
      if (res.geometry.sufficiency.verdict == cliques::SufficiencyVerdict::kGuaranteed &&
          res.geometry.result.status != cliques::GeometryStatus::kGeometric)
        throw VerificationError(
            "sufficient condition for geometricity met but no cover found",
            "{\"graph6\":\"" + encode_graph6(g) + "\"}");
    }
  }
  return res;
}

namespace {

nlohmann::ordered_json metrics_json(const GraphMetrics& m) {
  nlohmann::ordered_json j;
  j["connected"] = m.connected;
  j["regular"] = m.valency.has_value();
  if (m.valency) j["valency"] = *m.valency;
  j["bipartite"] = m.bipartite;
  j["girth"] = m.girth ? nlohmann::ordered_json(*m.girth) : nullptr;
  j["oddGirth"] = m.odd_girth ? nlohmann::ordered_json(*m.odd_girth) : nullptr;
  j["completeMultipartite"] = m.complete_multipartite;
  return j;
}

nlohmann::ordered_json walks_json(const exact::WalkAnalysis& w) {
  nlohmann::ordered_json j;
  j["order"] = json_order(w.order.order);
  j["d"] = w.order.d;
  j["diameter"] = w.order.diameter;
  if (w.order.witness) {
    nlohmann::ordered_json wj;
    wj["quantity"] = w.order.witness->quantity;
    wj["distance"] = w.order.witness->distance;
    wj["pair"] = {w.order.witness->x, w.order.witness->y};
    wj["referencePair"] = {w.order.witness->x2, w.order.witness->y2};
    j["witness"] = wj;
  }
  if (w.order.order) {
    nlohmann::ordered_json in;
    in["a"] = w.intersection.a;
    in["b"] = w.intersection.b;
    in["c"] = w.intersection.c;
    j["intersection"] = in;
    auto triples = nlohmann::ordered_json::array();
    for (int h = 0; h <= w.triples.t; ++h) {
      auto hh = nlohmann::ordered_json::array();
      for (int i = 0; i <= w.triples.t; ++i) {
        auto ii = nlohmann::ordered_json::array();
        for (int jj = 0; jj <= w.triples.t; ++jj) ii.push_back(w.triples.at(h, i, jj));
        hh.push_back(ii);
      }
      triples.push_back(hh);
    }
    j["tripleNumbers"] = triples;
  }
  j["distanceRegular"] = w.drg.distance_regular;
  if (w.drg.distance_regular) {
    nlohmann::ordered_json arr;
    arr["b"] = w.drg.b;
    arr["c"] = w.drg.c;
    j["intersectionArray"] = arr;
  }
  return j;
}

nlohmann::ordered_json bounds_json(const bounds::BoundsReport& b) {
  nlohmann::ordered_json j;
  auto godsil = nlohmann::ordered_json::array();
  for (const auto& r : b.godsil) {
    nlohmann::ordered_json rj;
    rj["theta"] = json_real(r.theta);
    rj["multiplicity"] = r.multiplicity;
    rj["bound"] = r.bound;
    rj["applicable"] = r.applicable;
    rj["unmetGuards"] = json_guards(r.unmet_guards);
    rj["pass"] = r.pass;
    godsil.push_back(rj);
  }
  j["godsil"] = godsil;

  nlohmann::ordered_json tw;
  tw["applicable"] = b.terwilliger.applicable;
  tw["asserted"] = b.terwilliger.asserted;
  if (b.terwilliger.applicable) {
    tw["lowerBound"] = json_real(b.terwilliger.lower_bound);
    tw["upperBound"] = json_real(b.terwilliger.upper_bound);
    tw["lowerOk"] = b.terwilliger.lower_ok;
    tw["upperOk"] = b.terwilliger.upper_ok;
    double eta_min = 0.0, eta_second = 0.0;
    bool first = true;
    for (const auto& v : b.terwilliger.vertices) {
      if (first || v.eta_min < eta_min) eta_min = v.eta_min;
      if (first || v.eta_second > eta_second) eta_second = v.eta_second;
      first = false;
    }
    tw["minLocalEigenvalue"] = json_real(eta_min);
    tw["maxSecondLocalEigenvalue"] = json_real(eta_second);
  }
  j["terwilliger"] = tw;

  auto lm = nlohmann::ordered_json::array();
  for (const auto& r : b.local_multiplicity) {
    nlohmann::ordered_json rj;
    rj["theta"] = json_real(r.theta);
    rj["multiplicity"] = r.multiplicity;
    rj["applicable"] = r.applicable;
    rj["unmetGuards"] = json_guards(r.unmet_guards);
    if (r.applicable) {
      rj["thetaExtremal"] = r.theta_extremal;
      rj["localEigenvalue"] = json_real(r.b_value);
      rj["requiredMultiplicity"] = r.required_multiplicity;
      rj["observedMinMultiplicity"] = r.observed_min_multiplicity;
      rj["pass"] = r.pass;
    }
    lm.push_back(rj);
  }
  j["localMultiplicity"] = lm;

  nlohmann::ordered_json fd;
  fd["applicable"] = b.fundamental.applicable;
  if (b.fundamental.applicable) {
    fd["lhs"] = json_real(b.fundamental.lhs);
    fd["rhs"] = json_real(b.fundamental.rhs);
    fd["gap"] = json_real(b.fundamental.gap);
    fd["equality"] = b.fundamental.equality;
    if (b.fundamental.equality) {
      fd["branch"] = b.fundamental.equality_branch;
      fd["analysisOk"] = b.fundamental.equality_analysis_ok;
      if (b.fundamental.local_srg)
        fd["localSrg"] = {(*b.fundamental.local_srg)[0], (*b.fundamental.local_srg)[1],
                          (*b.fundamental.local_srg)[2], (*b.fundamental.local_srg)[3]};
    }
  }
  j["fundamental"] = fd;

  auto th = nlohmann::ordered_json::array();
  for (const auto& r : b.theorems) {
    nlohmann::ordered_json rj;
    rj["name"] = r.name;
    rj["applicable"] = r.applicable;
    rj["unmetGuards"] = json_guards(r.unmet_guards);
    rj["pass"] = r.pass;
    if (!r.detail.empty()) rj["detail"] = r.detail;
    th.push_back(rj);
  }
  j["multiplicityChecks"] = th;

  nlohmann::ordered_json fin;
  fin["applicable"] = b.finiteness.applicable;
  fin["unmetGuards"] = json_guards(b.finiteness.unmet_guards);
  if (b.finiteness.applicable) {
    fin["omega"] = b.finiteness.omega;
    fin["epsilon"] = json_real(b.finiteness.epsilon);
    fin["vertexBound"] = json_real(b.finiteness.vertex_bound);
    fin["valencyBound"] = json_real(b.finiteness.valency_bound);
    fin["vertexOk"] = b.finiteness.vertex_ok;
    fin["valencyOk"] = b.finiteness.valency_ok;
  }
  j["finiteness"] = fin;
  return j;
}

nlohmann::ordered_json geometry_json(const GeometrySummary& g) {
  nlohmann::ordered_json j;
  if (!g.evaluated) {
    j["status"] = "skipped";
    return j;
  }
  switch (g.result.status) {
    case cliques::GeometryStatus::kGeometric: j["status"] = "geometric"; break;
    case cliques::GeometryStatus::kNotGeometric: j["status"] = "not_geometric"; break;
    case cliques::GeometryStatus::kUnknown: j["status"] = "unknown"; break;
  }
  if (!g.result.reason.empty()) j["reason"] = g.result.reason;
  j["delsarteCliqueCount"] = static_cast<int>(g.result.delsarte_cliques.size());
  j["nodesUsed"] = g.result.nodes_used;
  if (g.result.cover) {
    auto lines = nlohmann::ordered_json::array();
    for (const auto& line : g.result.cover->lines) lines.push_back(line);
    j["cover"] = lines;
    auto assign = nlohmann::ordered_json::array();
    for (const auto& [edge, li] : g.result.cover->edge_assignment)
      assign.push_back({edge.first, edge.second, li});
    j["edgeAssignment"] = assign;
    if (g.dual_graph6) j["dualGraph6"] = *g.dual_graph6;
    auto profiles = nlohmann::ordered_json::array();
    for (const auto& p : g.line_profiles) {
      nlohmann::ordered_json pj;
      pj["coveringRadius"] = p.covering_radius;
      pj["phi"] = p.phi;
      profiles.push_back(pj);
    }
    j["lineProfiles"] = profiles;
  }
  nlohmann::ordered_json sj;
  switch (g.sufficiency.verdict) {
    case cliques::SufficiencyVerdict::kGuaranteed: sj["verdict"] = "geometric guaranteed"; break;
    case cliques::SufficiencyVerdict::kInconclusive: sj["verdict"] = "inconclusive"; break;
    case cliques::SufficiencyVerdict::kGuardsUnmet: sj["verdict"] = "guards unmet"; break;
  }
  sj["omega"] = g.sufficiency.omega;
  sj["a1"] = g.sufficiency.a1;
  sj["c2"] = g.sufficiency.c2;
  sj["threshold"] = json_real(g.sufficiency.threshold);
  sj["unmetGuards"] = json_guards(g.sufficiency.unmet_guards);
  j["sufficiency"] = sj;
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const AnalysisResult& res, const Options& opt) {
  nlohmann::ordered_json j;
  j["schema"] = "walkreg-report/1";
  nlohmann::ordered_json input;
  input["n"] = res.graph.n();
  input["edges"] = res.graph.edge_count();
  input["graph6"] = encode_graph6(res.graph);
  if (!opt.source.empty()) input["source"] = opt.source;
  if (!opt.provenance.empty()) input["construction"] = opt.provenance;
  j["input"] = input;
  j["metrics"] = metrics_json(res.metrics);
  j["analyzed"] = res.analyzed;
  if (!res.analyzed) {
    j["skipped"] = res.skip_reason;
    return j;
  }
  j["walk"] = walks_json(res.walks);
  j["spectralOrder"] = json_order(res.spectral_order);
  auto spec = nlohmann::ordered_json::array();
  for (const auto& ev : res.spectrum.eigenvalues) {
    nlohmann::ordered_json ej;
    ej["value"] = json_real(ev.value);
    ej["multiplicity"] = ev.multiplicity;
    spec.push_back(ej);
  }
  j["spectrum"] = spec;
  auto cos = nlohmann::ordered_json::array();
  for (const auto& c : res.cosines) {
    nlohmann::ordered_json cj;
    cj["theta"] = json_real(c.theta);
    cj["multiplicity"] = c.multiplicity;
    auto useq = nlohmann::ordered_json::array();
    for (double u : c.u) useq.push_back(json_real(u));
    cj["u"] = useq;
    cj["maxRecurrenceResidual"] = json_real(c.max_recurrence_residual);
    cos.push_back(cj);
  }
  j["cosines"] = cos;
  j["bounds"] = bounds_json(res.bound_report);
  nlohmann::ordered_json cl;
  cl["count"] = res.clique_summary.clique_count;
  cl["maxSize"] = res.clique_summary.max_clique_size;
  if (res.clique_summary.bound.bound != 0.0) {
    cl["delsarteBound"] = json_real(res.clique_summary.bound.bound);
    cl["integerCandidate"] = res.clique_summary.bound.integer_candidate
                                 ? nlohmann::ordered_json(
                                       *res.clique_summary.bound.integer_candidate)
                                 : nullptr;
    cl["delsarteCliques"] = res.clique_summary.delsarte_clique_count;
  }
  auto ranks = nlohmann::ordered_json::array();
  for (const auto& r : res.clique_summary.rank_records) {
    nlohmann::ordered_json rj;
    rj["theta"] = json_real(r.theta);
    rj["rank"] = r.rank;
    rj["maxClique"] = r.max_clique;
    rj["tight"] = r.tight;
    ranks.push_back(rj);
  }
  cl["rankRecords"] = ranks;
  j["cliques"] = cl;
  j["geometry"] = geometry_json(res.geometry);
  return j;
}

std::string analyze_json(const Graph& g, const Options& opt) {
  return to_json(analyze(g, opt), opt).dump(2) + "\n";
}

}  // namespace walkreg::report
