#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "corpus.hpp"
#include "walkreg/bounds.hpp"
#include "walkreg/catalog.hpp"
#include "walkreg/constructions.hpp"
#include "walkreg/errors.hpp"
#include "walkreg/report.hpp"

using namespace walkreg;
using doctest::Approx;

namespace {

struct Prepared {
  Graph g;
  GraphMetrics m;
  exact::WalkAnalysis walks;
  spectral::Spectrum spec;
};

Prepared prepare(const Graph& g) {
  Prepared p{g, metrics(g), exact::analyze_walks(g), spectral::spectrum(g)};
  return p;
}

}  // namespace

TEST_CASE("valency bound records") {
  auto pet = prepare(catalog("petersen"));
  auto recs = bounds::godsil_bound(pet.g, pet.spec, pet.walks.order.order, pet.m);
  REQUIRE(recs.size() == 2);
  // m = 5 -> bound 14, m = 4 -> bound 9; k = 3 passes both
  CHECK(recs[0].multiplicity == 5);
  CHECK(recs[0].bound == 14);
  CHECK(recs[0].applicable);
  CHECK(recs[0].pass);
  CHECK(recs[1].bound == 9);

  // the m = 3 bound is (3+2)(3-1)/2 = 5, and m = 2 gives 2
  auto ico = prepare(catalog("icosahedron"));
  auto irecs = bounds::godsil_bound(ico.g, ico.spec, ico.walks.order.order, ico.m);
  for (const auto& r : irecs)
    if (r.multiplicity == 3) CHECK(r.bound == 5);
  long long m2 = 2;
  CHECK((m2 + 2) * (m2 - 1) / 2 == 2);

  // complete multipartite guard: records stay inapplicable
  auto oct = prepare(catalog("octahedron"));
  auto orecs = bounds::godsil_bound(oct.g, oct.spec, oct.walks.order.order, oct.m);
  for (const auto& r : orecs) {
    CHECK_FALSE(r.applicable);
    CHECK(r.unmet_guards == std::vector<std::string>{"not complete multipartite"});
  }
}

TEST_CASE("local eigenvalue bounds: Petersen and icosahedron") {
  auto pet = prepare(catalog("petersen"));
  auto rep = bounds::terwilliger_local_bounds(pet.g, pet.spec, pet.walks.order.order,
                                              pet.walks.intersection);
  REQUIRE(rep.applicable);
  CHECK(rep.asserted);
  CHECK(rep.lower_bound == Approx(-2.0));  // -1 - 2/(1+1)
  CHECK(rep.upper_bound == Approx(1.0));   // -1 - 2/(-2+1)
  for (const auto& v : rep.vertices) {
    CHECK(v.eta_min == Approx(0.0));
    CHECK(v.eta_second == Approx(0.0));
  }

  auto ico = prepare(catalog("icosahedron"));
  auto irep = bounds::terwilliger_local_bounds(ico.g, ico.spec, ico.walks.order.order,
                                               ico.walks.intersection);
  double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(irep.lower_bound == Approx(-golden));
  // local pentagons meet the lower bound with equality
  for (const auto& v : irep.vertices) CHECK(v.eta_min == Approx(-golden));
  CHECK(irep.lower_ok);
  CHECK(irep.upper_ok);
}

TEST_CASE("local eigenvalue upper bound fails on the 2-coclique extension of L2(4)") {
  Graph ext = constructions::coclique_extension(catalog("rook", {4}), 2).graph;
  auto p = prepare(ext);
  REQUIRE(p.walks.order.order == 1);  // only 1-walk-regular: reported, not asserted
  auto rep = bounds::terwilliger_local_bounds(p.g, p.spec, p.walks.order.order,
                                              p.walks.intersection);
  REQUIRE(rep.applicable);
  CHECK_FALSE(rep.asserted);
  CHECK(rep.upper_bound == Approx(4.0 / 3.0));  // -1 - 7/(-4+1)
  CHECK_FALSE(rep.upper_ok);                    // eta_1 = a_1 = 4 > 4/3
  CHECK(rep.lower_ok);
  for (const auto& v : rep.vertices) CHECK(v.eta_second == Approx(4.0));
}

TEST_CASE("local multiplicity records") {
  // dodecahedron: every theta != k has multiplicity >= k = 3, guard unmet
  auto dod = prepare(catalog("dodecahedron"));
  auto recs = bounds::local_multiplicity_check(dod.g, dod.spec, dod.walks.order.order,
                                               dod.walks.intersection);
  for (const auto& r : recs) {
    CHECK_FALSE(r.applicable);
    CHECK(r.unmet_guards ==
          std::vector<std::string>{"multiplicity < valency"});
  }

  // icosahedron: theta = +-sqrt5 with m = 3 < k = 5 forces a local eigenvalue
  auto ico = prepare(catalog("icosahedron"));
  auto irecs = bounds::local_multiplicity_check(ico.g, ico.spec, ico.walks.order.order,
                                                ico.walks.intersection);
  int applicable = 0;
  for (const auto& r : irecs)
    if (r.applicable) {
      ++applicable;
      CHECK(r.multiplicity == 3);
      CHECK(r.theta_extremal);
      CHECK(r.required_multiplicity == 2);
      CHECK(r.observed_min_multiplicity >= 2);
      CHECK(r.pass);
      double b = -1.0 - 2.0 / (r.theta + 1.0);
      CHECK(r.b_value == Approx(b));
    }
  CHECK(applicable == 2);

  // Petersen: theta = -2 has m = 4 > k = 3, not applicable
  auto pet = prepare(catalog("petersen"));
  auto precs = bounds::local_multiplicity_check(pet.g, pet.spec, pet.walks.order.order,
                                                pet.walks.intersection);
  for (const auto& r : precs) CHECK_FALSE(r.applicable);
}

TEST_CASE("fundamental bound: equality and strict cases") {
  auto ico = prepare(catalog("icosahedron"));
  auto irec = bounds::fundamental_bound(ico.g, ico.spec, ico.walks.order.order,
                                        ico.walks.intersection, ico.m);
  REQUIRE(irec.applicable);
  CHECK(irec.lhs == Approx(-20.0 / 9.0).epsilon(1e-12));
  CHECK(irec.rhs == Approx(-20.0 / 9.0).epsilon(1e-12));
  CHECK(std::abs(irec.gap) < 1e-9);
  REQUIRE(irec.equality);
  CHECK(irec.equality_branch == "locally strongly regular");
  CHECK(irec.equality_analysis_ok);
  REQUIRE(irec.local_srg.has_value());
  CHECK(*irec.local_srg == std::array<long long, 4>{5, 2, 0, 1});

  auto cube = prepare(catalog("hypercube", {3}));
  auto crec = bounds::fundamental_bound(cube.g, cube.spec, cube.walks.order.order,
                                        cube.walks.intersection, cube.m);
  REQUIRE(crec.equality);
  CHECK(crec.lhs == Approx(0.0));
  CHECK(crec.rhs == Approx(0.0));
  CHECK(crec.equality_branch == "bipartite");
  CHECK(crec.equality_analysis_ok);

  auto pet = prepare(catalog("petersen"));
  auto prec = bounds::fundamental_bound(pet.g, pet.spec, pet.walks.order.order,
                                        pet.walks.intersection, pet.m);
  CHECK(prec.gap == Approx(4.0).epsilon(1e-9));
  CHECK_FALSE(prec.equality);
}

TEST_CASE("multiplicity theorem records on named graphs") {
  auto dod = prepare(catalog("dodecahedron"));
  auto recs = bounds::multiplicity_theorems(dod.g, dod.spec, dod.walks.order.order,
                                            dod.walks.intersection, dod.walks.drg,
                                            dod.m);
  bool found_small = false, found_mult3 = false;
  for (const auto& r : recs) {
    CHECK(r.pass);
    if (r.name == "multiplicity <= t forces distance-regular" && r.applicable)
      found_small = true;
    if (r.name == "multiplicity-3 classification" && r.applicable) {
      found_mult3 = true;
      CHECK(r.detail.find("distance-regular") != std::string::npos);
    }
  }
  CHECK(found_small);
  CHECK(found_mult3);

  // GP(8,3): multiplicity 3 with order 2 < 3 leaves the small-multiplicity
  // implication silent, and the classification lands in the cubic branch
  auto gp = prepare(catalog("generalized_petersen", {8, 3}));
  auto grecs = bounds::multiplicity_theorems(gp.g, gp.spec, gp.walks.order.order,
                                             gp.walks.intersection, gp.walks.drg,
                                             gp.m);
  for (const auto& r : grecs) {
    CHECK(r.pass);
    if (r.name == "multiplicity <= t forces distance-regular")
      CHECK_FALSE(r.applicable);
    if (r.name == "multiplicity-3 classification") {
      CHECK(r.applicable);
      CHECK(r.detail == "cubic with a_1 = a_2 = 0");
    }
  }
}

TEST_CASE("finiteness bounds evaluate on deep 2-walk-regular graphs") {
  auto dod = prepare(catalog("dodecahedron"));
  auto rec = bounds::finiteness_bounds(dod.g, dod.spec, dod.walks.order.order,
                                       dod.walks.intersection);
  REQUIRE(rec.applicable);
  CHECK(rec.omega == 3);
  CHECK(rec.vertex_ok);
  CHECK(rec.valency_ok);
  CHECK(dod.g.n() < rec.vertex_bound);

  auto pet = prepare(catalog("petersen"));
  auto prec = bounds::finiteness_bounds(pet.g, pet.spec, pet.walks.order.order,
                                        pet.walks.intersection);
  CHECK_FALSE(prec.applicable);  // diameter 2 < 3
}

TEST_CASE("all bounds evaluate without violations on the whole corpus") {
  for (const auto& cg : testsupport::analyzable_corpus()) {
    if (cg.expect_none) continue;
    CAPTURE(cg.name);
    auto p = prepare(cg.graph);
    CHECK_NOTHROW(bounds::evaluate_bounds(p.g, p.spec, p.walks, p.m));
  }
}

TEST_CASE("analyze: end-to-end named results") {
  auto dod = report::analyze(catalog("dodecahedron"));
  CHECK(dod.analyzed);
  CHECK(dod.walks.order.order == 5);
  CHECK(dod.walks.drg.distance_regular);
  CHECK(dod.spectral_order == 5);

  auto pet = report::analyze(catalog("petersen"));
  CHECK(pet.walks.order.order == 2);
  CHECK(pet.geometry.result.status == cliques::GeometryStatus::kNotGeometric);
  CHECK(pet.clique_summary.bound.bound == Approx(2.5));

  auto disc = report::analyze(Graph::from_edges(4, {{0, 1}, {2, 3}}));
  CHECK_FALSE(disc.analyzed);
  CHECK(disc.skip_reason == "graph is disconnected");

  report::Options small;
  small.max_n = 5;
  CHECK_THROWS_AS(report::analyze(catalog("petersen"), small), InputError);
}

TEST_CASE("analyze: report bytes are deterministic") {
  for (const char* name : {"petersen", "dodecahedron", "octahedron"}) {
    Graph g = catalog(name);
    std::string first = report::analyze_json(g);
    for (int i = 0; i < 2; ++i) CHECK(report::analyze_json(g) == first);
    CHECK(first.find("\"schema\": \"walkreg-report/1\"") != std::string::npos);
  }
}

TEST_CASE("diagram: C6 and Petersen") {
  Graph c6 = catalog("cycle", {6});
  std::string dot = diagram::emit_diagram(c6, exact::analyze_walks(c6));
  CHECK(dot.find("d3") != std::string::npos);
  CHECK(dot.find("d4") == std::string::npos);  // distances 0..3 only
  CHECK(dot.find("b0=2") != std::string::npos);
  CHECK(dot.find("b1=1") != std::string::npos);
  CHECK(dot.find("b2=1") != std::string::npos);
  CHECK(dot.find("c1=1") != std::string::npos);
  CHECK(dot.find("c2=1") != std::string::npos);
  CHECK(dot.find("c3=2") != std::string::npos);

  Graph pet = catalog("petersen");
  std::string pdot = diagram::emit_diagram(pet, exact::analyze_walks(pet));
  CHECK(pdot.find("[label=\"1\"]") != std::string::npos);
  CHECK(pdot.find("[label=\"3\"]") != std::string::npos);
  CHECK(pdot.find("[label=\"6\"]") != std::string::npos);
  CHECK(pdot.find("c2=1") != std::string::npos);
  CHECK(pdot.find("a2=2") != std::string::npos);
}

TEST_CASE("diagram: ranges appear beyond the walk-regularity order") {
  // prism: order 0, so distance-1 annotations degenerate to ranges
  Graph prism = Graph::from_edges(
      6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
  std::string dot = diagram::emit_diagram(prism, exact::analyze_walks(prism));
  CHECK(dot.find("a1=0..1") != std::string::npos);
}
