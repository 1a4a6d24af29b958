#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "corpus.hpp"
#include "walkreg/catalog.hpp"
#include "walkreg/clique_geometry.hpp"
#include "walkreg/errors.hpp"
#include "walkreg/exact_walk.hpp"
#include "walkreg/spectral.hpp"

using namespace walkreg;
using doctest::Approx;

namespace {

spectral::Idempotent smallest_idempotent(const Graph& g) {
  auto dec = spectral::decompose(g);
  auto idems = spectral::minimal_idempotents(dec);
  return idems.back();
}

// Brute-force triangle enumeration, the oracle for small clique sets.
int count_triangles(const Graph& g) {
  int count = 0;
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      for (int c = b + 1; c < g.n(); ++c)
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) ++count;
  return count;
}

}  // namespace

TEST_CASE("maximal cliques: Petersen, octahedron, K5") {
  auto pet = cliques::maximal_cliques(catalog("petersen"));
  CHECK(pet.cliques.size() == 15);
  for (const auto& c : pet.cliques) CHECK(c.size() == 2);

  Graph oct = catalog("octahedron");
  auto octc = cliques::maximal_cliques(oct);
  CHECK(octc.cliques.size() == 8);
  CHECK(count_triangles(oct) == 8);
  for (const auto& c : octc.cliques) CHECK(c.size() == 3);

  auto k5 = cliques::maximal_cliques(catalog("complete", {5}));
  REQUIRE(k5.cliques.size() == 1);
  CHECK(k5.cliques[0] == std::vector<int>{0, 1, 2, 3, 4});

  CHECK_THROWS_AS(cliques::maximal_cliques(catalog("petersen"), 3), BudgetError);
}

TEST_CASE("Delsarte bound arithmetic") {
  auto pet = cliques::delsarte_bound(3, -2.0);
  CHECK(pet.bound == Approx(2.5));
  CHECK_FALSE(pet.integer_candidate.has_value());

  auto oct = cliques::delsarte_bound(4, -2.0);
  CHECK(oct.bound == Approx(3.0));
  CHECK(oct.integer_candidate == 3);

  auto ico = cliques::delsarte_bound(5, -std::sqrt(5.0));
  CHECK(ico.bound == Approx(1.0 + std::sqrt(5.0)));
  CHECK_FALSE(ico.integer_candidate.has_value());

  CHECK_THROWS_AS(cliques::delsarte_bound(3, 1.0), InputError);
}

TEST_CASE("Delsarte clique membership test") {
  Graph oct = catalog("octahedron");
  auto e_oct = smallest_idempotent(oct);
  CHECK(cliques::is_delsarte_clique(oct, e_oct, {0, 2, 4}));

  Graph ico = catalog("icosahedron");
  auto e_ico = smallest_idempotent(ico);
  auto tri = cliques::maximal_cliques(ico).cliques.front();
  REQUIRE(tri.size() == 3);
  CHECK_FALSE(cliques::is_delsarte_clique(ico, e_ico, tri));

  Graph cube = catalog("hypercube", {3});
  auto e_cube = smallest_idempotent(cube);
  for (auto [u, v] : cube.edges())
    CHECK(cliques::is_delsarte_clique(cube, e_cube, {u, v}));

  CHECK_THROWS_AS(cliques::is_delsarte_clique(oct, e_oct, {0, 1}), InputError);
}

TEST_CASE("clique size vs idempotent rank") {
  // coclique extensions of the triangle meet the rank bound with equality
  Graph ext = Graph::from_edges(
      6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5},
          {2, 4}, {2, 5}, {3, 4}, {3, 5}});  // 2-coclique extension of K3
  auto dec = spectral::decompose(ext);
  auto idems = spectral::minimal_idempotents(dec);
  auto cl = cliques::maximal_cliques(ext);
  auto records = cliques::clique_rank_check(ext, idems, cl);
  bool tight = false;
  for (const auto& r : records)
    if (r.rank == 2 && r.tight) tight = true;
  CHECK(tight);

  Graph k4 = catalog("complete", {4});
  auto k4rec = cliques::clique_rank_check(
      k4, spectral::minimal_idempotents(spectral::decompose(k4)),
      cliques::maximal_cliques(k4));
  REQUIRE(k4rec.size() == 1);
  CHECK(k4rec[0].rank == 3);
  CHECK(k4rec[0].max_clique == 4);
  CHECK(k4rec[0].tight);

  Graph pet = catalog("petersen");
  auto prec = cliques::clique_rank_check(
      pet, spectral::minimal_idempotents(spectral::decompose(pet)),
      cliques::maximal_cliques(pet));
  for (const auto& r : prec) CHECK(r.max_clique <= r.rank + 1);
}

TEST_CASE("clique profiles: covering radius and phi") {
  Graph rook = catalog("rook", {3});
  auto prof = cliques::clique_profile(rook, {0, 1, 2}, 2, 2);
  CHECK(prof.covering_radius == 1);  // d - 1 with d = 2
  CHECK(prof.phi == std::vector<int>{1, 1});

  Graph cube = catalog("hypercube", {3});
  auto cprof = cliques::clique_profile(cube, {0, 1}, 3, 3);
  CHECK(cprof.covering_radius == 2);
  CHECK(cprof.phi[0] == 1);

  Graph oct = catalog("octahedron");
  auto oprof = cliques::clique_profile(oct, {0, 2, 4}, 2, 2);
  CHECK(oprof.covering_radius == 1);
  CHECK(oprof.phi == std::vector<int>{1, 2});

  CHECK_THROWS_AS(cliques::clique_profile(oct, {0, 1}, 2, 2), InputError);
}

TEST_CASE("geometric decomposition: L2(3)") {
  Graph rook = catalog("rook", {3});
  auto res = cliques::geometric_decomposition(rook, smallest_idempotent(rook));
  REQUIRE(res.status == cliques::GeometryStatus::kGeometric);
  REQUIRE(res.cover.has_value());
  CHECK(res.cover->lines.size() == 6);
  // rows and columns, every vertex on exactly 2 lines
  std::map<int, int> lines_per_vertex;
  for (const auto& line : res.cover->lines) {
    CHECK(line.size() == 3);
    for (int v : line) ++lines_per_vertex[v];
  }
  for (auto [v, cnt] : lines_per_vertex) CHECK(cnt == 2);
  // every edge covered exactly once
  CHECK(res.cover->edge_assignment.size() == static_cast<size_t>(rook.edge_count()));

  Graph dual = cliques::dual_graph(*res.cover, rook);
  CHECK(dual.n() == 6);
  CHECK(dual.valency() == 3);
  CHECK(metrics(dual).bipartite);
  // K_{3,3}: complement is two disjoint triangles
  auto comp = dual.complement();
  CHECK(comp.edge_count() == 6);
  CHECK(count_triangles(comp) == 2);
}

TEST_CASE("geometric decomposition: octahedron, Petersen, icosahedron, K5") {
  Graph oct = catalog("octahedron");
  auto ores = cliques::geometric_decomposition(oct, smallest_idempotent(oct));
  REQUIRE(ores.status == cliques::GeometryStatus::kGeometric);
  CHECK(ores.cover->lines.size() == 4);
  CHECK(cliques::dual_graph(*ores.cover, oct) == catalog("complete", {4}));

  Graph pet = catalog("petersen");
  auto pres = cliques::geometric_decomposition(pet, smallest_idempotent(pet));
  CHECK(pres.status == cliques::GeometryStatus::kNotGeometric);
  CHECK(pres.reason.find("integer") != std::string::npos);

  Graph ico = catalog("icosahedron");
  auto ires = cliques::geometric_decomposition(ico, smallest_idempotent(ico));
  CHECK(ires.status == cliques::GeometryStatus::kNotGeometric);

  // K5: the whole vertex set is the single Delsarte clique; dual is a point
  Graph k5 = catalog("complete", {5});
  auto kres = cliques::geometric_decomposition(k5, smallest_idempotent(k5));
  REQUIRE(kres.status == cliques::GeometryStatus::kGeometric);
  REQUIRE(kres.cover->lines.size() == 1);
  Graph kdual = cliques::dual_graph(*kres.cover, k5);
  CHECK(kdual.n() == 1);
  CHECK(kdual.edge_count() == 0);
}

TEST_CASE("geometric decomposition: budget exhaustion reports unknown") {
  Graph rook = catalog("rook", {3});
  auto res = cliques::geometric_decomposition(rook, smallest_idempotent(rook), 1);
  CHECK(res.status == cliques::GeometryStatus::kUnknown);
  CHECK_FALSE(res.cover.has_value());
}

TEST_CASE("geometric sufficiency verdicts") {
  Graph pet = catalog("petersen");
  // pure arithmetic case: a1 = 17 > 16 = omega^4 c2 under met guards
  auto ok = cliques::geometric_sufficiency(pet, 2, 2, -1.5, 17, 1);
  CHECK(ok.verdict == cliques::SufficiencyVerdict::kGuaranteed);

  // L2(3): guards met but a1 = 1 <= 32; sufficiency is not necessity
  Graph rook = catalog("rook", {3});
  auto rl = cliques::geometric_sufficiency(rook, 2, 2, -2.0, 1, 2);
  CHECK(rl.verdict == cliques::SufficiencyVerdict::kInconclusive);
  CHECK(cliques::geometric_decomposition(rook, smallest_idempotent(rook)).status ==
        cliques::GeometryStatus::kGeometric);

  // Petersen: inconclusive and indeed not geometric
  auto pl = cliques::geometric_sufficiency(pet, 2, 2, -2.0, 0, 1);
  CHECK(pl.verdict == cliques::SufficiencyVerdict::kInconclusive);

  // unmet guards are named
  auto guards = cliques::geometric_sufficiency(pet, 2, 1, -3.5, 17, 1);
  CHECK(guards.verdict == cliques::SufficiencyVerdict::kGuardsUnmet);
  CHECK(guards.unmet_guards.size() == 2);
}

TEST_CASE("Delsarte bound holds on every 1-walk-regular corpus graph") {
  for (const auto& cg : testsupport::analyzable_corpus()) {
    if (!cg.expected_order || *cg.expected_order < 1) continue;
    CAPTURE(cg.name);
    const Graph& g = cg.graph;
    auto spec = spectral::spectrum(g);
    double bound = 1.0 - *g.valency() / spec.eigenvalues.back().value;
    auto cl = cliques::maximal_cliques(g);
    int maxc = 0;
    for (const auto& c : cl.cliques) maxc = std::max(maxc, static_cast<int>(c.size()));
    CHECK(maxc <= bound + 1e-6);

    // equality characterization: Delsarte exactly when the size hits the
    // (integral) bound
    auto db = cliques::delsarte_bound(*g.valency(), spec.eigenvalues.back().value);
    auto e_min = smallest_idempotent(g);
    for (const auto& c : cl.cliques) {
      bool attains = db.integer_candidate &&
                     static_cast<int>(c.size()) == *db.integer_candidate;
      CHECK(cliques::is_delsarte_clique(g, e_min, c) == attains);
    }
  }
}

TEST_CASE("locally-disjoint-clique covers put every vertex on -theta_d lines") {
  for (const char* name : {"rook", "hypercube"}) {
    Graph g = name == std::string("rook") ? catalog(name, {3}) : catalog(name, {3});
    auto spec = spectral::spectrum(g);
    double theta_d = spec.eigenvalues.back().value;
    auto in = exact::intersection_numbers(g, 1);
    if (std::abs(*g.valency() + theta_d * (in.a[1] + 1)) > 1e-9) continue;
    auto res = cliques::geometric_decomposition(g, smallest_idempotent(g));
    REQUIRE(res.status == cliques::GeometryStatus::kGeometric);
    std::map<int, int> per_vertex;
    for (const auto& line : res.cover->lines)
      for (int v : line) ++per_vertex[v];
    for (auto [v, cnt] : per_vertex) CHECK(cnt == Approx(-theta_d));
  }
}
