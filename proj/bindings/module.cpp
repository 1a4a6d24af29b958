#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "walkreg/catalog.hpp"
#include "walkreg/clique_geometry.hpp"
#include "walkreg/constructions.hpp"
#include "walkreg/errors.hpp"
#include "walkreg/exact_walk.hpp"
#include "walkreg/graph6.hpp"
#include "walkreg/io.hpp"
#include "walkreg/report.hpp"
#include "walkreg/spectral.hpp"

namespace py = pybind11;
using namespace walkreg;

namespace {

py::object order_to_py(std::optional<int> order) {
  if (!order) return py::none();
  return py::int_(*order);
}

py::tuple construction_to_py(const constructions::ConstructionResult& res) {
  return py::make_tuple(res.graph, order_to_py(res.guaranteed_order),
                        res.output_connected);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "walk-regularity analysis: exact walk counts, spectra, Delsarte "
            "cliques and geometric decompositions";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return Graph::from_edges(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
      .def("adjacent", &Graph::adjacent)
      .def("valency", [](const Graph& g) { return g.valency(); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" +
               std::to_string(g.edge_count()) + ">";
      });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("encode_graph6", &encode_graph6);
  m.def("parse_json_graph", [](const std::string& s) { return parse_json_graph(s); });
  m.def("encode_json_graph", &encode_json_graph);
  m.def("catalog",
        [](const std::string& name, const std::vector<long long>& params) {
          return catalog(name, params);
        },
        py::arg("name"), py::arg("params") = std::vector<long long>{});
  m.def("catalog_names", &catalog_names);

  m.def("metrics", [](const Graph& g) {
    GraphMetrics mm = metrics(g);
    py::dict d;
    d["connected"] = mm.connected;
    d["regular"] = mm.valency.has_value();
    d["valency"] = mm.valency ? py::object(py::int_(*mm.valency)) : py::none();
    d["bipartite"] = mm.bipartite;
    d["girth"] = mm.girth ? py::object(py::int_(*mm.girth)) : py::none();
    d["odd_girth"] = mm.odd_girth ? py::object(py::int_(*mm.odd_girth)) : py::none();
    d["complete_multipartite"] = mm.complete_multipartite;
    return d;
  });

  m.def("minimal_poly_degree", [](const Graph& g) {
    return exact::minimal_poly_degree(g);
  });
  m.def("walk_regularity_order", [](const Graph& g) {
    return order_to_py(exact::walk_regularity_order(g).order);
  });
  m.def("intersection_numbers", [](const Graph& g, int t) {
    auto in = exact::intersection_numbers(g, t);
    py::dict d;
    d["a"] = in.a;
    d["b"] = in.b;
    d["c"] = in.c;
    return d;
  });
  m.def("is_distance_regular", [](const Graph& g) {
    auto drg = exact::is_distance_regular(g);
    py::dict d;
    d["distance_regular"] = drg.distance_regular;
    if (drg.distance_regular) {
      d["b"] = drg.b;
      d["c"] = drg.c;
    }
    return d;
  });

  m.def("spectrum", [](const Graph& g) {
    auto s = spectral::spectrum(g);
    std::vector<std::pair<double, int>> out;
    for (const auto& ev : s.eigenvalues) out.emplace_back(ev.value, ev.multiplicity);
    return out;
  });
  m.def("spectral_wr_order", [](const Graph& g) {
    return order_to_py(spectral::spectral_wr_order(g));
  });

  m.def("bipartite_double", [](const Graph& g) {
    return construction_to_py(constructions::bipartite_double(g));
  });
  m.def("distance_k_graph", [](const Graph& g, int i) {
    return construction_to_py(constructions::distance_k_graph(g, i));
  });
  m.def("halved_graphs", [](const Graph& g) {
    auto [a, b] = constructions::halved_graphs(g);
    return py::make_tuple(a.graph, b.graph);
  });
  m.def("line_graph", [](const Graph& g) {
    return construction_to_py(constructions::line_graph(g));
  });
  m.def("kronecker_product", [](const Graph& g, const Graph& h) {
    return construction_to_py(constructions::kronecker_product(g, h));
  });
  m.def("cartesian_square", [](const Graph& g) {
    return construction_to_py(constructions::cartesian_square(g));
  });
  m.def("coclique_extension", [](const Graph& g, int s) {
    return construction_to_py(constructions::coclique_extension(g, s));
  });
  m.def("complement_block_double", [](const Graph& g) {
    return construction_to_py(constructions::complement_block_double(g));
  });

  m.def("maximal_cliques", [](const Graph& g) {
    return cliques::maximal_cliques(g).cliques;
  });
  m.def("delsarte_bound", [](int k, double theta_min) {
    auto b = cliques::delsarte_bound(k, theta_min);
    return py::make_tuple(b.bound, b.integer_candidate
                                       ? py::object(py::int_(*b.integer_candidate))
                                       : py::none());
  });
  m.def(
      "geometric_decomposition",
      [](const Graph& g, int64_t node_budget) {
        auto idems = spectral::minimal_idempotents(spectral::decompose(g));
        auto res = cliques::geometric_decomposition(g, idems.back(), node_budget);
        py::dict d;
        switch (res.status) {
          case cliques::GeometryStatus::kGeometric: d["status"] = "geometric"; break;
          case cliques::GeometryStatus::kNotGeometric:
            d["status"] = "not_geometric";
            break;
          case cliques::GeometryStatus::kUnknown: d["status"] = "unknown"; break;
        }
        if (res.cover) {
          d["cover"] = res.cover->lines;
          d["dual_graph6"] = encode_graph6(cliques::dual_graph(*res.cover, g));
        }
        if (!res.reason.empty()) d["reason"] = res.reason;
        return d;
      },
      py::arg("g"), py::arg("node_budget") = int64_t{10000000});

  m.def(
      "analyze_json",
      [](const Graph& g, bool with_geometry, int max_n) {
        report::Options opt;
        opt.with_geometry = with_geometry;
        opt.max_n = max_n;
        return report::analyze_json(g, opt);
      },
      py::arg("g"), py::arg("with_geometry") = true, py::arg("max_n") = 2000);

  m.def("emit_diagram", [](const Graph& g) {
    return diagram::emit_diagram(g, exact::analyze_walks(g));
  });
}
