"""Python binding smoke tests: the main operations round-trip through the
native module and agree with pinned values."""

import math

import pytest

import walkreg


def test_graph6_and_catalog():
    pet = walkreg.catalog("petersen")
    assert pet.n == 10
    assert pet.edge_count == 15
    assert walkreg.encode_graph6(pet) == "IheA@GUAo"
    assert walkreg.parse_graph6("IheA@GUAo") == pet
    assert pet.valency() == 3
    assert pet.adjacent(0, 1)


def test_graph_construction_and_errors():
    g = walkreg.Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert g.n == 4
    assert walkreg.metrics(g)["bipartite"]
    with pytest.raises(ValueError):
        walkreg.Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        walkreg.catalog("paley", [7])


def test_walk_regularity_orders():
    assert walkreg.walk_regularity_order(walkreg.catalog("dodecahedron")) == 5
    assert walkreg.walk_regularity_order(walkreg.catalog("petersen")) == 2
    assert walkreg.spectral_wr_order(walkreg.catalog("petersen")) == 2
    assert walkreg.minimal_poly_degree(walkreg.catalog("petersen")) == 2

    drg = walkreg.is_distance_regular(walkreg.catalog("dodecahedron"))
    assert drg["distance_regular"]
    assert drg["b"] == [3, 2, 1, 1, 1]
    assert drg["c"] == [1, 1, 1, 2, 3]


def test_spectrum_and_cliques():
    spec = walkreg.spectrum(walkreg.catalog("octahedron"))
    assert [m for _, m in spec] == [1, 3, 2]
    assert abs(spec[0][0] - 4) < 1e-9
    assert abs(spec[2][0] + 2) < 1e-9

    bound, candidate = walkreg.delsarte_bound(3, -2.0)
    assert math.isclose(bound, 2.5)
    assert candidate is None

    cliques = walkreg.maximal_cliques(walkreg.catalog("petersen"))
    assert len(cliques) == 15


def test_constructions():
    dodeca = walkreg.catalog("dodecahedron")
    double, guaranteed, connected = walkreg.bipartite_double(dodeca)
    assert double.n == 40
    assert connected
    assert guaranteed == 2
    assert walkreg.walk_regularity_order(double) == 3

    d2, _, _ = walkreg.distance_k_graph(dodeca, 2)
    assert walkreg.walk_regularity_order(d2) == 1


def test_geometry():
    rook = walkreg.catalog("rook", [3])
    res = walkreg.geometric_decomposition(rook)
    assert res["status"] == "geometric"
    assert len(res["cover"]) == 6

    pet = walkreg.catalog("petersen")
    assert walkreg.geometric_decomposition(pet)["status"] == "not_geometric"


def test_analyze_report():
    rep = walkreg.analyze(walkreg.catalog("petersen"))
    assert rep["schema"] == "walkreg-report/1"
    assert rep["walk"]["order"] == 2
    assert rep["walk"]["distanceRegular"]
    assert rep["geometry"]["status"] == "not_geometric"
    assert rep["bounds"]["fundamental"]["gap"] == pytest.approx(4.0)

    dot = walkreg.emit_diagram(walkreg.catalog("cycle", [6]))
    assert dot.startswith("digraph")
    assert "b0=2" in dot
