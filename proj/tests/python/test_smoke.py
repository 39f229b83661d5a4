from fractions import Fraction

import pytest

import kautzlab as kl


def test_build_and_measure():
    g = kl.build(kl.spec("CK", 3, 3))
    assert g.order == 24
    assert g.arc_count == 48
    assert g.is_regular()
    assert kl.diameter(g) == 5
    assert kl.mean_distance(g) == Fraction(73, 24)
    assert kl.girth(g) == 3
    assert kl.semigirth(kl.build(kl.spec("K", 3, 3))) == 3
    assert kl.vertex_connectivity(g) == kl.arc_connectivity(g) == 2


def test_vertices():
    s = kl.spec("CK", 3, 4)
    assert len(kl.enumerate_vertices(s)) == kl.order_formula(s) == 84
    assert kl.is_valid_vertex("0121", s)
    assert not kl.is_valid_vertex("0120", s)
    assert kl.labels(kl.build(kl.spec("CK", 2, 2)), 2) == ["01", "02", "10", "12", "20", "21"]


def test_routing():
    s = kl.spec("CK", 3, 3)
    r = kl.distance("012", "210", s)
    assert r["distance"] == 5
    assert r["analytic"] == 5
    path = kl.shortest_path("012", "210", s)
    assert path[0] == "012" and path[-1] == "210" and len(path) == 6
    with pytest.raises(ValueError):
        kl.distance("010", "210", s)


def test_unreachable():
    s = kl.spec("CK", 2, 3)
    g = kl.build(s)
    with pytest.raises(kl.NotStronglyConnected):
        kl.diameter(g)
    names = kl.labels(g, 2)
    hits = 0
    for y in names:
        try:
            kl.distance(names[0], y, s)
        except kl.UnreachablePair:
            hits += 1
    assert hits > 0


def test_formulas():
    assert kl.diameter_formula(kl.spec("CK", 3, 4)) == 6
    assert kl.diameter_formula(kl.spec("MCK", 3, 4)) is None
    assert kl.girth_lower_bound(13) == 5
    found = kl.girth_periodic_search(kl.spec("CK", 3, 13))
    assert found["girth"] == 7
    assert found["witness"] == "0120123012012"
    assert kl.mean_distance_formula(kl.spec("sK", 3, 2)) == Fraction(13, 6)
    assert kl.moore_bound(2, 2) == 7
    assert kl.moore_mean_distance(2, 2) == Fraction(10, 7)


def test_analyze_and_export():
    records = kl.analyze(kl.spec("CK", 3, 4), ["diameter", "girth"])
    assert [r["check"] for r in records] == ["diameter", "girth"]
    assert all(r["verdict"] == "match" for r in records)
    doc = kl.graph_json(kl.spec("sK", 3, 2))
    assert doc["metadata"]["order"] == 12
    assert len(doc["arcs"]) == 24


def test_bad_spec():
    with pytest.raises(ValueError):
        kl.spec("XK", 3, 3)
    with pytest.raises(ValueError):
        kl.spec("CK", 1, 3)
