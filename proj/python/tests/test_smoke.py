import json

import pytest

import ribbon_torsor as rt


def theta():
    return rt.theta_graph()


def test_graph_round_trip():
    g = theta()
    assert g.vertices == ["u", "v"]
    assert g.edges == ["p", "q", "r"]
    assert g.genus == 2
    assert g.is_planar
    assert rt.RibbonGraph.from_json(g.to_json()) == g


def test_constructor_and_validation():
    g = rt.RibbonGraph(["a", "b"], [("e", ("a", "b"))], {"a": ["e"], "b": ["e"]})
    assert g.num_faces == 1
    with pytest.raises(rt.ValidationError):
        rt.RibbonGraph(["a"], [("e", ("a", "a"))], {"a": ["e", "e"]})
    with pytest.raises(rt.ParseError):
        rt.RibbonGraph.from_json("{")


def test_counts_agree():
    for name, g in rt.default_corpus()[:12]:
        n = len(rt.spanning_trees(g))
        assert n == len(rt.break_divisors(g)) == rt.picard_order(g)
        assert n == rt.laplacian_minor_determinant(g), name


def test_beta_alpha_round_trip():
    g = rt.triangle_graph()
    for tree in rt.spanning_trees(g):
        d = rt.beta(g, "1", "a", tree)
        assert sorted(rt.alpha_right(g, "1", "a", d)) == sorted(tree)
        assert sorted(rt.alpha_left(g, "1", "a", d)) == sorted(tree)
    with pytest.raises(rt.NotBreakDivisor):
        rt.alpha_right(theta(), "u", "p", {"u": 3, "v": -1})


def test_actions_on_theta():
    g = theta()
    gamma = {"u": 1, "v": -1}
    for tree in rt.spanning_trees(g):
        t = tree
        for _ in range(3):
            t = rt.act_bernardi(g, "u", gamma, t)
        assert t == tree
        assert rt.act_bernardi(g, "u", gamma, tree) == rt.act_rotor(g, "u", gamma, tree)
    with pytest.raises(rt.DegreeMismatch):
        rt.act_rotor(g, "u", {"u": 1}, ["p"])


def test_tour_length():
    g = theta()
    steps = rt.tour(g, "u", "p", ["p"])
    assert len(steps) == 6
    assert sum(kind == "cut" for _, _, kind in steps) == 4


def test_duality():
    dual, edge_map = rt.dual(theta())
    assert dual.is_isomorphic(rt.triangle_graph())
    assert edge_map == {"p": "p*", "q": "q*", "r": "r*"}
    assert rt.check_square(theta())
    assert not rt.check_square(rt.triangle_graph(), mirror=True)
    torus = [g for g in rt.rotation_systems(theta()) if not g.is_planar][0]
    with pytest.raises(rt.NotPlanar):
        rt.dual(torus)


def test_comparisons():
    systems = rt.rotation_systems(theta())
    for g in systems:
        assert rt.compare_vertices(g, "u", "v")["agree"] == g.is_planar
    assert rt.compare_torsors(rt.triangle_graph(), "1")["agree"]


def test_search_k4():
    lines = [json.loads(line) for line in rt.search(rt.complete_graph(4)).splitlines()]
    summary = lines[-1]["summary"]
    assert summary["systems"] == 16
    assert summary["theorem_violations"] == []
    assert any(r["genus"] > 0 and "distinguishing" in r for r in lines[:-1])
    with pytest.raises(rt.NotSimple):
        rt.search(theta())


def test_suite_small():
    report = rt.suite([("theta", theta()), ("k3", rt.triangle_graph())], jobs=2)
    summary = json.loads(report.splitlines()[-1])["summary"]
    assert summary["failed"] == 0
    broken = rt.suite([("k3", rt.triangle_graph())], mirror=True)
    assert json.loads(broken.splitlines()[-1])["summary"]["failed"] > 0
