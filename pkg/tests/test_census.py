import json

from paulidecomp.census import (LatticeGraph, abelian_census, bounds_check,
                                constructive_abelian_subgroups, export_dot,
                                export_json, hasse, paper_figure_lattice)
from paulidecomp.heisenberg import dihedral8
from paulidecomp.pauli import PauliGroupSpec, pauli_group


def test_census_d8():
    res = abelian_census(dihedral8())
    assert res.c_ab == 8
    assert res.by_order == {2: 5, 4: 3}
    assert res.normal_count == 4
    assert res.nonnormal_count == 4


def test_census_p12():
    res = abelian_census(pauli_group(PauliGroupSpec(2, 1, 1)))
    assert res.c_ab == 17
    assert res.by_order == {2: 7, 4: 7, 8: 3}
    # order-2 breakdown: one normal (center slice), six not
    assert res.by_order_normality[(2, True)] == 1
    assert res.by_order_normality[(2, False)] == 6


def test_census_json_round():
    res = abelian_census(dihedral8())
    d = res.to_json()
    assert d["c_ab"] == 8
    json.dumps(d)


def test_constructive_lower_bound():
    for n in (1, 2, 3):
        subs = constructive_abelian_subgroups(n)
        assert len(subs) >= 10 * n


def test_bounds_check_n1():
    rep = bounds_check(1)
    assert rep.claim == "cor5.6"
    assert rep.status == "confirmed"
    assert rep.witness["c_ab_exact"] == 17


def test_bounds_check_n2_upper_refuted():
    rep = bounds_check(2)
    assert rep.status == "refuted_at_desk_scale"
    assert rep.witness["c_ab_exact"] == 212
    assert rep.witness["lower_bound_holds"]
    assert not rep.witness["upper_bound_holds"]


def test_hasse_d8():
    lat = hasse(dihedral8())
    assert len(lat.nodes) == 10
    assert len(lat.edges) == 15
    # every edge goes strictly up in order
    orders = [n["order"] for n in lat.nodes]
    for lo, hi in lat.edges:
        assert orders[lo] < orders[hi]


def test_paper_figures():
    d8 = paper_figure_lattice("d8")
    assert len(d8.nodes) == 10 and len(d8.edges) == 15
    p12 = paper_figure_lattice("p12")
    assert len(p12.nodes) == 13 and len(p12.edges) == 20
    heis = paper_figure_lattice("heis")
    assert len(heis.nodes) == 7 and len(heis.edges) == 9


def test_export_dot():
    dot = export_dot(paper_figure_lattice("d8"))
    assert dot.startswith("digraph")
    assert "rankdir=BT" in dot
    assert "shape=box" in dot  # the nonabelian top node
    assert "shape=ellipse" in dot


def test_export_json_round_trip():
    lat = paper_figure_lattice("heis")
    text = export_json(lat)
    back = LatticeGraph.from_json(json.loads(text))
    assert back.nodes == lat.nodes
    assert back.edges == lat.edges


def test_lattice_deterministic():
    a = export_json(hasse(dihedral8()))
    b = export_json(hasse(dihedral8()))
    assert a == b
