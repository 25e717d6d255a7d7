import pytest

from conftest import ids
from nno.decomposition import Biclique, Decomposition, check_lemmas, decompose, enumerate_maximal_bicliques
from nno.errors import NotInClassError
from nno.fixtures import complete_bipartite, cycle_graph
from nno.recognition import is_bipartite


def _sides(g, bicliques):
    return {(frozenset(g.labelled(b.left)), frozenset(g.labelled(b.right))) for b in bicliques}


def test_bicliques_of_complete_graphs():
    k22 = complete_bipartite(2, 2)
    assert enumerate_maximal_bicliques(k22, is_bipartite(k22)) == [Biclique(frozenset({1, 2}), frozenset({3, 4}))]
    star = complete_bipartite(1, 3)
    assert enumerate_maximal_bicliques(star, is_bipartite(star)) == [Biclique(frozenset({1}), frozenset({2, 3, 4}))]


def test_ex1_bicliques(ex1):
    found = _sides(ex1, enumerate_maximal_bicliques(ex1, is_bipartite(ex1)))
    f = frozenset
    assert (f({"x1", "x2", "x3"}), f({"y1", "y2", "y3"})) in found
    assert (f({"x1", "x2", "x3", "u1"}), f({"y1", "y2"})) in found
    assert (f({"x1", "x2"}), f({"y1", "y2", "y3", "v1"})) in found


def test_bicliques_are_maximal(small_universe):
    for g in small_universe:
        bip = is_bipartite(g)
        for bc in enumerate_maximal_bicliques(g, bip):
            assert all(bc.right <= g.adj[a] for a in bc.left)
            for a in bip.side_a - bc.left:
                assert not bc.right <= g.adj[a]
            for b in bip.side_b - bc.right:
                assert not bc.left <= g.adj[b]


def test_complete_graph_has_empty_tails():
    d = decompose(complete_bipartite(3, 3))
    assert (d.i, d.j, d.p, d.q) == (3, 3, 0, 0)
    assert check_lemmas(d.graph, d).ok


def test_ex1_decomposition(ex1):
    d = decompose(ex1)
    assert ex1.labelled(d.a1) == ["x1", "x2", "x3"]
    assert ex1.labelled(d.b1) == ["y1", "y2", "y3"]
    assert ex1.labelled(d.a2) == ["u1"] and ex1.labelled(d.b2) == ["v1"]
    assert check_lemmas(ex1, d).ok


def test_ex2_decomposition(ex2):
    d = decompose(ex2)
    assert ex2.labelled(d.a2) == ["u1", "u2"]
    assert d.q == 0
    assert ex2.labelled(d.b1) == ["y1", "y2"]
    assert set(ex2.labelled(d.a1)) == {"x1", "x2"}


def test_swapped_exchanges_roles(ex1):
    d = decompose(ex1)
    s = d.swapped()
    assert (s.a1, s.b1, s.a2, s.b2) == (d.b1, d.a1, d.b2, d.a2)
    assert s.part_of(ids(ex1, "u1")[0]) == "B2"
    assert check_lemmas(ex1, s).ok


def test_universal_tail_violation_reported(ex1):
    d = decompose(ex1)
    # claim u1 is a tail while treating y1, y2 as the whole core side
    bad = Decomposition(ex1, d.bipartition, d.a1, tuple(ids(ex1, "y1", "y2")), d.a2, d.b2)
    report = check_lemmas(ex1, bad)
    assert not report.ok
    assert any(v.startswith("tail-universal") for v in report.violations)


def test_prefix_violation_reported(ex1):
    d = decompose(ex1)
    shuffled = Decomposition(ex1, d.bipartition, d.a1, d.b1[::-1], d.a2, d.b2)
    assert any(v.startswith("prefix") for v in check_lemmas(ex1, shuffled).violations)


def test_not_in_class_rejected():
    with pytest.raises(NotInClassError) as exc:
        decompose(cycle_graph(6))
    assert exc.value.report is not None


def test_every_small_graph_decomposes(small_universe):
    for g in small_universe:
        d = decompose(g)
        assert check_lemmas(g, d).ok
        assert sorted(d.a1 + d.b1 + d.a2 + d.b2) == list(g.vertices)
        degs = [g.degree(u) for u in d.a2]
        assert degs == sorted(degs)


def test_decomposition_json(ex1):
    out = decompose(ex1).to_json()
    assert (out["i"], out["j"], out["p"], out["q"]) == (3, 3, 1, 1)
    assert out["A2"] == ["u1"] and out["degrees"]["u1"] == 2
