import pytest

from conftest import ids, same_cycle
from nno.decomposition import decompose
from nno.fixtures import complete_bipartite
from nno.graph import CYCLE, CYCLE_BOUND, PATH, PATH_BOUND, validate_cut, validate_sequence
from nno.hamiltonicity import hamiltonian_cycle, hamiltonian_path
from nno.oracle import brute_hamiltonian


def test_k22_cycle():
    g = complete_bipartite(2, 2)
    dec = hamiltonian_cycle(decompose(g))
    assert dec.answer
    assert same_cycle(g.labelled(dec.witness.seq), ["x1", "y1", "x2", "y2"])


def test_ex1_cycle(ex1):
    dec = hamiltonian_cycle(decompose(ex1))
    assert dec.answer
    assert ex1.labelled(dec.witness.seq) == ["y1", "u1", "y2", "x1", "v1", "x2", "y3", "x3"]


def test_ex6_cycle_refused_with_certificate(ex6):
    dec = hamiltonian_cycle(decompose(ex6))
    assert not dec.answer
    cert = dec.certificate
    assert cert.separator == frozenset(ids(ex6, "y1"))
    assert (cert.claimed_components, cert.mode) == (2, CYCLE_BOUND)
    assert validate_cut(ex6, cert)


def test_ex6_path(ex6):
    dec = hamiltonian_path(decompose(ex6))
    assert dec.answer
    assert ex6.labelled(dec.witness.seq) == ["u1", "y1", "x2", "y2", "x3", "y3", "x1", "v1"]


def test_ex2_path_size_gap(ex2):
    dec = hamiltonian_path(decompose(ex2))
    assert not dec.answer
    assert dec.certificate.mode == PATH_BOUND
    assert validate_cut(ex2, dec.certificate)


def test_k12_path_via_mirror():
    g = complete_bipartite(1, 2)
    dec = hamiltonian_path(decompose(g))
    assert dec.answer
    assert g.labelled(dec.witness.seq) in (["y1", "x1", "y2"], ["y2", "x1", "y1"])


@pytest.mark.parametrize("s, t, cycle, path", [(1, 1, False, True), (2, 3, False, True), (3, 3, True, True), (1, 3, False, False)])
def test_complete_bipartite_degeneracy(s, t, cycle, path):
    d = decompose(complete_bipartite(s, t))
    assert hamiltonian_cycle(d).answer is cycle
    assert hamiltonian_path(d).answer is path


def test_small_cycle_note():
    dec = hamiltonian_cycle(decompose(complete_bipartite(1, 1)))
    assert not dec.answer and dec.certificate is None and dec.note


def test_json_shape(ex6):
    out = hamiltonian_cycle(decompose(ex6)).to_json(ex6)
    assert out["answer"] == "no"
    assert out["certificate"] == {"separator": ["y1"], "claimedComponents": 2, "mode": "cycle-bound"}


def test_oracle_parity_and_certificates(small_universe):
    for g in small_universe:
        d = decompose(g)
        cyc, pth = hamiltonian_cycle(d), hamiltonian_path(d)
        for dec, mode in ((cyc, CYCLE), (pth, PATH)):
            assert dec.answer == (brute_hamiltonian(g, mode) is not None)
            if dec.answer:
                assert validate_sequence(g, dec.witness, required=g.vertices)
            elif dec.certificate is not None:
                assert validate_cut(g, dec.certificate)
            else:
                assert mode == CYCLE and g.n < 4
        if cyc.answer:
            assert pth.answer


def test_trace_records_leftover_core(ex1):
    trace = hamiltonian_cycle(decompose(ex1)).trace
    assert trace is not None
    assert len(trace.a3) == len(trace.b3)
