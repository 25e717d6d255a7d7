"""Hamiltonian cycle and path by degree thresholds on the nested tails.

Tail vertex number ``g`` (1-based, degree order) must reach enough core
vertices to be threaded between consecutive core vertices.  If it can, the
witness is spliced together from core prefixes.  If it cannot, removing its
neighborhood (or a larger separator) leaves more components than a
Hamiltonian cycle or path could survive, and that separator is returned as a
checkable certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from nno.decomposition import Decomposition
from nno.errors import ConstructionInvalid
from nno.graph import (
    CYCLE,
    CYCLE_BOUND,
    PATH,
    PATH_BOUND,
    CutCertificate,
    Graph,
    VertexSequence,
    connected_components,
    validate_cut,
    validate_sequence,
)

__all__ = ["ConstructionTrace", "HamiltonicityDecision", "hamiltonian_cycle", "hamiltonian_path"]


@dataclass(frozen=True)
class ConstructionTrace:
    a3: tuple[int, ...]
    b3: tuple[int, ...]
    segments: tuple[tuple[str, int, int], ...]


@dataclass(frozen=True)
class HamiltonicityDecision:
    answer: bool
    witness: VertexSequence | None = None
    certificate: CutCertificate | None = None
    trace: ConstructionTrace | None = None
    note: str | None = None

    def to_json(self, g: Graph | None = None) -> dict:
        out: dict = {"answer": "yes" if self.answer else "no"}
        if self.witness is not None:
            out["witness"] = g.labelled(self.witness.seq) if g is not None else list(self.witness.seq)
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json(g)
        if self.note is not None:
            out["note"] = self.note
        return out


def _certificate(g: Graph, separator, mode: str) -> CutCertificate:
    count, _ = connected_components(g, separator)
    cert = CutCertificate(frozenset(separator), count, mode)
    verdict = validate_cut(g, cert)
    if not verdict:
        raise ConstructionInvalid(f"cut certificate rejected: {verdict.violation}")
    return cert


def _size_certificate(d: Decomposition, mode: str) -> CutCertificate:
    bip = d.bipartition
    smaller = bip.side_a if len(bip.side_a) < len(bip.side_b) else bip.side_b
    return _certificate(d.graph, smaller, mode)


def _first_short(d: Decomposition, tail: tuple[int, ...], slack: int) -> int | None:
    """First tail vertex (1-based index g) with degree below ``g + slack``."""
    for g_idx, v in enumerate(tail, start=1):
        if d.degree(v) < g_idx + slack:
            return g_idx
    return None


def _interleave(first: tuple[int, ...], second: tuple[int, ...]) -> list[int]:
    if len(first) != len(second):
        raise ConstructionInvalid(f"leftover core parts differ in size ({len(first)} vs {len(second)})")
    out: list[int] = []
    for s, t in zip(first, second):
        out += [s, t]
    return out


def _checked(d: Decomposition, seq: list[int], kind: str) -> VertexSequence:
    witness = VertexSequence(tuple(seq), kind)
    verdict = validate_sequence(d.graph, witness, required=d.graph.vertices)
    if not verdict:
        raise ConstructionInvalid(f"assembled {kind} is invalid: {verdict.violation}")
    return witness


def hamiltonian_cycle(d: Decomposition) -> HamiltonicityDecision:
    g = d.graph
    if d.size_a != d.size_b:
        return HamiltonicityDecision(False, certificate=_size_certificate(d, CYCLE_BOUND))
    if g.n < 4:
        return HamiltonicityDecision(False, note="fewer than four vertices")
    for tail in (d.a2, d.b2):
        # a Hamiltonian cycle needs d(t_g) > g
        g_idx = _first_short(d, tail, 1)
        if g_idx is not None:
            sep = g.adj[tail[g_idx - 1]]
            return HamiltonicityDecision(False, certificate=_certificate(g, sep, CYCLE_BOUND))

    p, q = d.p, d.q
    x, y, u, v = d.a1, d.b1, d.a2, d.b2
    seq: list[int] = []
    for k in range(p):
        seq += [y[k], u[k]]
    seq.append(y[p])
    for k in range(q):
        seq += [x[k], v[k]]
    seq.append(x[q])
    a3, b3 = x[q + 1 :], y[p + 1 :]
    mark = len(seq)
    seq += _interleave(b3, a3)
    segments = (("A2-thread", 0, 2 * p + 1), ("B2-thread", 2 * p + 1, mark), ("core", mark, len(seq)))
    witness = _checked(d, seq, CYCLE)
    return HamiltonicityDecision(True, witness=witness, trace=ConstructionTrace(a3, b3, segments))


def hamiltonian_path(d: Decomposition) -> HamiltonicityDecision:
    gap = d.size_a - d.size_b
    if abs(gap) >= 2:
        return HamiltonicityDecision(False, certificate=_size_certificate(d, PATH_BOUND))
    if gap == -1:
        # only |A| = |B| + 1 is handled directly; mirror the sides
        return hamiltonian_path(d.swapped())

    g = d.graph
    g_idx = _first_short(d, d.a2, 0)
    if g_idx is not None:
        sep = g.adj[d.a2[g_idx - 1]]
        return HamiltonicityDecision(False, certificate=_certificate(g, sep, PATH_BOUND))
    if gap == 0:
        h_idx = _first_short(d, d.b2, 0)
        if h_idx is not None:
            sep = g.adj[d.b2[h_idx - 1]]
            return HamiltonicityDecision(False, certificate=_certificate(g, sep, PATH_BOUND))
    else:
        r = _first_short(d, d.b2, 1)
        if r is not None:
            sep = set(d.b1) | set(d.b2[r:])
            return HamiltonicityDecision(False, certificate=_certificate(g, sep, PATH_BOUND))

    p, q = d.p, d.q
    x, y, u, v = d.a1, d.b1, d.a2, d.b2
    seq: list[int] = []
    for k in range(p):
        seq += [u[k], y[k]]
    start = len(seq)
    if gap == 0:
        a3, b3 = x[q:], y[p:]
        seq += _interleave(a3, b3)
        mark = len(seq)
        for k in range(q - 1, -1, -1):
            seq += [x[k], v[k]]
    else:
        a3, b3 = x[q + 1 :], y[p:]
        seq += _interleave(a3, b3)
        mark = len(seq)
        for k in range(q - 1, -1, -1):
            seq += [x[k + 1], v[k]]
        seq.append(x[0])
    segments = (("A2-thread", 0, start), ("core", start, mark), ("B2-thread", mark, len(seq)))
    witness = _checked(d, seq, PATH)
    return HamiltonicityDecision(True, witness=witness, trace=ConstructionTrace(a3, b3, segments))
