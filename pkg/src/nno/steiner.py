"""Shortest path through a prescribed terminal set.

Supported terminal shapes: all terminals in one part (tail or core side) or
spread over one core side and the opposite tail.  Other shapes are reported
as unsupported rather than guessed at.
"""

from __future__ import annotations

from dataclasses import dataclass

from nno.decomposition import Decomposition, decompose
from nno.errors import TerminalError
from nno.graph import PATH, Graph, VertexSequence, Verdict, connected_components, validate_sequence
from nno.hamiltonicity import hamiltonian_path

__all__ = [
    "TAIL_A2",
    "TAIL_B2",
    "BASE_A1",
    "BASE_B1",
    "MIX_A1_B2",
    "MIX_B1_A2",
    "UNSUPPORTED",
    "SteinerResult",
    "case_tag",
    "steiner_path",
    "fresh_connector_path",
    "verify_minimality",
]

TAIL_A2 = "TAIL_A2"
TAIL_B2 = "TAIL_B2"
BASE_A1 = "BASE_A1"
BASE_B1 = "BASE_B1"
MIX_A1_B2 = "MIX_A1_B2"
MIX_B1_A2 = "MIX_B1_A2"
UNSUPPORTED = "UNSUPPORTED"

_TAGS = {
    frozenset({"A2"}): TAIL_A2,
    frozenset({"B2"}): TAIL_B2,
    frozenset({"A1"}): BASE_A1,
    frozenset({"B1"}): BASE_B1,
    frozenset({"A1", "B2"}): MIX_A1_B2,
    frozenset({"B1", "A2"}): MIX_B1_A2,
}
_MIRROR = {TAIL_B2: TAIL_A2, BASE_B1: BASE_A1, MIX_B1_A2: MIX_A1_B2}


@dataclass(frozen=True)
class SteinerResult:
    answer: str
    case_tag: str
    path: VertexSequence | None = None
    steiner_count: int | None = None
    note: str | None = None

    def to_json(self, g: Graph | None = None) -> dict:
        out: dict = {"answer": self.answer, "caseTag": self.case_tag}
        if self.path is not None:
            out["path"] = g.labelled(self.path.seq) if g is not None else list(self.path.seq)
            out["steinerCount"] = self.steiner_count
        if self.note is not None:
            out["note"] = self.note
        return out


def _check_terminals(d: Decomposition, terminals) -> frozenset[int]:
    r = frozenset(terminals)
    if not r:
        raise TerminalError("terminal set is empty")
    bad = [v for v in r if not 1 <= v <= d.graph.n]
    if bad:
        raise TerminalError(f"terminal {bad[0]} is not a vertex of the graph")
    return r


def case_tag(d: Decomposition, terminals) -> str:
    parts = frozenset(d.part_of(v) for v in _check_terminals(d, terminals))
    return _TAGS.get(parts, UNSUPPORTED)


def _yes(d: Decomposition, tag: str, seq, r) -> SteinerResult:
    path = VertexSequence(tuple(seq), PATH)
    verdict = validate_sequence(d.graph, path, required=r)
    if not verdict:
        raise AssertionError(f"Steiner construction invalid: {verdict.violation}")
    return SteinerResult("yes", tag, path, len(path) - len(r))


def _tail(d: Decomposition, r, tag: str) -> SteinerResult:
    # terminals alternate with the core prefix; d(t_g) >= g is needed for
    # every terminal except the last
    ts = sorted(r, key=lambda v: (d.degree(v), v))
    for g_idx, t in enumerate(ts[:-1], start=1):
        if d.degree(t) < g_idx:
            return SteinerResult("no", tag, note=f"terminal {d.graph.label(t)} has degree below {g_idx}")
    seq: list[int] = []
    for g_idx, t in enumerate(ts):
        seq.append(t)
        if g_idx < len(ts) - 1:
            seq.append(d.b1[g_idx])
    return _yes(d, tag, seq, r)


def _base(d: Decomposition, r, tag: str) -> SteinerResult:
    pos = {x: k for k, x in enumerate(d.a1, start=1)}
    ws = sorted(r, key=pos.__getitem__)
    gaps = len(ws) - 1
    if gaps <= d.j:
        connectors = list(d.b1[:gaps])
    else:
        # gap k joins ws[k] and ws[k+1]; a tail connector reaches a prefix of a1
        need = [pos[ws[k + 1]] for k in range(gaps)]
        spare = sorted(d.b2, key=lambda v: (d.degree(v), v))
        universal = list(d.b1)
        connectors = [None] * gaps
        for k in sorted(range(gaps), key=lambda k: -need[k]):
            pick = next((v for v in spare if d.degree(v) >= need[k]), None)
            if pick is not None:
                spare.remove(pick)
            elif universal:
                pick = universal.pop(0)
            else:
                return SteinerResult("no", tag, note="not enough connectors reach the terminals")
            connectors[k] = pick
    seq: list[int] = []
    for k, w in enumerate(ws):
        seq.append(w)
        if k < gaps:
            seq.append(connectors[k])
    return _yes(d, tag, seq, r)


def _by_side_degree(d: Decomposition, side, exclude):
    return sorted((v for v in side if v not in exclude), key=lambda v: (-d.degree(v), v))


def _densest_extension(d: Decomposition, r, tag: str) -> SteinerResult:
    """Smallest superset of ``r`` whose induced subgraph has a Hamiltonian path.

    Neighborhoods on each side are nested, so swapping a chosen non-terminal
    for one of larger degree never breaks a path; for a fixed number of extra
    vertices per side the highest-degree ones are therefore optimal.
    """
    g = d.graph
    side_a, side_b = d.bipartition.side_a, d.bipartition.side_b
    top_a = _by_side_degree(d, side_a, r)
    top_b = _by_side_degree(d, side_b, r)
    ra, rb = len(r & side_a), len(r & side_b)
    for extra in range(0, len(top_a) + len(top_b) + 1):
        for alpha in range(max(0, extra - len(top_b)), min(extra, len(top_a)) + 1):
            beta = extra - alpha
            if abs((ra + alpha) - (rb + beta)) > 1:
                continue
            keep = set(r) | set(top_a[:alpha]) | set(top_b[:beta])
            sub, back = g.induced_subgraph(keep)
            if connected_components(sub)[0] != 1:
                continue
            ham = hamiltonian_path(decompose(sub, check_class=False))
            if ham.answer:
                return _yes(d, tag, [back[v - 1] for v in ham.witness.seq], r)
    return SteinerResult("no", tag, note="no superset of the terminals has a Hamiltonian path")


def steiner_path(d: Decomposition, terminals) -> SteinerResult:
    r = _check_terminals(d, terminals)
    tag = case_tag(d, r)
    if tag == UNSUPPORTED:
        parts = sorted({d.part_of(v) for v in r})
        return SteinerResult("unsupported", tag, note=f"terminals meet parts {', '.join(parts)}")
    if len(r) == 1:
        return _yes(d, tag, list(r), r)
    work = d.swapped() if tag in _MIRROR else d
    base_tag = _MIRROR.get(tag, tag)
    if base_tag == TAIL_A2:
        res = _tail(work, r, tag)
    elif base_tag == BASE_A1:
        res = _base(work, r, tag)
    else:
        res = _densest_extension(work, r, tag)
    return res


def fresh_connector_path(d: Decomposition, terminals) -> VertexSequence | None:
    """Classic mixed-case construction with connectors taken outside ``R``.

    Tail terminals are threaded through non-terminal core vertices, then the
    core terminals through the opposite core side.  Kept for comparison with
    :func:`steiner_path`; returns None when the construction does not apply.
    """
    r = _check_terminals(d, terminals)
    if case_tag(d, r) == MIX_B1_A2:
        d = d.swapped()
    elif case_tag(d, r) != MIX_A1_B2:
        return None
    zs = sorted((v for v in r if v in d.b2), key=lambda v: (d.degree(v), v))
    xs = [x for x in d.a1 if x in r]
    ws = [x for x in d.a1 if x not in r][: len(zs)]
    ys = list(d.b1[: len(xs)])
    if len(ws) < len(zs) or len(ys) < len(xs):
        return None
    seq: list[int] = []
    for z, w in zip(zs, ws):
        seq += [z, w]
    for y, x in zip(ys, xs):
        seq += [y, x]
    path = VertexSequence(tuple(seq), PATH)
    return path if validate_sequence(d.graph, path, required=r) else None


def verify_minimality(g: Graph, res: SteinerResult, terminals) -> Verdict:
    kind = "steiner-minimality"
    r = frozenset(terminals)
    if res.answer != "yes" or res.path is None:
        return Verdict(kind, False, "result carries no path")
    if g.n <= 14:
        from nno.oracle import brute_steiner_path

        best = brute_steiner_path(g, r)
        if best is None:
            return Verdict(kind, False, "oracle finds no Steiner path")
        optimum = len(best) - len(r)
        if res.steiner_count != optimum:
            return Verdict(kind, False, f"steinerCount {res.steiner_count}, oracle minimum {optimum}")
        return Verdict(kind, True)
    # large inputs: only the independent-set bound is checked
    from nno.recognition import is_bipartite

    bip = is_bipartite(g)
    if r <= bip.side_a or r <= bip.side_b:
        if res.steiner_count == len(r) - 1:
            return Verdict(kind, True)
        return Verdict(kind, False, f"steinerCount {res.steiner_count} above lower bound {len(r) - 1}")
    return Verdict(kind, False, "minimality not checkable at this size")
