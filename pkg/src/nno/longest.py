"""Longest path and minimum-leaf spanning tree.

Tail vertices that cannot be threaded are pruned.  Each remaining tail is
threaded along its core prefix into a side path, the untouched part of the
core (complete bipartite) gives a third path, and the three are glued
through core-to-core edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from nno.decomposition import Decomposition, decompose
from nno.errors import AttachmentFailure, ConstructionInvalid
from nno.graph import PATH, Graph, SpanningTree, VertexSequence, validate_sequence, validate_tree
from nno.hamiltonicity import hamiltonian_path

__all__ = [
    "PrunedDecomposition",
    "StitchParts",
    "prune",
    "side_path",
    "side_path_variants",
    "core_path",
    "stitch_parts",
    "stitch",
    "longest_path",
    "min_leaf_spanning_tree",
]

A2, B2 = "A2", "B2"


@dataclass(frozen=True)
class PrunedDecomposition:
    base: Decomposition
    kept_a2: tuple[int, ...]
    kept_b2: tuple[int, ...]
    pruned_a2: tuple[int, ...]
    pruned_b2: tuple[int, ...]

    @property
    def c(self) -> int:
        return len(self.pruned_a2)

    @property
    def d(self) -> int:
        return len(self.pruned_b2)


@dataclass(frozen=True)
class StitchParts:
    graph: Graph
    p1: tuple[int, ...]
    p2: tuple[int, ...]
    a1_residual: tuple[int, ...]
    b1_residual: tuple[int, ...]
    p3: tuple[int, ...]
    kept_a2: tuple[int, ...] = ()
    kept_b2: tuple[int, ...] = ()


def _prune_tail(d: Decomposition, tail: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    kept = list(tail)
    pruned = []
    while True:
        r = next((k for k, v in enumerate(kept, start=1) if d.degree(v) < k), None)
        if r is None:
            return tuple(kept), tuple(pruned)
        pruned.append(kept.pop(r - 1))


def prune(d: Decomposition) -> PrunedDecomposition:
    """Drop the first tail vertex with degree below its position until none is left."""
    kept_a, pruned_a = _prune_tail(d, d.a2)
    kept_b, pruned_b = _prune_tail(d, d.b2)
    return PrunedDecomposition(d, kept_a, kept_b, pruned_a, pruned_b)


def _thread(d: Decomposition, tail, base, long: bool) -> tuple[int, ...]:
    k = len(tail)
    seq: list[int] = []
    if long:
        for g in range(k):
            seq += [base[g], tail[g]]
        seq.append(base[k])
    else:
        for g in range(k):
            seq += [tail[g], base[g]]
    return tuple(seq)


def _can_thread_long(d: Decomposition, tail) -> bool:
    return all(d.degree(v) > g for g, v in enumerate(tail, start=1))


def side_path_variants(pd: PrunedDecomposition, side: str) -> list[tuple[int, ...]]:
    """Candidate side paths, longest first.

    The core-ended form ``(y1,u1,...,u_k,y_{k+1})`` needs every kept vertex to
    have degree above its position; the tail-started form only needs
    ``d(u_g) >= g``, which pruning guarantees.
    """
    d = pd.base
    tail, base = (pd.kept_a2, d.b1) if side == A2 else (pd.kept_b2, d.a1)
    if not tail:
        return [()]
    out = []
    if _can_thread_long(d, tail):
        out.append(_thread(d, tail, base, True))
    out.append(_thread(d, tail, base, False))
    return out


def side_path(pd: PrunedDecomposition, side: str) -> tuple[int, ...]:
    return side_path_variants(pd, side)[0]


def core_path(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Longest alternating path in the complete bipartite graph on ``a`` x ``b``."""
    if not a and not b:
        return ()
    if not a or not b:
        return ((a or b)[0],)
    if len(a) < len(b):
        longer, shorter = b, a
    else:
        longer, shorter = a, b
    k = len(shorter)
    seq: list[int] = []
    for t in range(k):
        seq += [longer[t], shorter[t]]
    if len(longer) > k:
        seq.append(longer[k])
    return tuple(seq)


def stitch_parts(pd: PrunedDecomposition) -> StitchParts:
    d = pd.base
    p1, p2 = side_path(pd, A2), side_path(pd, B2)
    a_res = tuple(x for x in d.a1 if x not in set(p2))
    b_res = tuple(y for y in d.b1 if y not in set(p1))
    p3 = core_path(a_res, b_res)
    return StitchParts(d.graph, p1, p2, a_res, b_res, p3, pd.kept_a2, pd.kept_b2)


def _rev(seq):
    return tuple(reversed(seq))


def _six_patterns(parts: StitchParts, d: Decomposition) -> list[tuple[int, ...]]:
    p1, p2, p3 = parts.p1, parts.p2, parts.p3
    na, nb = len(parts.a1_residual), len(parts.b1_residual)
    a2 = set(d.a2)
    tail_start = bool(p1) and p1[0] in a2
    trimmed = p3[:-1]
    if na == nb:
        if not tail_start:
            return [p2 + _rev(p3) + p1]
        return [p1 + p3 + _rev(p2)]
    # the trimmed forms drop t_c; keeping it is valid whenever no P2 end needs it
    if na > nb:
        if not tail_start:
            return [p2 + _rev(p1) + p3]
        return [p2 + _rev(trimmed) + _rev(p1), p2 + _rev(p3) + _rev(p1)]
    if not tail_start:
        return [p2 + trimmed + p1, p2 + p3 + p1]
    return [p2 + trimmed + _rev(p1), p2 + p3 + _rev(p1)]


def _arrangements(na: int, nb: int):
    """Item counts ``(a, b)`` worth trying when ``na``/``nb`` items are available."""
    seen = set()
    for a in range(max(0, na - 2), na + 1):
        for b in (a - 1, a, a + 1):
            if 0 <= b <= nb and a + b > 0:
                seen.add((a, b))
    for b in range(max(0, nb - 2), nb + 1):
        for a in (b - 1, b, b + 1):
            if 0 <= a <= na and a + b > 0:
                seen.add((a, b))
    return sorted(seen)


def _pick(count, units, free_piece, end_piece, ends):
    """Choose ``count`` items of one side: pieces first, then single core vertices."""
    chosen_end = end_piece if end_piece and ends > 0 and count > 0 else ()
    rest = count - (1 if chosen_end else 0)
    chosen_free = free_piece if free_piece and rest > 0 else ()
    rest -= 1 if chosen_free else 0
    if rest > len(units):
        return None
    return chosen_end, chosen_free, list(units[:rest])


def _glue(d: Decomposition, p1: tuple[int, ...], p2: tuple[int, ...]) -> tuple[int, ...]:
    """Longest path through the complete core with the side paths as super-vertices.

    A side path with both ends in the core behaves like one extra core vertex
    of its end side; one that starts in a tail can only be a path endpoint.
    """
    a2, b2 = set(d.a2), set(d.b2)
    used1, used2 = set(p1), set(p2)
    units_a = [x for x in d.a1 if x not in used2]
    units_b = [y for y in d.b1 if y not in used1]
    p1_end = bool(p1) and p1[0] in a2
    p2_end = bool(p2) and p2[0] in b2
    free_b = () if p1_end else p1
    end_b = p1 if p1_end else ()
    free_a = () if p2_end else p2
    end_a = p2 if p2_end else ()
    na = len(units_a) + bool(free_a) + bool(end_a)
    nb = len(units_b) + bool(free_b) + bool(end_b)
    best: tuple[int, ...] = ()
    for a, b in _arrangements(na, nb):
        start_a = a >= b
        ends_a = (2 if a > b else 1 if a == b else 0) if a else 0
        ends_b = (2 if b > a else 1 if a == b else 0) if b else 0
        pa = _pick(a, units_a, free_a, end_a, ends_a)
        pb = _pick(b, units_b, free_b, end_b, ends_b)
        if pa is None or pb is None:
            continue
        seq = _lay_out(a, b, start_a, pa, pb)
        if len(seq) > len(best):
            best = seq
    return best


def _lay_out(a: int, b: int, start_a: bool, pa, pb) -> tuple[int, ...]:
    total = a + b
    sides = [start_a if k % 2 == 0 else not start_a for k in range(total)]
    slots: list[tuple[int, ...] | None] = [None] * total
    for is_a, (end_piece, free_piece, units) in ((True, pa), (False, pb)):
        mine = [k for k in range(total) if sides[k] == is_a]
        if end_piece:
            if mine[0] == 0:
                slots[0] = end_piece
                mine = mine[1:]
            else:
                slots[mine[-1]] = _rev(end_piece)
                mine = mine[:-1]
        if free_piece:
            slots[mine[0]] = free_piece
            mine = mine[1:]
        for k, u in zip(mine, units):
            slots[k] = (u,)
    seq: tuple[int, ...] = ()
    for item in slots:
        seq += item
    return seq


def _variants(d: Decomposition, kept: tuple[int, ...], base: tuple[int, ...]):
    if not kept:
        return [()]
    out = [(), _thread(d, kept, base, False)]
    if _can_thread_long(d, kept):
        out.append(_thread(d, kept, base, True))
    return out


def stitch(parts: StitchParts, d: Decomposition | None = None) -> tuple[int, ...]:
    """Longest valid path assembled from side paths and the free core.

    The six classic gluing patterns come first so they win ties.  After them
    each combination of side-path shapes (absent, tail-started, core-ended)
    is glued through the core, which also covers empty pieces and spare core
    vertices at either end.
    """
    g = parts.graph
    cands = []
    if d is not None:
        cands += _six_patterns(parts, d)
    cands.append(parts.p3)
    cands += [parts.p1, parts.p2]
    if d is not None:
        for s1 in _variants(d, parts.kept_a2, d.b1):
            for s2 in _variants(d, parts.kept_b2, d.a1):
                cands.append(_glue(d, s1, s2))
    best: tuple[int, ...] | None = None
    for seq in cands:
        if best is not None and len(seq) <= len(best):
            continue
        if seq and validate_sequence(g, VertexSequence(seq, PATH)):
            best = seq
    if best is None:
        raise ConstructionInvalid("no stitch candidate is a valid path")
    return best


def longest_path(g: Graph, d: Decomposition | None = None) -> VertexSequence:
    if d is None:
        d = decompose(g)
    ham = hamiltonian_path(d)
    if ham.answer:
        return ham.witness
    pd = prune(d)
    parts = stitch_parts(pd)
    return VertexSequence(stitch(parts, d), PATH)


def min_leaf_spanning_tree(g: Graph, d: Decomposition | None = None) -> SpanningTree:
    """The longest path with every other vertex hung on it as a leaf."""
    path = longest_path(g, d).seq
    position = {v: k for k, v in enumerate(path)}
    edges = list(zip(path, path[1:]))
    for v in g.vertices:
        if v in position:
            continue
        hosts = [w for w in g.adj[v] if w in position]
        if not hosts:
            raise AttachmentFailure(f"vertex {g.label(v)} has no neighbor on the longest path")
        edges.append((min(hosts, key=position.__getitem__), v))
    tree = SpanningTree.from_edges(path[0], g.vertices, edges)
    verdict = validate_tree(g, tree)
    if not verdict:
        raise ConstructionInvalid(f"spanning tree invalid: {verdict.violation}")
    return tree
