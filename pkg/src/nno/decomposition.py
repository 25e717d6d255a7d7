"""Biclique core plus nested tails.

A connected P5-free chordal bipartite graph splits as a complete bipartite
core ``(A1, B1)`` and tails ``A2``/``B2``.  Sorted by degree, tail
neighborhoods form inclusion chains, and after reordering the core sides each
tail neighborhood is a prefix of the opposite core side.  Every construction
downstream reads adjacency off those prefixes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from nno.errors import DecompositionFailure, NotInClassError
from nno.graph import Bipartition, Graph
from nno.recognition import classify, is_bipartite

__all__ = [
    "Biclique",
    "Decomposition",
    "LemmaReport",
    "enumerate_maximal_bicliques",
    "decompose",
    "check_lemmas",
]


@dataclass(frozen=True)
class Biclique:
    left: frozenset[int]
    right: frozenset[int]

    def key(self):
        return (tuple(sorted(self.left)), tuple(sorted(self.right)))


@dataclass(frozen=True)
class Decomposition:
    """Parts of the structural normal form.

    ``a1``/``b1`` are the core sides in prefix order; ``a2``/``b2`` the tails
    in non-decreasing degree order (ties by vertex id).
    """

    graph: Graph = field(repr=False)
    bipartition: Bipartition = field(repr=False)
    a1: tuple[int, ...]
    b1: tuple[int, ...]
    a2: tuple[int, ...]
    b2: tuple[int, ...]

    @property
    def i(self) -> int:
        return len(self.a1)

    @property
    def j(self) -> int:
        return len(self.b1)

    @property
    def p(self) -> int:
        return len(self.a2)

    @property
    def q(self) -> int:
        return len(self.b2)

    @property
    def size_a(self) -> int:
        return self.i + self.p

    @property
    def size_b(self) -> int:
        return self.j + self.q

    def degree(self, v: int) -> int:
        return self.graph.degree(v)

    def part_of(self, v: int) -> str:
        for name in ("a1", "b1", "a2", "b2"):
            if v in getattr(self, name):
                return name.upper()
        raise KeyError(v)

    def swapped(self) -> "Decomposition":
        """Same decomposition with the roles of the two sides exchanged."""
        return Decomposition(self.graph, self.bipartition.swapped(), self.b1, self.a1, self.b2, self.a2)

    def to_json(self) -> dict:
        g = self.graph
        return {
            "i": self.i,
            "j": self.j,
            "p": self.p,
            "q": self.q,
            "A1": g.labelled(self.a1),
            "B1": g.labelled(self.b1),
            "A2": g.labelled(self.a2),
            "B2": g.labelled(self.b2),
            "degrees": {g.label(v): g.degree(v) for v in g.vertices},
        }


def enumerate_maximal_bicliques(g: Graph, bip: Bipartition) -> list[Biclique]:
    """All maximal bicliques with both sides nonempty.

    The right sides of maximal bicliques are exactly the nonempty
    intersections of neighborhoods of A-vertices, so we close the family of
    A-neighborhoods under pairwise intersection until it stops growing.
    """
    adj = g.adj
    family: set[frozenset[int]] = {adj[a] for a in bip.side_a if adj[a]}
    frontier = set(family)
    while frontier:
        fresh = set()
        for s in frontier:
            for t in family:
                x = s & t
                if x and x not in family and x not in fresh:
                    fresh.add(x)
        family |= fresh
        frontier = fresh
    out = []
    for right in family:
        left = frozenset(a for a in bip.side_a if right <= adj[a])
        out.append(Biclique(left, right))
    out.sort(key=Biclique.key)
    return out


def _tails_strictly_inside(g: Graph, bip: Bipartition, bc: Biclique) -> bool:
    adj = g.adj
    for a in bip.side_a - bc.left:
        if not adj[a] < bc.right:
            return False
    for b in bip.side_b - bc.right:
        if not adj[b] < bc.left:
            return False
    return True


def _prefix_order(base: frozenset[int], tails: tuple[int, ...], adj) -> tuple[int, ...]:
    order: list[int] = []
    placed: set[int] = set()
    for t in tails:
        block = sorted(adj[t] - placed)
        order += block
        placed |= adj[t]
    order += sorted(base - placed)
    return tuple(order)


def _build(g: Graph, bip: Bipartition, bc: Biclique) -> Decomposition:
    adj = g.adj
    a2 = tuple(sorted(bip.side_a - bc.left, key=lambda v: (len(adj[v]), v)))
    b2 = tuple(sorted(bip.side_b - bc.right, key=lambda v: (len(adj[v]), v)))
    b1 = _prefix_order(bc.right, a2, adj)
    a1 = _prefix_order(bc.left, b2, adj)
    return Decomposition(g, bip, a1, b1, a2, b2)


def decompose(g: Graph, check_class: bool = True) -> Decomposition:
    """Pick a maximum biclique whose complement satisfies the tail conditions.

    Candidates are maximal bicliques passing the strict-subset test, ranked
    by side imbalance ``|i - j|``, then by total size, then lexicographically.
    The first whose orderings pass :func:`check_lemmas` wins.
    """
    if check_class:
        report = classify(g)
        if not report.in_class:
            raise NotInClassError(f"graph is not in the class: {report.reason}", report)
    bip = is_bipartite(g)
    if not isinstance(bip, Bipartition):
        raise NotInClassError("graph is not bipartite")
    cands = [bc for bc in enumerate_maximal_bicliques(g, bip) if _tails_strictly_inside(g, bip, bc)]
    cands.sort(key=lambda bc: (abs(len(bc.left) - len(bc.right)), -(len(bc.left) + len(bc.right)), bc.key()))
    for bc in cands:
        d = _build(g, bip, bc)
        if check_lemmas(g, d).ok:
            return d
    raise DecompositionFailure(f"no maximal biclique yields a valid decomposition of {g!r}")


@dataclass(frozen=True)
class LemmaReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first(self) -> str | None:
        return self.violations[0] if self.violations else None

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": list(self.violations)}


def check_lemmas(g: Graph, d: Decomposition) -> LemmaReport:
    """Re-verify every structural claim the constructions depend on."""
    adj = g.adj
    bad: list[str] = []
    lab = g.label
    a1, b1 = set(d.a1), set(d.b1)
    for x in d.a1:
        if not b1 <= adj[x]:
            bad.append(f"core: {lab(x)} misses part of B1")
    # each tail vertex misses some core vertex on the other side
    for u in d.a2:
        if b1 <= adj[u]:
            bad.append(f"tail-universal: {lab(u)} in A2 is adjacent to all of B1")
    for v in d.b2:
        if a1 <= adj[v]:
            bad.append(f"tail-universal: {lab(v)} in B2 is adjacent to all of A1")
    # tail neighborhoods sit strictly inside the opposite core side
    for u in d.a2:
        if not adj[u] < b1:
            bad.append(f"tail-subset: N({lab(u)}) is not a strict subset of B1")
    for v in d.b2:
        if not adj[v] < a1:
            bad.append(f"tail-subset: N({lab(v)}) is not a strict subset of A1")
    # degree order forces neighborhood inclusion, for every pair
    for tail in (d.a2, d.b2):
        for s in tail:
            for t in tail:
                if s != t and len(adj[s]) <= len(adj[t]) and not adj[s] <= adj[t]:
                    bad.append(f"degree-inclusion: d({lab(s)}) <= d({lab(t)}) but N({lab(s)}) not in N({lab(t)})")
    # nesting chain along the stored order
    for tail in (d.a2, d.b2):
        for s, t in zip(tail, tail[1:]):
            if not adj[s] <= adj[t]:
                bad.append(f"nesting: N({lab(s)}) not in N({lab(t)})")
    # prefix property
    for tail, base in ((d.a2, d.b1), (d.b2, d.a1)):
        for s in tail:
            if set(base[: len(adj[s])]) != adj[s]:
                bad.append(f"prefix: N({lab(s)}) is not an initial segment of the core order")
    return LemmaReport(tuple(bad))
