"""Membership test for connected P5-free chordal bipartite graphs.

Every negative answer carries a forbidden structure that can be re-checked
with plain adjacency probes: an odd cycle, a chordless cycle on six or more
vertices, or an induced path on five vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from nno.errors import DisconnectedGraphError
from nno.graph import CYCLE, PATH, Bipartition, Graph, VertexSequence, connected_components

__all__ = [
    "ClassReport",
    "is_bipartite",
    "find_chordless_cycle_ge6",
    "find_induced_p5",
    "classify",
    "is_induced_path",
    "is_chordless_cycle",
]


@dataclass(frozen=True)
class ClassReport:
    is_bipartite: bool
    odd_cycle: VertexSequence | None
    is_chordal_bipartite: bool
    chordless_cycle: VertexSequence | None
    is_p5_free: bool
    induced_p5: VertexSequence | None
    is_connected: bool
    in_class: bool
    reason: str | None = None

    def to_json(self, g: Graph | None = None) -> dict:
        def seq(s):
            if s is None:
                return None
            return g.labelled(s.seq) if g is not None else list(s.seq)

        return {
            "inClass": self.in_class,
            "isBipartite": self.is_bipartite,
            "oddCycle": seq(self.odd_cycle),
            "isChordalBipartite": self.is_chordal_bipartite,
            "chordlessCycle": seq(self.chordless_cycle),
            "isP5Free": self.is_p5_free,
            "inducedP5": seq(self.induced_p5),
            "isConnected": self.is_connected,
            "reason": self.reason,
        }


def _two_color(g: Graph) -> tuple[dict[int, int], dict[int, int | None], tuple[int, int] | None]:
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for s in g.vertices:
        if s in color:
            continue
        color[s] = 0
        parent[s] = None
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj[u]):
                if w not in color:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return color, parent, (u, w)
    return color, parent, None


def _odd_cycle(parent: dict[int, int | None], u: int, w: int) -> VertexSequence:
    def chain(v):
        out = []
        while v is not None:
            out.append(v)
            v = parent[v]
        return out

    cu, cw = chain(u), chain(w)
    on_w = set(cw)
    lca = next(v for v in cu if v in on_w)
    left = cu[: cu.index(lca) + 1]
    right = cw[: cw.index(lca)]
    return VertexSequence(tuple(left + right[::-1]), CYCLE)


def is_bipartite(g: Graph) -> Bipartition | VertexSequence:
    """Two-color a connected graph by BFS layering.

    Returns the bipartition (the side holding the smallest vertex is A) or an
    odd cycle witnessing that none exists.
    """
    count, _ = connected_components(g)
    if count > 1:
        raise DisconnectedGraphError(f"graph has {count} components")
    color, parent, clash = _two_color(g)
    if clash is not None:
        return _odd_cycle(parent, *clash)
    side_a = frozenset(v for v, c in color.items() if c == 0)
    side_b = frozenset(v for v, c in color.items() if c == 1)
    return Bipartition(side_a, side_b)


def find_chordless_cycle_ge6(g: Graph) -> VertexSequence | None:
    # Grow induced paths whose first vertex is the smallest on the path; a
    # neighbor of the last vertex that touches only the first closes a
    # chordless cycle.
    adj = g.adj
    for s in g.vertices:
        path = [s]
        on_path = {s}
        # each frame: candidates left to try for the next vertex
        stack = [iter(sorted(w for w in adj[s] if w > s))]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            v = nxt
            if v in on_path:
                continue
            inner = path[1:-1]
            if any(v in adj[x] for x in inner):
                continue
            if len(path) >= 2 and s in adj[v]:
                if len(path) + 1 >= 6:
                    return VertexSequence(tuple(path + [v]), CYCLE)
                continue
            path.append(v)
            on_path.add(v)
            stack.append(iter(sorted(w for w in adj[v] if w > s)))
    return None


def find_induced_p5(g: Graph) -> VertexSequence | None:
    """Search for an induced path on five vertices, anchored on its middle vertex."""
    adj = g.adj
    for c in g.vertices:
        for b, d in combinations(sorted(adj[c]), 2):
            if d in adj[b]:
                continue
            for a in sorted(adj[b]):
                if a == c or a in adj[c] or a in adj[d] or a == d:
                    continue
                for e in sorted(adj[d]):
                    if e in (a, b, c) or e in adj[c] or e in adj[b] or e in adj[a]:
                        continue
                    return VertexSequence((a, b, c, d, e), PATH)
    return None


def classify(g: Graph) -> ClassReport:
    count, _ = connected_components(g)
    connected = g.n >= 1 and count == 1
    color, parent, clash = _two_color(g)
    odd = _odd_cycle(parent, *clash) if clash is not None else None
    cycle = find_chordless_cycle_ge6(g)
    p5 = find_induced_p5(g)
    bip = odd is None
    chordal = bip and cycle is None
    p5_free = p5 is None
    reason = None
    if not connected:
        reason = "graph is empty" if g.n == 0 else f"graph has {count} components"
    elif g.m == 0:
        reason = "graph has no edges"
    elif not bip:
        reason = "odd cycle"
    elif not chordal:
        reason = "chordless cycle of length at least 6"
    elif not p5_free:
        reason = "induced P5"
    return ClassReport(
        is_bipartite=bip,
        odd_cycle=odd,
        is_chordal_bipartite=chordal,
        chordless_cycle=cycle,
        is_p5_free=p5_free,
        induced_p5=p5,
        is_connected=connected,
        in_class=reason is None,
        reason=reason,
    )


def is_induced_path(g: Graph, seq) -> bool:
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return False
    for i, j in combinations(range(len(seq)), 2):
        if (seq[j] in g.adj[seq[i]]) != (j == i + 1):
            return False
    return True


def is_chordless_cycle(g: Graph, seq) -> bool:
    seq = list(seq)
    k = len(seq)
    if k < 3 or len(set(seq)) != k:
        return False
    for i, j in combinations(range(k), 2):
        consecutive = j == i + 1 or (i == 0 and j == k - 1)
        if (seq[j] in g.adj[seq[i]]) != consecutive:
            return False
    return True
