"""Exponential-time ground truth.

Nothing here uses the structure theory: every routine works on arbitrary
small graphs and is what the polynomial algorithms are checked against.
"""

from __future__ import annotations

import time
from itertools import combinations
from typing import Iterator

import networkx as nx
import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

from nno.errors import OracleTimeout, SizeGuardError
from nno.graph import CYCLE, PATH, Graph, SpanningTree, VertexSequence
from nno.recognition import _two_color, classify

__all__ = [
    "brute_hamiltonian",
    "brute_longest_path",
    "longest_path_subset_dp",
    "brute_steiner_path",
    "steiner_table",
    "brute_mlst",
    "mlst_by_enumeration",
    "enumerate_in_class",
    "to_networkx",
]


def _guard(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise SizeGuardError(f"{what} oracle limited to {limit} vertices, got {g.n}")


class _Clock:
    def __init__(self, timeout_ms):
        self.deadline = None if timeout_ms is None else time.monotonic() + timeout_ms / 1000
        self.ticks = 0

    def tick(self):
        if self.deadline is None:
            return
        self.ticks += 1
        if self.ticks & 0x3FF == 0 and time.monotonic() > self.deadline:
            raise OracleTimeout("oracle call exceeded its time budget")


def _adj_masks(g: Graph) -> list[int]:
    # bit k-1 stands for vertex k
    masks = [0] * g.n
    for v in g.vertices:
        for w in g.adj[v]:
            masks[v - 1] |= 1 << (w - 1)
    return masks


def _seq(bits_order: list[int]) -> tuple[int, ...]:
    return tuple(b + 1 for b in bits_order)


# ---------------------------------------------------------------------------
# Hamiltonicity


def brute_hamiltonian(g: Graph, mode: str = CYCLE, timeout_ms=None) -> VertexSequence | None:
    """Backtracking search for a Hamiltonian cycle or path.

    Dead ``(visited, endpoint)`` states are memoized, which bounds the work
    by ``2^n * n`` and makes the search exact up to the size guard.
    """
    _guard(g, 18, "Hamiltonian")
    if mode not in (CYCLE, PATH):
        raise ValueError(mode)
    n = g.n
    if n == 0 or (mode == CYCLE and n < 4):
        return None
    adj = _adj_masks(g)
    full = (1 << n) - 1
    clock = _Clock(timeout_ms)
    dead: set[tuple[int, int]] = set()

    def extend(path: list[int], mask: int) -> bool:
        clock.tick()
        v = path[-1]
        if mask == full:
            return mode == PATH or bool(adj[v] & 1 << path[0])
        if (mask, v) in dead:
            return False
        free = adj[v] & ~mask
        while free:
            low = free & -free
            w = low.bit_length() - 1
            free ^= low
            path.append(w)
            if extend(path, mask | low):
                return True
            path.pop()
        # the start vertex is fixed per search, so (mask, v) determines the future
        dead.add((mask, v))
        return False

    starts = [0] if mode == CYCLE else range(n)
    for s in starts:
        path = [s]
        if extend(path, 1 << s):
            return VertexSequence(_seq(path), mode)
    return None


# ---------------------------------------------------------------------------
# longest path


def brute_longest_path(g: Graph, timeout_ms=None) -> VertexSequence:
    """Depth-first enumeration of simple paths, skipping repeated states.

    Two partial paths with the same vertex set and the same last vertex have
    identical futures, so only the first is expanded.
    """
    _guard(g, 16, "longest-path")
    n = g.n
    if n == 0:
        return VertexSequence((), PATH)
    adj = _adj_masks(g)
    clock = _Clock(timeout_ms)
    seen: set[tuple[int, int]] = set()
    best: list[int] = [0]
    cap = n

    def dfs(path: list[int], mask: int):
        clock.tick()
        if len(path) > len(best):
            best[:] = path
        if len(best) == cap:
            return
        key = (mask, path[-1])
        if key in seen:
            return
        seen.add(key)
        free = adj[path[-1]] & ~mask
        while free:
            low = free & -free
            free ^= low
            path.append(low.bit_length() - 1)
            dfs(path, mask | low)
            path.pop()
            if len(best) == cap:
                return

    for s in range(n):
        dfs([s], 1 << s)
        if len(best) == cap:
            break
    return VertexSequence(_seq(best), PATH)


def _path_reach(g: Graph, timeout_ms=None) -> list[int]:
    """``reach[mask]``: bitmask of vertices ending a simple path whose vertex set is ``mask``."""
    n = g.n
    adj = _adj_masks(g)
    clock = _Clock(timeout_ms)
    reach = [0] * (1 << n)
    for v in range(n):
        reach[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        ends = reach[mask]
        if not ends:
            continue
        clock.tick()
        e = ends
        while e:
            low = e & -e
            e ^= low
            nxt = adj[low.bit_length() - 1] & ~mask
            while nxt:
                w = nxt & -nxt
                nxt ^= w
                reach[mask | w] |= w
    return reach


def _unwind(g: Graph, reach: list[int], mask: int) -> tuple[int, ...]:
    adj = _adj_masks(g)
    end = reach[mask] & -reach[mask]
    order = [end.bit_length() - 1]
    while mask != end:
        mask ^= end
        cand = reach[mask] & adj[order[-1]]
        end = cand & -cand
        order.append(end.bit_length() - 1)
    return _seq(order[::-1])


def longest_path_subset_dp(g: Graph, timeout_ms=None) -> VertexSequence:
    """Second longest-path oracle: dynamic programming over vertex subsets."""
    _guard(g, 16, "longest-path")
    if g.n == 0:
        return VertexSequence((), PATH)
    reach = _path_reach(g, timeout_ms)
    best = max((m for m in range(1, 1 << g.n) if reach[m]), key=lambda m: (bin(m).count("1"), -m))
    return VertexSequence(_unwind(g, reach, best), PATH)


# ---------------------------------------------------------------------------
# Steiner path


def _terminal_mask(g: Graph, terminals) -> int:
    mask = 0
    for v in terminals:
        if not 1 <= v <= g.n:
            raise ValueError(f"terminal {v} not in graph")
        mask |= 1 << (v - 1)
    return mask


def brute_steiner_path(g: Graph, terminals, timeout_ms=None) -> VertexSequence | None:
    """Fewest-vertex simple path through every terminal, or None."""
    _guard(g, 14, "Steiner")
    want = _terminal_mask(g, terminals)
    if want == 0:
        raise ValueError("terminal set is empty")
    reach = _path_reach(g, timeout_ms)
    best = None
    for mask in range(1, 1 << g.n):
        if reach[mask] and mask & want == want:
            size = bin(mask).count("1")
            if best is None or size < best[0]:
                best = (size, mask)
    if best is None:
        return None
    return VertexSequence(_unwind(g, reach, best[1]), PATH)


def steiner_table(g: Graph, timeout_ms=None) -> list[int | None]:
    """Minimum path size for every terminal mask at once (None if no path exists).

    Superset-minimum transform over the path-reach table.
    """
    _guard(g, 14, "Steiner")
    n = g.n
    reach = _path_reach(g, timeout_ms)
    inf = n + 1
    best = [bin(m).count("1") if reach[m] else inf for m in range(1 << n)]
    for bit in range(n):
        b = 1 << bit
        for m in range(1 << n):
            if not m & b and best[m | b] < best[m]:
                best[m] = best[m | b]
    return [None if x == inf else x for x in best]


# ---------------------------------------------------------------------------
# minimum-leaf spanning tree


def brute_mlst(g: Graph) -> SpanningTree:
    """Spanning tree with fewest leaves, by an exact single-commodity-flow MILP."""
    _guard(g, 12, "MLST")
    n = g.n
    if n == 1:
        return SpanningTree({1: None}, 1)
    edges = list(g.edges())
    m = len(edges)
    # columns: x_e (m) | flow u->v (m) | flow v->u (m) | leaf_v (n)
    nvar = 3 * m + n
    rows, lo, hi = [], [], []

    def row():
        return np.zeros(nvar)

    r = row()
    r[:m] = 1
    rows.append(r), lo.append(n - 1), hi.append(n - 1)
    for k in range(m):
        for off in (m, 2 * m):
            r = row()
            r[off + k] = 1
            r[k] = -(n - 1)
            rows.append(r), lo.append(-np.inf), hi.append(0)
    for v in g.vertices:
        r = row()
        for k, (a, b) in enumerate(edges):
            if b == v:
                r[m + k] += 1
                r[2 * m + k] -= 1
            elif a == v:
                r[2 * m + k] += 1
                r[m + k] -= 1
        need = -(n - 1) if v == 1 else 1
        rows.append(r), lo.append(need), hi.append(need)
        r = row()
        for k, (a, b) in enumerate(edges):
            if v in (a, b):
                r[k] = 1
        r[3 * m + v - 1] = 2
        rows.append(r), lo.append(2), hi.append(np.inf)
    cost = np.zeros(nvar)
    cost[3 * m :] = 1
    integrality = np.zeros(nvar)
    integrality[:m] = 1
    integrality[3 * m :] = 1
    upper = np.full(nvar, np.inf)
    upper[:m] = 1
    upper[3 * m :] = 1
    res = milp(
        cost,
        constraints=LinearConstraint(np.array(rows), lo, hi),
        integrality=integrality,
        bounds=Bounds(np.zeros(nvar), upper),
    )
    if not res.success:
        raise ValueError(f"MLST solver failed: {res.message}")
    chosen = [edges[k] for k in range(m) if res.x[k] > 0.5]
    return SpanningTree.from_edges(1, g.vertices, chosen)


def mlst_by_enumeration(g: Graph) -> int:
    """Minimum leaf count by trying every (n-1)-edge subset.  Tiny graphs only."""
    _guard(g, 8, "MLST enumeration")
    n = g.n
    if n == 1:
        return 0
    best = None
    for subset in combinations(list(g.edges()), n - 1):
        t = nx.Graph()
        t.add_nodes_from(g.vertices)
        t.add_edges_from(subset)
        if nx.is_tree(t):
            leaves = sum(1 for _, d in t.degree() if d == 1)
            best = leaves if best is None else min(best, leaves)
    return best


# ---------------------------------------------------------------------------
# enumeration


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


class _IsoBucket:
    """Exact isomorphism dedup: hash buckets, VF2 inside a bucket."""

    def __init__(self):
        self.buckets: dict[tuple, list[nx.Graph]] = {}

    def add(self, g: Graph) -> bool:
        h = to_networkx(g)
        degs = tuple(sorted(d for _, d in h.degree()))
        key = (g.n, g.m, degs, nx.weisfeiler_lehman_graph_hash(h, iterations=3))
        bucket = self.buckets.setdefault(key, [])
        for other in bucket:
            if nx.is_isomorphic(h, other):
                return False
        bucket.append(h)
        return True


def enumerate_in_class(n: int) -> Iterator[Graph]:
    """Every in-class graph on 2..n vertices, once per isomorphism class.

    The class is closed under taking induced subgraphs, and every connected
    graph has a vertex whose removal keeps it connected, so each member on
    k+1 vertices arises from a member on k vertices by adding one vertex
    adjacent to a nonempty subset of one color class.
    """
    if n > 10:
        raise SizeGuardError(f"enumeration limited to 10 vertices, got {n}")
    if n < 2:
        return
    level = [Graph.from_edges(2, [(1, 2)])]
    yield from level
    for k in range(2, n):
        seen = _IsoBucket()
        nxt: list[Graph] = []
        for g in level:
            color, _, _ = _two_color(g)
            for side in (0, 1):
                members = [v for v in g.vertices if color[v] == side]
                for r in range(1, len(members) + 1):
                    for nbrs in combinations(members, r):
                        h = Graph.from_edges(k + 1, list(g.edges()) + [(v, k + 1) for v in nbrs])
                        if classify(h).in_class and seen.add(h):
                            nxt.append(h)
        yield from nxt
        level = nxt
