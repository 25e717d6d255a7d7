"""Named small graphs used across the test-suite, README and CLI demos.

Ground truth for these is never stored here; tests recompute it with the
oracles.
"""

from __future__ import annotations

from nno.graph import Graph

__all__ = ["from_labelled_edges", "complete_bipartite", "path_graph", "cycle_graph", "FIXTURES", "fixture"]


def from_labelled_edges(names: list[str], edges: list[tuple[str, str]]) -> Graph:
    index = {name: k for k, name in enumerate(names, start=1)}
    return Graph.from_edges(len(names), [(index[u], index[v]) for u, v in edges], names)


def _core(xs, ys):
    return [(x, y) for x in xs for y in ys]


def complete_bipartite(s: int, t: int) -> Graph:
    xs = [f"x{k}" for k in range(1, s + 1)]
    ys = [f"y{k}" for k in range(1, t + 1)]
    return from_labelled_edges(xs + ys, _core(xs, ys))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(k, k + 1) for k in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(k, k + 1) for k in range(1, n)] + [(n, 1)])


def ex1() -> Graph:
    xs, ys = ["x1", "x2", "x3"], ["y1", "y2", "y3"]
    edges = _core(xs, ys) + [("u1", "y1"), ("u1", "y2"), ("v1", "x1"), ("v1", "x2")]
    return from_labelled_edges(xs + ys + ["u1", "v1"], edges)


def ex2() -> Graph:
    xs, ys = ["x1", "x2"], ["y1", "y2"]
    edges = _core(xs, ys) + [("u1", "y1"), ("u2", "y1")]
    return from_labelled_edges(xs + ys + ["u1", "u2"], edges)


def ex6() -> Graph:
    xs, ys = ["x1", "x2", "x3"], ["y1", "y2", "y3"]
    edges = _core(xs, ys) + [("u1", "y1"), ("v1", "x1")]
    return from_labelled_edges(xs + ys + ["u1", "v1"], edges)


def c6_with_chord() -> Graph:
    g = cycle_graph(6)
    return Graph.from_edges(6, list(g.edges()) + [(1, 4)])


FIXTURES = {
    "EX1": ex1,
    "EX2": ex2,
    "EX6": ex6,
    "K11": lambda: complete_bipartite(1, 1),
    "K12": lambda: complete_bipartite(1, 2),
    "K13": lambda: complete_bipartite(1, 3),
    "K22": lambda: complete_bipartite(2, 2),
    "K33": lambda: complete_bipartite(3, 3),
    "P4": lambda: path_graph(4),
    "P5": lambda: path_graph(5),
    "C6": lambda: cycle_graph(6),
    "C6+chord": c6_with_chord,
    "K3": lambda: cycle_graph(3),
}


def fixture(name: str) -> Graph:
    return FIXTURES[name]()
