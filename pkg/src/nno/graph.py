"""Core graph type, text I/O, and validators for every certificate kind.

Vertices are dense integers ``1..n``.  Original labels (from adjacency JSON
input or ``l`` lines in an edge list) live in a side table and are only used
for reporting.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from nno.errors import GraphFormatError

__all__ = [
    "Graph",
    "Bipartition",
    "VertexSequence",
    "CutCertificate",
    "SpanningTree",
    "Verdict",
    "parse_graph",
    "serialize_graph",
    "read_graph",
    "connected_components",
    "validate_sequence",
    "validate_cut",
    "validate_tree",
]

PATH = "path"
CYCLE = "cycle"
CYCLE_BOUND = "cycle-bound"
PATH_BOUND = "path-bound"


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on vertices ``1..n``.

    ``adj[v]`` is the neighbor set of ``v``; ``adj[0]`` is an unused empty
    placeholder so that vertex ids index the tuple directly.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n + 1:
            raise ValueError("adjacency tuple must have n+1 entries")
        for v in self.vertices:
            nbrs = self.adj[v]
            if v in nbrs:
                raise GraphFormatError(f"loop at vertex {v}")
            for w in nbrs:
                if not 1 <= w <= self.n:
                    raise GraphFormatError(f"vertex {w} out of range 1..{self.n}")
                if v not in self.adj[w]:
                    raise ValueError(f"asymmetric adjacency {v}-{w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        sets: list[set[int]] = [set() for _ in range(n + 1)]
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"edge {u}-{v} out of range 1..{n}")
            if v in sets[u]:
                raise GraphFormatError(f"duplicate edge {u}-{v}")
            sets[u].add(v)
            sets[v].add(u)
        return cls(n, tuple(frozenset(s) for s in sets), tuple(labels) if labels else None)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in self.vertices:
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def label(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v - 1]

    def labelled(self, seq: Iterable[int]) -> list[str]:
        return [self.label(v) for v in seq]

    def vertex_by_label(self, name: str) -> int:
        if self.labels is not None and name in self.labels:
            return self.labels.index(name) + 1
        try:
            v = int(name)
        except ValueError:
            raise GraphFormatError(f"unknown vertex {name!r}") from None
        if not 1 <= v <= self.n:
            raise GraphFormatError(f"vertex {v} out of range 1..{self.n}")
        return v

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``(H, back)`` where ``back[k-1]`` is the original id of vertex k of H."""
        back = sorted(set(keep))
        index = {v: k for k, v in enumerate(back, start=1)}
        edges = [(index[u], index[v]) for u in back for v in self.adj[u] if v in index and u < v]
        labels = [self.label(v) for v in back] if self.labels is not None else None
        return Graph.from_edges(len(back), edges, labels), back

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v-1]``."""
        edges = [(perm[u - 1], perm[v - 1]) for u, v in self.edges()]
        labels = None
        if self.labels is not None:
            labels = [""] * self.n
            for v in self.vertices:
                labels[perm[v - 1] - 1] = self.labels[v - 1]
        return Graph.from_edges(self.n, edges, labels)

    def edge_key(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.edges())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Bipartition:
    side_a: frozenset[int]
    side_b: frozenset[int]

    def side_of(self, v: int) -> str:
        return "A" if v in self.side_a else "B"

    def swapped(self) -> "Bipartition":
        return Bipartition(self.side_b, self.side_a)


@dataclass(frozen=True)
class VertexSequence:
    seq: tuple[int, ...]
    kind: str = PATH

    def __post_init__(self):
        if self.kind not in (PATH, CYCLE):
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        object.__setattr__(self, "seq", tuple(self.seq))

    def __len__(self):
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)

    def reversed(self) -> "VertexSequence":
        return VertexSequence(self.seq[::-1], self.kind)


@dataclass(frozen=True)
class CutCertificate:
    """Chvátal-style obstruction: removing ``separator`` leaves too many pieces."""

    separator: frozenset[int]
    claimed_components: int
    mode: str

    def __post_init__(self):
        if self.mode not in (CYCLE_BOUND, PATH_BOUND):
            raise ValueError(f"unknown certificate mode {self.mode!r}")
        object.__setattr__(self, "separator", frozenset(self.separator))

    def to_json(self, g: Graph | None = None) -> dict:
        sep = sorted(self.separator)
        return {
            "separator": g.labelled(sep) if g is not None else sep,
            "claimedComponents": self.claimed_components,
            "mode": self.mode,
        }


@dataclass(frozen=True)
class SpanningTree:
    parent: Mapping[int, int | None]
    root: int

    def edges(self) -> list[tuple[int, int]]:
        return sorted((min(v, p), max(v, p)) for v, p in self.parent.items() if p is not None)

    def degrees(self) -> dict[int, int]:
        deg = {v: 0 for v in self.parent}
        for u, v in self.edges():
            deg[u] += 1
            deg[v] += 1
        return deg

    @property
    def leaf_count(self) -> int:
        deg = self.degrees()
        if len(deg) == 1:
            # single-vertex tree: the lone vertex is not counted as a leaf
            return 0
        return sum(1 for d in deg.values() if d == 1)

    @classmethod
    def from_edges(cls, root: int, vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> "SpanningTree":
        nbrs: dict[int, list[int]] = {v: [] for v in vertices}
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        parent: dict[int, int | None] = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(nbrs[u]):
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
        return cls(parent, root)


@dataclass(frozen=True)
class Verdict:
    kind: str
    valid: bool
    violation: str | None = None

    def __bool__(self):
        return self.valid

    def to_json(self) -> dict:
        out = {"kind": self.kind, "valid": self.valid}
        if self.violation is not None:
            out["violation"] = self.violation
        return out


# ---------------------------------------------------------------------------
# text I/O


def parse_graph(text: str, format: str = "edge-list") -> Graph:
    if format == "edge-list":
        return _parse_edge_list(text)
    if format == "adjacency-json":
        return _parse_adjacency_json(text)
    raise GraphFormatError(f"unknown graph format {format!r}")


def _parse_edge_list(text: str) -> Graph:
    n = None
    declared_m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    labels: dict[int, str] = {}
    max_seen = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] == "p":
                if n is not None:
                    raise GraphFormatError("duplicate header", lineno)
                if len(tok) == 4 and tok[1] == "edge":
                    tok = [tok[0]] + tok[2:]
                if len(tok) != 3:
                    raise GraphFormatError("header must be 'p <n> <m>'", lineno)
                n, declared_m = int(tok[1]), int(tok[2])
                if n < 0 or declared_m < 0:
                    raise GraphFormatError("negative size in header", lineno)
            elif tok[0] == "e":
                if len(tok) != 3:
                    raise GraphFormatError("edge line must be 'e <u> <v>'", lineno)
                u, v = int(tok[1]), int(tok[2])
                if u == v:
                    raise GraphFormatError(f"loop at vertex {u}", lineno)
                if u < 1 or v < 1 or (n is not None and max(u, v) > n):
                    raise GraphFormatError(f"vertex index out of range in edge {u}-{v}", lineno)
                key = (min(u, v), max(u, v))
                if key in seen:
                    raise GraphFormatError(f"duplicate edge {u}-{v}", lineno)
                seen.add(key)
                edges.append(key)
                max_seen = max(max_seen, u, v)
            elif tok[0] == "l":
                if len(tok) != 3:
                    raise GraphFormatError("label line must be 'l <v> <name>'", lineno)
                labels[int(tok[1])] = tok[2]
            elif tok[0] == "c":
                continue
            else:
                raise GraphFormatError(f"unexpected token {tok[0]!r}", lineno)
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"syntax error: {raw.strip()!r}", lineno) from None
    if n is None:
        n = max_seen
    elif declared_m is not None and declared_m != len(edges):
        raise GraphFormatError(f"header declares {declared_m} edges, found {len(edges)}")
    for v in labels:
        if not 1 <= v <= n:
            raise GraphFormatError(f"label for vertex {v} out of range 1..{n}")
    label_tuple = None
    if labels:
        label_tuple = tuple(labels.get(v, str(v)) for v in range(1, n + 1))
    return Graph.from_edges(n, edges, label_tuple)


def _parse_adjacency_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if isinstance(data, dict) and "adjacency" in data:
        data = data["adjacency"]
    if not isinstance(data, dict):
        raise GraphFormatError("adjacency JSON must be an object mapping vertex -> neighbor list")
    order: list[str] = []
    index: dict[str, int] = {}

    def vid(name) -> int:
        key = str(name)
        if key not in index:
            order.append(key)
            index[key] = len(order)
        return index[key]

    pairs: set[tuple[int, int]] = set()
    for name, nbrs in data.items():
        u = vid(name)
        if not isinstance(nbrs, list):
            raise GraphFormatError(f"neighbors of {name!r} must be a list")
        if len({str(w) for w in nbrs}) != len(nbrs):
            raise GraphFormatError(f"duplicate neighbor in list of {name!r}")
        for w in nbrs:
            v = vid(w)
            if u == v:
                raise GraphFormatError(f"loop at vertex {name!r}")
            pairs.add((min(u, v), max(u, v)))
    return Graph.from_edges(len(order), sorted(pairs), order)


def serialize_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    if g.labels is not None and any(g.labels[v - 1] != str(v) for v in g.vertices):
        lines += [f"l {v} {g.label(v)}" for v in g.vertices]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    fmt = "adjacency-json" if path.endswith(".json") else "edge-list"
    return parse_graph(text, fmt)


# ---------------------------------------------------------------------------
# components and validators


def connected_components(g: Graph, removed: Iterable[int] = ()) -> tuple[int, dict[int, int]]:
    """Count components of ``g - removed``; labels are 0-based component ids."""
    gone = set(removed)
    label: dict[int, int] = {}
    count = 0
    for s in g.vertices:
        if s in gone or s in label:
            continue
        label[s] = count
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in gone and w not in label:
                    label[w] = count
                    queue.append(w)
        count += 1
    return count, label


def validate_sequence(g: Graph, s: VertexSequence, required: Iterable[int] | None = None) -> Verdict:
    kind = f"{s.kind}"
    seq = s.seq
    if not seq:
        return Verdict(kind, False, "empty sequence")
    for v in seq:
        if not 1 <= v <= g.n:
            return Verdict(kind, False, f"vertex {v} not in graph")
    if len(set(seq)) != len(seq):
        dup = next(v for v in seq if seq.count(v) > 1)
        return Verdict(kind, False, f"vertex {g.label(dup)} repeated")
    if s.kind == CYCLE and len(seq) < 4:
        return Verdict(kind, False, f"cycle has {len(seq)} vertices, need at least 4")
    pairs = list(zip(seq, seq[1:]))
    if s.kind == CYCLE:
        pairs.append((seq[-1], seq[0]))
    for u, v in pairs:
        if v not in g.adj[u]:
            return Verdict(kind, False, f"{g.label(u)}-{g.label(v)} is not an edge")
    if required is not None:
        missing = set(required) - set(seq)
        if missing:
            return Verdict(kind, False, f"missing required vertex {g.label(min(missing))}")
    return Verdict(kind, True)


def validate_cut(g: Graph, c: CutCertificate) -> Verdict:
    kind = f"cut/{c.mode}"
    if not c.separator <= set(g.vertices):
        return Verdict(kind, False, "separator names vertices outside the graph")
    if c.mode == CYCLE_BOUND and not c.separator:
        # the cycle condition only constrains nonempty separators
        return Verdict(kind, False, "cycle-bound certificate needs a nonempty separator")
    actual, _ = connected_components(g, c.separator)
    if actual != c.claimed_components:
        return Verdict(kind, False, f"claimed {c.claimed_components} components, found {actual}")
    bound = len(c.separator) + (1 if c.mode == PATH_BOUND else 0)
    if actual <= bound:
        return Verdict(kind, False, f"{actual} components do not exceed bound {bound}")
    return Verdict(kind, True)


def validate_tree(g: Graph, t: SpanningTree) -> Verdict:
    kind = "spanning-tree"
    if set(t.parent) != set(g.vertices):
        return Verdict(kind, False, "tree does not span the vertex set")
    if t.parent.get(t.root, 0) is not None:
        return Verdict(kind, False, "root must have no parent")
    for v, p in t.parent.items():
        if v == t.root:
            continue
        if p is None:
            return Verdict(kind, False, f"second root {g.label(v)}")
        if p not in g.adj[v]:
            return Verdict(kind, False, f"{g.label(v)}-{g.label(p)} is not an edge")
    # parent pointers must all lead to the root
    for v in t.parent:
        seen = set()
        while v is not None:
            if v in seen:
                return Verdict(kind, False, "parent links contain a cycle")
            seen.add(v)
            v = t.parent[v]
    return Verdict(kind, True)
