"""Random in-class instances: a complete core with prefix-attached tails."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field

from nno.decomposition import decompose
from nno.errors import NNOError
from nno.graph import Graph
from nno.recognition import classify

__all__ = ["GenSpec", "SpecError", "RejectionLimitExceeded", "generate", "random_spec"]

log = logging.getLogger(__name__)


class SpecError(NNOError, ValueError):
    pass


class RejectionLimitExceeded(NNOError):
    def __init__(self, message, instance=None):
        super().__init__(message)
        self.instance = instance


@dataclass(frozen=True)
class GenSpec:
    i: int
    j: int
    a2_degrees: tuple[int, ...] = ()
    b2_degrees: tuple[int, ...] = ()
    seed: int = 0
    shuffle: bool = False

    def validate(self) -> None:
        if self.i < 1 or self.j < 1:
            raise SpecError("core sides must be nonempty")
        for name, degs, bound in (("a2", self.a2_degrees, self.j), ("b2", self.b2_degrees, self.i)):
            if list(degs) != sorted(degs):
                raise SpecError(f"{name} degrees must be non-decreasing")
            for k in degs:
                if not 1 <= k < bound:
                    raise SpecError(f"{name} degree {k} outside 1..{bound - 1}")


@dataclass
class GenStats:
    rejections: int = 0
    attempts: list = field(default_factory=list)


def _build(spec: GenSpec) -> Graph:
    i, j = spec.i, spec.j
    xs = list(range(1, i + 1))
    ys = list(range(i + 1, i + j + 1))
    nxt = i + j + 1
    edges = [(x, y) for x in xs for y in ys]
    labels = [f"x{k}" for k in range(1, i + 1)] + [f"y{k}" for k in range(1, j + 1)]
    for k, deg in enumerate(spec.a2_degrees, start=1):
        edges += [(nxt, y) for y in ys[:deg]]
        labels.append(f"u{k}")
        nxt += 1
    for k, deg in enumerate(spec.b2_degrees, start=1):
        edges += [(nxt, x) for x in xs[:deg]]
        labels.append(f"v{k}")
        nxt += 1
    g = Graph.from_edges(nxt - 1, edges, labels)
    if spec.shuffle:
        perm = list(g.vertices)
        random.Random(spec.seed).shuffle(perm)
        g = g.relabel(perm)
    return g


def _perturb(spec: GenSpec, rng: random.Random) -> GenSpec:
    a2 = tuple(sorted(max(1, d - rng.randint(0, 1)) for d in spec.a2_degrees))
    b2 = tuple(sorted(max(1, d - rng.randint(0, 1)) for d in spec.b2_degrees))
    return GenSpec(spec.i, spec.j, a2, b2, rng.randrange(2**31), spec.shuffle)


def generate(spec: GenSpec, max_rejections: int = 10, stats: GenStats | None = None) -> Graph:
    """Build the instance and confirm it is in the class before returning it."""
    spec.validate()
    rng = random.Random(spec.seed)
    current = spec
    for _ in range(max_rejections + 1):
        g = _build(current)
        if classify(g).in_class:
            decompose(g, check_class=False)
            return g
        log.warning("generator rejected %s", current)
        if stats is not None:
            stats.rejections += 1
            stats.attempts.append(current)
        current = _perturb(current, rng)
    raise RejectionLimitExceeded(f"{max_rejections} rejections starting from {spec}", g)


def random_spec(rng: random.Random, max_n: int = 14) -> GenSpec:
    """Draw a spec whose instance has at most ``max_n`` vertices."""
    while True:
        i = rng.randint(1, max(1, max_n // 2))
        j = rng.randint(1, max(1, max_n - i - 1))
        room = max_n - i - j
        p = rng.randint(0, room) if j > 1 else 0
        q = rng.randint(0, room - p) if i > 1 else 0
        a2 = tuple(sorted(rng.randint(1, j - 1) for _ in range(p)))
        b2 = tuple(sorted(rng.randint(1, i - 1) for _ in range(q)))
        if i + j + p + q >= 2:
            return GenSpec(i, j, a2, b2, rng.randrange(2**31), True)
