import sys
import functools

import pytest

from nno.fixtures import fixture
from nno.oracle import enumerate_in_class


@functools.lru_cache(maxsize=None)
def universe(max_n: int):
    return tuple(enumerate_in_class(max_n))


@pytest.fixture(scope="session")
def small_universe():
    """Every in-class graph on at most 8 vertices (71 graphs)."""
    return universe(8)


@pytest.fixture
def ex1():
    return fixture("EX1")


@pytest.fixture
def ex2():
    return fixture("EX2")


@pytest.fixture
def ex6():
    return fixture("EX6")


def ids(g, *labels):
    return [g.vertex_by_label(x) for x in labels]


def same_cycle(a, b):
    """Equal as cyclic sequences, up to rotation and direction."""
    a, b = list(a), list(b)
    if len(a) != len(b) or set(a) != set(b):
        return False
    k = b.index(a[0])
    rot = b[k:] + b[:k]
    return rot == a or [rot[0]] + rot[1:][::-1] == a


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
