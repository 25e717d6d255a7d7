"""Batch comparison of the polynomial algorithms against the oracles.

One CSV row per (instance, task).  Columns, in order:

``instance``     ``u<n>-<k>`` for the k-th enumerated graph on n vertices,
                 ``g-<k>`` for the k-th generated one
``task``         hamcycle, hampath, longest or mlst
``n``            vertex count
``decision``     yes/no for Hamiltonicity, path length or leaf count otherwise
``witness_len``  vertices in the returned witness (0 for none)
``oracle_len``   the oracle's value on the same scale, ``timeout`` if it gave up
``agree``        1, 0, or ``skip`` after an oracle timeout
``algo_ms`` / ``oracle_ms``  only with ``runtimes=True``; they vary run to run
"""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass
from typing import Iterator

from nno.decomposition import decompose
from nno.errors import OracleTimeout
from nno.generator import generate, random_spec
from nno.graph import CYCLE, PATH, Graph, validate_cut, validate_sequence
from nno.hamiltonicity import hamiltonian_cycle, hamiltonian_path
from nno.longest import longest_path, min_leaf_spanning_tree
from nno.oracle import brute_hamiltonian, brute_longest_path, brute_mlst, enumerate_in_class

__all__ = ["COLUMNS", "SweepRow", "instances", "sweep", "write_csv", "render_text"]

COLUMNS = ("instance", "task", "n", "decision", "witness_len", "oracle_len", "agree")
TIMING = ("algo_ms", "oracle_ms")
MLST_LIMIT = 12


@dataclass(frozen=True)
class SweepRow:
    instance: str
    task: str
    n: int
    decision: str
    witness_len: int
    oracle_len: str
    agree: str
    algo_ms: float = 0.0
    oracle_ms: float = 0.0

    @property
    def disagrees(self) -> bool:
        return self.agree == "0"

    def cells(self, runtimes: bool) -> list:
        out = [self.instance, self.task, self.n, self.decision, self.witness_len, self.oracle_len, self.agree]
        if runtimes:
            out += [f"{self.algo_ms:.3f}", f"{self.oracle_ms:.3f}"]
        return out


def instances(max_n: int, generated: int, seed: int, gen_max_n: int = 14) -> Iterator[tuple[str, Graph]]:
    counts: dict[int, int] = {}
    for g in enumerate_in_class(max_n):
        counts[g.n] = counts.get(g.n, 0) + 1
        yield f"u{g.n:02d}-{counts[g.n]:04d}", g
    rng = random.Random(seed)
    for k in range(1, generated + 1):
        yield f"g-{k:04d}", generate(random_spec(rng, gen_max_n))


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, (time.perf_counter() - t0) * 1000


def _ham_row(name, g, d, mode, timeout_ms) -> SweepRow:
    decide = hamiltonian_cycle if mode == CYCLE else hamiltonian_path
    dec, t_algo = _timed(decide, d)
    if dec.answer:
        ok = bool(validate_sequence(g, dec.witness))
    elif dec.certificate is not None:
        ok = bool(validate_cut(g, dec.certificate))
    else:
        # no cut can certify the two- and three-vertex cycle cases
        ok = mode == CYCLE and g.n < 4
    task = "hamcycle" if mode == CYCLE else "hampath"
    wlen = len(dec.witness) if dec.witness else 0
    try:
        ref, t_or = _timed(brute_hamiltonian, g, mode, timeout_ms)
    except OracleTimeout:
        return SweepRow(name, task, g.n, "yes" if dec.answer else "no", wlen, "timeout", "skip", t_algo)
    agree = ok and dec.answer == (ref is not None)
    return SweepRow(
        name, task, g.n, "yes" if dec.answer else "no", wlen, str(len(ref) if ref else 0), str(int(agree)), t_algo, t_or
    )


def _longest_row(name, g, d, timeout_ms) -> SweepRow:
    path, t_algo = _timed(longest_path, g, d)
    ok = bool(validate_sequence(g, path))
    try:
        ref, t_or = _timed(brute_longest_path, g, timeout_ms)
    except OracleTimeout:
        return SweepRow(name, "longest", g.n, str(len(path)), len(path), "timeout", "skip", t_algo)
    agree = ok and len(path) == len(ref)
    return SweepRow(name, "longest", g.n, str(len(path)), len(path), str(len(ref)), str(int(agree)), t_algo, t_or)


def _mlst_row(name, g, d) -> SweepRow:
    tree, t_algo = _timed(min_leaf_spanning_tree, g, d)
    ref, t_or = _timed(brute_mlst, g)
    agree = tree.leaf_count == ref.leaf_count
    return SweepRow(
        name, "mlst", g.n, str(tree.leaf_count), g.n, str(ref.leaf_count), str(int(agree)), t_algo, t_or
    )


def sweep(max_n: int = 10, generated: int = 20, seed: int = 7, timeout_ms=None) -> list[SweepRow]:
    rows: list[SweepRow] = []
    for name, g in instances(max_n, generated, seed):
        d = decompose(g)
        rows.append(_ham_row(name, g, d, CYCLE, timeout_ms))
        rows.append(_ham_row(name, g, d, PATH, timeout_ms))
        rows.append(_longest_row(name, g, d, timeout_ms))
        if g.n <= MLST_LIMIT:
            rows.append(_mlst_row(name, g, d))
    return rows


def write_csv(rows: list[SweepRow], runtimes: bool = False) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(COLUMNS + (TIMING if runtimes else ()))
    for r in rows:
        out.writerow(r.cells(runtimes))
    return buf.getvalue()


def render_text(rows: list[SweepRow], runtimes: bool = False) -> str:
    header = list(COLUMNS + (TIMING if runtimes else ()))
    body = [[str(c) for c in r.cells(runtimes)] for r in rows]
    widths = [max(len(h), *(len(b[k]) for b in body)) if body else len(h) for k, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.ljust(w) for c, w in zip(b, widths)) for b in body]
    bad = sum(r.disagrees for r in rows)
    lines.append(f"{len(rows)} rows, {bad} disagreements")
    return "\n".join(lines) + "\n"
