"""Acceptance criteria 1-8, each at its stated tolerance.

Every criterion prints one ``CRITERION k: PASS|FAIL ...`` line; the lines are
repeated in the pytest terminal summary.  Run directly with
``python tests/test_acceptance.py`` for the lines alone.
"""

from __future__ import annotations

import functools
import random
import subprocess
import sys
import time
from itertools import combinations
from pathlib import Path

import networkx as nx

from nno.decomposition import check_lemmas, decompose
from nno.fixtures import fixture
from nno.generator import GenSpec, generate, random_spec
from nno.graph import (
    CYCLE,
    PATH,
    PATH_BOUND,
    connected_components,
    serialize_graph,
    validate_cut,
    validate_sequence,
)
from nno.hamiltonicity import hamiltonian_cycle, hamiltonian_path
from nno.longest import longest_path, min_leaf_spanning_tree, prune, side_path, stitch, stitch_parts
from nno.oracle import (
    brute_hamiltonian,
    brute_longest_path,
    brute_mlst,
    brute_steiner_path,
    enumerate_in_class,
    steiner_table,
    to_networkx,
)
from nno.recognition import classify
from nno.steiner import BASE_A1, BASE_B1, TAIL_A2, TAIL_B2, UNSUPPORTED, fresh_connector_path, steiner_path

ROOT = Path(__file__).resolve().parent.parent
ARCHIVE = ROOT / "counterexamples"
RESULTS: list[str] = []


def report(k: int, ok: bool, detail: str) -> None:
    line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


@functools.lru_cache(maxsize=None)
def universe() -> tuple:
    return tuple(enumerate_in_class(10))


@functools.lru_cache(maxsize=None)
def generated() -> tuple:
    rng = random.Random(7)
    return tuple(generate(random_spec(rng, 14)) for _ in range(500))


def reduce_and_archive(g, still_fails, name: str) -> Path:
    """Shrink ``g`` vertex by vertex while it stays in class and still fails."""
    changed = True
    while changed:
        changed = False
        for v in g.vertices:
            h, _ = g.induced_subgraph(set(g.vertices) - {v})
            if h.n >= 2 and classify(h).in_class and still_fails(h):
                g, changed = h, True
                break
    ARCHIVE.mkdir(exist_ok=True)
    out = ARCHIVE / f"{name}.graph"
    out.write_text(serialize_graph(g))
    return out


# ---------------------------------------------------------------------------


def test_criterion_1_structure_theorems():
    t0 = time.monotonic()
    graphs = universe()
    bad = []
    for g in graphs:
        d = decompose(g)
        lemmas = check_lemmas(g, d)
        if not lemmas.ok:
            bad.append((g, lemmas.first))
    secs = time.monotonic() - t0
    report(1, not bad and secs < 300, f"{len(graphs)} graphs <= 10 vertices, {len(bad)} with violations, {secs:.1f}s")


def _ham_audit(g):
    """Returns (disagreements, emitted certificates) for one graph."""
    d = decompose(g)
    wrong, certs = 0, []
    for dec, mode in ((hamiltonian_cycle(d), CYCLE), (hamiltonian_path(d), PATH)):
        truth = brute_hamiltonian(g, mode) is not None
        if dec.answer != truth:
            wrong += 1
        elif dec.answer and not validate_sequence(g, dec.witness, required=g.vertices):
            wrong += 1
        elif not dec.answer:
            if dec.certificate is not None:
                certs.append(dec.certificate)
                if not validate_cut(g, dec.certificate):
                    wrong += 1
            elif not (mode == CYCLE and g.n < 4):
                wrong += 1
    return wrong, certs


def test_criterion_2_hamiltonicity_exact():
    wrong = 0
    for g in universe():
        w, _ = _ham_audit(g)
        wrong += w
    report(2, wrong == 0, f"{2 * len(universe())} decisions vs backtracking oracle, {wrong} disagreements")


def test_criterion_3_longest_path_parity():
    gaps = []
    for name, graphs in (("universe", universe()), ("generated", generated())):
        for k, g in enumerate(graphs):
            p = longest_path(g)
            if not validate_sequence(g, p) or len(p) != len(brute_longest_path(g)):
                gaps.append(f"{name}-{k}")

                def fails(h):
                    return len(longest_path(h)) != len(brute_longest_path(h))

                reduce_and_archive(g, fails, f"longest-{name}-{k}")
    total = len(universe()) + len(generated())
    report(3, not gaps, f"{total} instances ({len(generated())} generated, seed 7, n <= 14), {len(gaps)} gaps {gaps[:5]}")


def test_criterion_4_mlst():
    pool = [g for g in universe() + generated() if g.n <= 12]
    formula_bad = oracle_bad = 0
    for g in pool:
        p = longest_path(g)
        leaves = min_leaf_spanning_tree(g).leaf_count
        if len(p) >= 2 and leaves != g.n - len(p) + 2:
            formula_bad += 1
        if leaves != brute_mlst(g).leaf_count:
            oracle_bad += 1
    report(4, formula_bad == oracle_bad == 0, f"{len(pool)} instances <= 12 vertices, formula mismatches {formula_bad}, oracle mismatches {oracle_bad}")


def test_criterion_5_steiner():
    existence = exact = mix_gaps = checked = 0
    fresh_gaps = 0
    for g in universe():
        d = decompose(g)
        table = steiner_table(g)
        for k in range(1, min(4, g.n) + 1):
            for r in combinations(g.vertices, k):
                res = steiner_path(d, r)
                if res.case_tag == UNSUPPORTED:
                    continue
                checked += 1
                best = table[sum(1 << (v - 1) for v in r)]
                if (res.answer == "yes") != (best is not None):
                    existence += 1
                    continue
                if best is None:
                    continue
                if not validate_sequence(g, res.path, required=r):
                    existence += 1
                    continue
                gap = len(res.path) - best
                if res.case_tag in (TAIL_A2, TAIL_B2, BASE_A1, BASE_B1):
                    exact += gap != 0
                else:
                    mix_gaps += gap != 0
                    fresh = fresh_connector_path(d, r)
                    if fresh is None or len(fresh) != best:
                        fresh_gaps += 1
    ok = existence == exact == mix_gaps == 0
    report(
        5,
        ok,
        f"{checked} supported terminal sets, existence mismatches {existence}, TAIL/BASE gaps {exact}, "
        f"MIX gaps {mix_gaps} (fresh-connector construction alone: {fresh_gaps} sets inapplicable or above the oracle)",
    )


def test_criterion_6_certificates_reverify():
    emitted = failed = 0
    for g in universe() + generated():
        _, certs = _ham_audit(g)
        for c in certs:
            emitted += 1
            count, _ = connected_components(g, c.separator)
            bound = len(c.separator) + (1 if c.mode == PATH_BOUND else 0)
            if count != c.claimed_components or count <= bound:
                failed += 1
    report(6, emitted > 0 and failed == 0, f"{emitted} cut certificates, {failed} failed recomputation")


# ---------------------------------------------------------------------------
# criterion 7: fixture examples, truth regenerated by the oracles


def _fixture_checks():
    """(description, algorithm value, stated value, oracle value or None)."""
    ex1, ex2, ex6 = fixture("EX1"), fixture("EX2"), fixture("EX6")
    d1, d2, d6 = decompose(ex1), decompose(ex2), decompose(ex6)

    def lab(g, seq):
        return tuple(g.labelled(seq))

    def ids(g, *names):
        return [g.vertex_by_label(x) for x in names]

    def ham(g, mode):
        return "yes" if brute_hamiltonian(g, mode) else "no"

    def yn(dec):
        return "yes" if dec.answer else "no"

    def iso(g, h):
        return nx.is_isomorphic(to_networkx(g), to_networkx(h))

    def st(g, r):
        p = brute_steiner_path(g, r)
        return None if p is None else len(p) - len(r)

    c1, p6, c6, p2 = hamiltonian_cycle(d1), hamiltonian_path(d6), hamiltonian_cycle(d6), hamiltonian_path(d2)
    s_u1 = steiner_path(d1, ids(ex1, "u1"))
    s_x = steiner_path(d1, ids(ex1, "x1", "x2", "x3"))
    s_u = steiner_path(d2, ids(ex2, "u1", "u2"))
    mlst2 = min_leaf_spanning_tree(ex2)
    rows = [
        ("EX1 decomposition orders", (lab(ex1, d1.a1), lab(ex1, d1.b1), lab(ex1, d1.a2), lab(ex1, d1.b2)),
         (("x1", "x2", "x3"), ("y1", "y2", "y3"), ("u1",), ("v1",)), None),
        ("EX2 decomposition", (lab(ex2, d2.a2), d2.q, lab(ex2, d2.b1)), (("u1", "u2"), 0, ("y1", "y2")), None),
        ("EX1 lemma check", check_lemmas(ex1, d1).ok, True, None),
        ("EX6 components without y1", connected_components(ex6, ids(ex6, "y1"))[0], 2, None),
        ("EX1 hamcycle answer", yn(c1), "yes", ham(ex1, CYCLE)),
        ("EX1 hamcycle witness", lab(ex1, c1.witness.seq), ("y1", "u1", "y2", "x1", "v1", "x2", "y3", "x3"), None),
        ("EX6 hamcycle answer", yn(c6), "no", ham(ex6, CYCLE)),
        ("EX6 hamcycle certificate", (lab(ex6, c6.certificate.separator), c6.certificate.claimed_components),
         (("y1",), 2), None),
        ("EX6 hampath answer", yn(p6), "yes", ham(ex6, PATH)),
        ("EX6 hampath witness", lab(ex6, p6.witness.seq), ("u1", "y1", "x2", "y2", "x3", "y3", "x1", "v1"), None),
        ("EX2 hampath answer", yn(p2), "no", ham(ex2, PATH)),
        ("EX2 path-bound cut {y1}", connected_components(ex2, ids(ex2, "y1"))[0], 3, None),
        ("EX1 pruning", prune(d1).pruned_a2 + prune(d1).pruned_b2, (), None),
        ("EX2 pruning", (lab(ex2, prune(d2).pruned_a2), lab(ex2, prune(d2).kept_a2)), (("u2",), ("u1",)), None),
        ("EX1 side path A2", lab(ex1, side_path(prune(d1), "A2")), ("y1", "u1", "y2"), None),
        ("EX2 side path A2", lab(ex2, side_path(prune(d2), "A2")), ("u1", "y1"), None),
        ("EX2 stitch", lab(ex2, stitch(stitch_parts(prune(d2)), d2)), ("x2", "y2", "x1", "y1", "u1"), None),
        ("EX1 longest length", len(longest_path(ex1)), 8, len(brute_longest_path(ex1))),
        ("EX2 longest length", len(longest_path(ex2)), 5, len(brute_longest_path(ex2))),
        ("EX1 MLST leaves", min_leaf_spanning_tree(ex1).leaf_count, 2, brute_mlst(ex1).leaf_count),
        ("EX2 MLST leaves", mlst2.leaf_count, 3, brute_mlst(ex2).leaf_count),
        ("EX2 MLST u2 hangs on y1", ex2.label(mlst2.parent[ids(ex2, "u2")[0]]), "y1", None),
        ("EX1 Steiner {u1} count", s_u1.steiner_count, 0, st(ex1, ids(ex1, "u1"))),
        ("EX1 Steiner {x1,x2,x3} path", lab(ex1, s_x.path.seq), ("x1", "y1", "x2", "y2", "x3"), None),
        ("EX1 Steiner {x1,x2,x3} count", s_x.steiner_count, 2, st(ex1, ids(ex1, "x1", "x2", "x3"))),
        ("EX2 Steiner {u1,u2} answer", s_u.answer, "no", "no" if st(ex2, ids(ex2, "u1", "u2")) is None else "yes"),
        ("generator EX1", iso(generate(GenSpec(3, 3, (2,), (2,))), ex1), True, None),
        ("generator EX6", iso(generate(GenSpec(3, 3, (1,), (1,))), ex6), True, None),
    ]
    return rows


def test_criterion_7_fixtures():
    failures, contradicted = [], []
    rows = _fixture_checks()
    for name, got, stated, truth in rows:
        if truth is not None and stated != truth:
            # the oracle is the ground truth; the stated value was derived wrongly
            contradicted.append(name)
            expected = truth
        else:
            expected = stated
        if got != expected:
            failures.append(name)
    detail = f"{len(rows)} fixture checks, {len(failures)} failed {failures}"
    if contradicted:
        detail += f"; stated value contradicted by oracle, oracle truth used: {contradicted}"
    report(7, not failures, detail)


def test_criterion_8_sweep_determinism(tmp_path):
    outs = []
    codes = []
    for k in (1, 2):
        target = tmp_path / f"sweep{k}.csv"
        proc = subprocess.run(
            [sys.executable, "-m", "nno", "sweep", "--max-n", "10", "--seed", "7", "-o", str(target)],
            capture_output=True,
            text=True,
        )
        codes.append(proc.returncode)
        outs.append(target.read_bytes() if target.exists() else b"")
    rows = outs[0].count(b"\n") - 1
    disagree = sum(1 for line in outs[0].decode().splitlines()[1:] if line.endswith(",0"))
    ok = codes == [0, 0] and outs[0] == outs[1] and rows > 0 and disagree == 0
    report(8, ok, f"two sweeps --max-n 10 --seed 7: {rows} rows each, identical={outs[0] == outs[1]}, disagreements {disagree}, exit codes {codes}")


if __name__ == "__main__":
    import tempfile

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for t in tests:
        try:
            if t is test_criterion_8_sweep_determinism:
                with tempfile.TemporaryDirectory() as tmp:
                    t(Path(tmp))
            else:
                t()
        except AssertionError:
            pass
