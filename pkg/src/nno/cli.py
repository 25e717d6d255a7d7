"""Command-line entry point ``nno``.

Exit statuses: 0 success, 1 graph outside the class, 2 bad input,
3 a structural guarantee failed (a counterexample worth keeping).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from nno.decomposition import check_lemmas, decompose
from nno.errors import NNOError, NotInClassError, TheoryViolation
from nno.generator import GenSpec, generate
from nno.graph import CYCLE, PATH, Graph, parse_graph, read_graph, serialize_graph
from nno.hamiltonicity import hamiltonian_cycle, hamiltonian_path
from nno.longest import longest_path, min_leaf_spanning_tree
from nno.recognition import classify
from nno.steiner import steiner_path

EXIT_OK, EXIT_NOT_IN_CLASS, EXIT_INPUT, EXIT_THEORY = 0, 1, 2, 3

log = logging.getLogger("nno")


class _Refused(Exception):
    def __init__(self, payload):
        self.payload = payload


def _load(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    return read_graph(path)


def _in_class(g: Graph):
    report = classify(g)
    if not report.in_class:
        raise _Refused(report.to_json(g))
    return decompose(g, check_class=False)


def _terminals(g: Graph, text: str) -> list[int]:
    # numeric tokens are vertex ids, anything else a label
    toks = filter(None, (t.strip() for t in text.split(",")))
    return [int(t) if t.isdigit() else g.vertex_by_label(t) for t in toks]


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.split(",") if t.strip()) if text else ()


def _tree_json(g: Graph, tree) -> dict:
    return {"leaves": tree.leaf_count, "edges": [[g.label(u), g.label(v)] for u, v in tree.edges()]}


# ---------------------------------------------------------------------------
# subcommands; each returns (payload, exit status)


def cmd_classify(args):
    g = _load(args.graph)
    report = classify(g)
    return report.to_json(g), EXIT_OK if report.in_class else EXIT_NOT_IN_CLASS


def cmd_decompose(args):
    g = _load(args.graph)
    d = _in_class(g)
    out = d.to_json()
    out["lemmas"] = check_lemmas(g, d).to_json()
    return out, EXIT_OK


def cmd_ham(args):
    g = _load(args.graph)
    d = _in_class(g)
    dec = hamiltonian_cycle(d) if args.command == "hamcycle" else hamiltonian_path(d)
    return dec.to_json(g), EXIT_OK


def cmd_longest(args):
    g = _load(args.graph)
    p = longest_path(g, _in_class(g))
    return {"length": len(p), "path": g.labelled(p.seq)}, EXIT_OK


def cmd_mlst(args):
    g = _load(args.graph)
    return _tree_json(g, min_leaf_spanning_tree(g, _in_class(g))), EXIT_OK


def cmd_steiner(args):
    g = _load(args.graph)
    d = _in_class(g)
    return steiner_path(d, _terminals(g, args.terminals)).to_json(g), EXIT_OK


def cmd_oracle(args):
    from nno import oracle

    g = _load(args.graph)
    t = args.timeout_ms
    if args.task in ("hamcycle", "hampath"):
        w = oracle.brute_hamiltonian(g, CYCLE if args.task == "hamcycle" else PATH, t)
        out = {"answer": "yes" if w else "no"}
        if w:
            out["witness"] = g.labelled(w.seq)
    elif args.task == "longest":
        p = oracle.brute_longest_path(g, t)
        out = {"length": len(p), "path": g.labelled(p.seq)}
    elif args.task == "mlst":
        out = _tree_json(g, oracle.brute_mlst(g))
    else:
        if not args.terminals:
            raise ValueError("--terminals is required for the steiner task")
        r = _terminals(g, args.terminals)
        p = oracle.brute_steiner_path(g, r, t)
        out = {"answer": "yes" if p else "no"}
        if p:
            out["path"] = g.labelled(p.seq)
            out["steinerCount"] = len(p) - len(set(r))
    return out, EXIT_OK


def cmd_gen(args):
    spec = GenSpec(args.i, args.j, _ints(args.a2), _ints(args.b2), args.seed, args.shuffle)
    text = serialize_graph(generate(spec))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return {"written": args.output}, EXIT_OK
    return text, EXIT_OK


def cmd_sweep(args):
    from nno.sweep import render_text, sweep, write_csv

    rows = sweep(args.max_n, args.generated, args.seed, args.timeout_ms)
    # json is the default for every command; for sweep it selects the CSV
    text = render_text(rows, args.runtimes) if args.format == "text" else write_csv(rows, args.runtimes)
    bad = sum(r.disagrees for r in rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"{len(rows)} rows, {bad} disagreements", file=sys.stderr)
        text = None
    return text, EXIT_THEORY if bad else EXIT_OK


# ---------------------------------------------------------------------------


def _render(payload, fmt: str) -> str:
    if isinstance(payload, str):
        return payload.rstrip("\n")
    if fmt == "json":
        return json.dumps(payload, indent=2)
    lines = []
    for key, val in payload.items():
        if isinstance(val, list):
            val = " ".join(str(v) if not isinstance(v, list) else "-".join(map(str, v)) for v in val)
        elif isinstance(val, dict):
            val = json.dumps(val)
        lines.append(f"{key}: {val}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("-v", "--verbose", action="store_true")
    ap = argparse.ArgumentParser(prog="nno", description="P5-free chordal bipartite graph toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.add_argument("graph", help="edge-list file, .json adjacency file, or - for stdin")
        p.set_defaults(func=fn)
        return p

    graph_cmd("classify", cmd_classify, "recognition report with forbidden-subgraph witnesses")
    graph_cmd("decompose", cmd_decompose, "core/tail decomposition and structural checks")
    graph_cmd("hamcycle", cmd_ham, "Hamiltonian cycle decision")
    graph_cmd("hampath", cmd_ham, "Hamiltonian path decision")
    graph_cmd("longest", cmd_longest, "longest path")
    graph_cmd("mlst", cmd_mlst, "minimum-leaf spanning tree")
    p = graph_cmd("steiner", cmd_steiner, "shortest path through a terminal set")
    p.add_argument("--terminals", required=True, help="comma-separated vertex ids or labels")
    p = graph_cmd("oracle", cmd_oracle, "exponential-time reference answer")
    p.add_argument("--task", required=True, choices=("hamcycle", "hampath", "longest", "mlst", "steiner"))
    p.add_argument("--terminals", default="")
    p.add_argument("--timeout-ms", type=int, default=None)

    p = sub.add_parser("gen", help="generate an in-class instance", parents=[common])
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--a2", default="", help="comma-separated non-decreasing degrees")
    p.add_argument("--b2", default="")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shuffle", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sweep", help="compare algorithms with oracles, emit CSV", parents=[common])
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--generated", type=int, default=20, help="seeded generator instances to add")
    p.add_argument("--timeout-ms", type=int, default=None)
    p.add_argument("--runtimes", action="store_true", help="add timing columns (breaks byte-determinism)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        payload, status = args.func(args)
    except _Refused as exc:
        print(_render(exc.payload, args.format))
        return EXIT_NOT_IN_CLASS
    except NotInClassError as exc:
        print(f"nno: {exc}", file=sys.stderr)
        return EXIT_NOT_IN_CLASS
    except TheoryViolation as exc:
        print(f"nno: theory violation: {exc}", file=sys.stderr)
        return EXIT_THEORY
    except (NNOError, OSError, ValueError) as exc:
        print(f"nno: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if payload is not None:
        print(_render(payload, args.format))
    return status


if __name__ == "__main__":
    sys.exit(main())
