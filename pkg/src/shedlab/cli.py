"""Command-line interface.

Exit codes: 0 success (or a positive verdict), 1 internal error, 2 usage or
parse error (and ``shed``/``witness`` on a graph that is not vertex
decomposable), 3 negative verdict (``shed``: Shed(G) does not dominate,
``hvector``: some h_k < 0).
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from pathlib import Path

from . import constructions as cons
from .census import census_report, default_jobs, find_q12_failures, graph_source
from .decomposability import (
    NotVertexDecomposable,
    VDCache,
    decomposition_witness,
    is_vertex_decomposable,
    shedding_set,
    verify_witness,
)
from .graph import Graph, GraphError, girth
from .graph6 import BadGraph6, parse_graph6, read_graph6_lines, to_graph6
from .independence import h_vector, is_dominating_set, is_very_well_covered, is_well_covered
from .structure import is_chordal, is_simplicial_graph, pc_membership

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_NEGATIVE = 0, 1, 2, 3

PROPERTIES = ("wc", "vwc", "vd", "chordal", "girth", "pc", "simplicial")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _n_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("-")
    try:
        return list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None


def _load_names(spec: str | None) -> dict | None:
    if spec is None:
        return None
    text = Path(spec[1:]).read_text() if spec.startswith("@") else spec
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--names is not valid JSON: {exc}") from None


def _apply_names(g: Graph, names: dict | None) -> Graph:
    if names is None:
        return g
    return g.with_names([str(names.get(str(v), v)) for v in range(g.n)])


def _read_graphs(args) -> list[Graph]:
    if getattr(args, "file", None):
        with open(args.file, encoding="ascii") as fh:
            graphs = list(read_graph6_lines(fh))
    elif args.graph in (None, "-"):
        graphs = list(read_graph6_lines(sys.stdin))
    else:
        graphs = [parse_graph6(args.graph)]
    if not graphs:
        raise UsageError("no graph given")
    names = _load_names(getattr(args, "names", None))
    return [_apply_names(g, names) for g in graphs]


def _one_graph(args) -> Graph:
    graphs = _read_graphs(args)
    if len(graphs) != 1:
        raise UsageError("this subcommand takes exactly one graph")
    return graphs[0]


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _fmt_set(g: Graph, vertices) -> str:
    return "{" + ",".join(g.name(v) for v in sorted(vertices)) + "}"


# -- subcommands -------------------------------------------------------


def cmd_check(args) -> int:
    props = args.property or list(PROPERTIES)
    cache = VDCache.from_env()
    docs = []
    for g in _read_graphs(args):
        verdicts: dict[str, object] = {}
        for p in props:
            if p == "wc":
                verdicts[p] = is_well_covered(g)
            elif p == "vwc":
                verdicts[p] = is_very_well_covered(g)
            elif p == "vd":
                verdicts[p] = is_vertex_decomposable(g, cache)
            elif p == "chordal":
                verdicts[p] = is_chordal(g)
            elif p == "girth":
                gi = girth(g)
                verdicts[p] = None if math.isinf(gi) else gi
            elif p == "pc":
                verdicts[p] = pc_membership(g) is not None
            elif p == "simplicial":
                verdicts[p] = is_simplicial_graph(g)
        docs.append({"graph": to_graph6(g), **verdicts})
    if args.json:
        print(json.dumps(docs if len(docs) > 1 else docs[0]))
        return EXIT_OK
    for i, doc in enumerate(docs):
        if len(docs) > 1:
            print(("" if i == 0 else "\n") + f"graph: {doc['graph']}")
        for p in props:
            v = doc[p]
            if isinstance(v, bool):
                print(f"{p}: {_yn(v)}")
            else:
                print(f"{p}: {'infinite' if v is None else v}")
    return EXIT_OK


def cmd_shed(args) -> int:
    g = _one_graph(args)
    cache = VDCache.from_env()
    try:
        shed = shedding_set(g, cache)
    except NotVertexDecomposable:
        if args.json:
            print(json.dumps({"graph": to_graph6(g), "vd": False}))
        else:
            print("not vertex decomposable")
        return EXIT_USAGE
    dom = is_dominating_set(g, shed)
    if args.json:
        print(json.dumps({"graph": to_graph6(g), "vd": True, "shed": [g.name(v) for v in sorted(shed)], "dominating": dom}))
    else:
        print(f"Shed = {_fmt_set(g, shed)}; dominating: {_yn(dom)}")
    return EXIT_OK if dom else EXIT_NEGATIVE


def cmd_hvector(args) -> int:
    g = _one_graph(args)
    hv = h_vector(g)
    if args.json:
        print(json.dumps({"graph": to_graph6(g), "alpha": hv.alpha, "counts": list(hv.counts), "h": list(hv.h), "nonnegative": hv.is_nonnegative()}))
    else:
        print(f"alpha: {hv.alpha}")
        print("counts: " + " ".join(map(str, hv.counts)))
        print("h: " + " ".join(map(str, hv.h)))
        print(f"nonnegative: {_yn(hv.is_nonnegative())}")
    return EXIT_OK if hv.is_nonnegative() else EXIT_NEGATIVE


def cmd_witness(args) -> int:
    g = _one_graph(args)
    try:
        w = decomposition_witness(g, VDCache.from_env())
    except NotVertexDecomposable:
        print("not vertex decomposable")
        return EXIT_USAGE
    ok = verify_witness(g, w)
    if args.json:
        print(json.dumps({"graph": to_graph6(g), "witness": w.to_dict(), "verified": ok}))
    else:
        print(w.to_text())
        print(f"verified: {_yn(ok)}")
    return EXIT_OK if ok else EXIT_INTERNAL


def _gen_graph(args) -> Graph:
    kind = args.family
    if kind == "dn":
        return cons.gen_Dn(args.ks)
    if kind == "pm":
        return cons.gen_Pm(args.m)
    if kind == "ln":
        return cons.gen_Ln(args.n)
    if kind == "circulant":
        return cons.circulant(args.n, args.s)
    base = parse_graph6(args.graph)
    if kind == "whisker":
        return cons.whisker(base, args.set if args.set is not None else range(base.n))
    if kind == "clique-append":
        return cons.clique_append(base, args.ks)
    if kind == "clique-whisker":
        blocks = [_int_list(b) for b in args.partition.split(";")]
        return cons.clique_whisker(base, blocks)
    if kind == "expand":
        return cons.expand(base, args.s)
    if kind == "duplicate":
        return cons.duplicate_vertex(base, args.vertex)
    raise UsageError(f"unknown generator {kind}")


def cmd_gen(args) -> int:
    g = _gen_graph(args)
    print(to_graph6(g))
    if args.names:
        print(json.dumps({str(v): g.name(v) for v in range(g.n)}))
    return EXIT_OK


def cmd_census(args) -> int:
    jobs = args.jobs or default_jobs()
    if args.input:
        ns = set(args.n) if args.n else None
        source = (g for g in graph_source(None, args.input) if ns is None or g.n in ns)
        report = census_report(source, jobs=jobs)
    else:
        if not args.n:
            raise UsageError("census needs --n or --input")

        def chained():
            for n in args.n:
                yield from graph_source(n)

        report = census_report(chained(), jobs=jobs)
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        print(report.to_csv(), end="")
    else:
        print(report.to_table())
    return EXIT_OK


def cmd_failures(args) -> int:
    ns = set(args.n) if args.n else None
    if args.input:
        source = (g for g in graph_source(None, args.input) if ns is None or g.n in ns)
    else:
        if not ns:
            raise UsageError("failures needs --n or --input")
        source = (g for n in sorted(ns) for g in graph_source(n))
    records = find_q12_failures(source, VDCache.from_env())
    if args.json:
        print(json.dumps([r.as_json() for r in records], indent=2))
    else:
        for r in records:
            print(f"{r.graph6}  n={r.n} m={r.m} shed={sorted(r.shed)}")
        print(f"{len(records)} failure(s)")
    return EXIT_OK


# -- parser ------------------------------------------------------------


def _graph_args(p: argparse.ArgumentParser, allow_file: bool = True) -> None:
    p.add_argument("graph", nargs="?", help="graph6 string, or '-' for stdin (quote it: graph6 uses shell punctuation)")
    if allow_file:
        p.add_argument("--file", help="read graph6 lines from a file")
    p.add_argument("--names", help="JSON map label -> name (or @file) used when printing vertices")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="shedlab", description="Vertex decomposability and shedding-set toolkit.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="print property verdicts")
    _graph_args(p)
    p.add_argument("--property", action="append", choices=PROPERTIES)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("shed", help="Shed(G) and whether it dominates (exit 3 if not)")
    _graph_args(p)
    p.set_defaults(func=cmd_shed)

    p = sub.add_parser("hvector", help="independence counts and h-vector (exit 3 if negative)")
    _graph_args(p)
    p.set_defaults(func=cmd_hvector)

    p = sub.add_parser("witness", help="emit and verify a decomposition witness")
    _graph_args(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("gen", help="generate a graph as graph6")
    gsub = p.add_subparsers(dest="family", required=True)
    q = gsub.add_parser("dn")
    q.add_argument("--ks", type=_int_list, required=True)
    q = gsub.add_parser("pm")
    q.add_argument("--m", type=int, required=True)
    q = gsub.add_parser("ln")
    q.add_argument("--n", type=int, required=True)
    q = gsub.add_parser("circulant")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--s", type=_int_list, required=True)
    q = gsub.add_parser("whisker")
    q.add_argument("graph")
    q.add_argument("--set", type=_int_list, help="vertices to whisker (default: all)")
    q = gsub.add_parser("clique-append")
    q.add_argument("graph")
    q.add_argument("--ks", type=_int_list, required=True)
    q = gsub.add_parser("clique-whisker")
    q.add_argument("graph")
    q.add_argument("--partition", required=True, help="blocks as '0,1;2;3,4'")
    q = gsub.add_parser("expand")
    q.add_argument("graph")
    q.add_argument("--s", type=_int_list, required=True)
    q = gsub.add_parser("duplicate")
    q.add_argument("graph")
    q.add_argument("--vertex", type=int, required=True)
    for q in gsub.choices.values():
        q.add_argument("--names", action="store_true", help="also print a JSON label -> name map")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("census", help="per-order counts of connected, well-covered and vertex decomposable graphs")
    p.add_argument("--n", type=_n_range, help="vertex count N or range LO-HI")
    p.add_argument("--input", help="graph6 file (optionally .gz) instead of built-in enumeration")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all CPUs; 1 = sequential)")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("failures", help="vertex decomposable graphs whose Shed(G) does not dominate")
    p.add_argument("--n", type=_n_range)
    p.add_argument("--input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_failures)
    return ap


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, BadGraph6, GraphError, OSError, ValueError) as exc:
        print(f"shedlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - last-resort guard
        print(f"shedlab: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())
