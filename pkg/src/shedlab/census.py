"""Exhaustive classification of connected graphs by order."""
from __future__ import annotations

import csv
import io
import json
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .canon import canonical_key, key_from_adj
from .graph import BadParameter, Graph, bits, girth, is_connected
from .graph6 import ingest_graph6, parse_graph6, to_graph6
from .decomposability import VDCache, _shed_mask, is_vertex_decomposable
from .independence import dominates_mask, is_well_covered
from .structure import is_chordal

log = logging.getLogger(__name__)

MAX_BUILTIN_N = 8
EXPECTED_FILE_LINES = {9: 261080, 10: 11716571}


def extend_connected(graphs: Iterable[Graph]) -> list[Graph]:
    """All connected graphs one vertex larger, up to isomorphism.

    Every connected graph has a vertex whose removal leaves it connected, so
    joining a new vertex to every nonempty subset of each input graph reaches
    every class; duplicates are rejected by canonical key.
    """
    seen: set[bytes] = set()
    out = []
    for g in graphs:
        n = g.n
        new_bit = 1 << n
        for subset in range(1, 1 << n):
            adj = tuple(row | new_bit if subset >> v & 1 else row for v, row in enumerate(g.adj)) + (subset,)
            key = key_from_adj(adj)
            if key not in seen:
                seen.add(key)
                out.append(parse_graph6(key.decode("ascii")))
    return out


def _connected_upto(n: int) -> list[Graph]:
    graphs = [Graph(1, (0,))]
    for _ in range(n - 1):
        graphs = extend_connected(graphs)
    return graphs


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Each isomorphism class of connected graphs on ``n`` vertices once, in canonical form."""
    if not 1 <= n <= MAX_BUILTIN_N:
        raise BadParameter(f"built-in enumeration covers 1..{MAX_BUILTIN_N}; ingest a graph6 file for n={n}")
    yield from _connected_upto(n)


# -- classification ----------------------------------------------------


@dataclass(frozen=True)
class ClassificationRecord:
    key: bytes
    n: int
    m: int
    well_covered: bool
    vertex_decomposable: bool
    shed: frozenset[int] | None
    shed_dominating: bool | None
    girth: int | float
    chordal: bool
    graph6: str = ""

    def as_json(self) -> dict:
        d = asdict(self)
        d["key"] = self.key.decode("ascii")
        d["shed"] = None if self.shed is None else sorted(self.shed)
        d["girth"] = None if math.isinf(self.girth) else self.girth
        return d


def classify(g: Graph, cache: VDCache | None = None) -> ClassificationRecord:
    """Every verdict the census tabulates, for one graph."""
    cache = VDCache() if cache is None else cache
    wc = is_well_covered(g)
    vd = wc and is_vertex_decomposable(g, cache)
    shed = dom = None
    if vd:
        mask = _shed_mask(g, cache)
        shed = frozenset(bits(mask))
        dom = dominates_mask(g.adj, g.vertex_mask, mask)
    return ClassificationRecord(
        key=canonical_key(g),
        n=g.n,
        m=g.num_edges,
        well_covered=wc,
        vertex_decomposable=vd,
        shed=shed,
        shed_dominating=dom,
        girth=girth(g),
        chordal=is_chordal(g),
        graph6=to_graph6(g),
    )


# -- reports -----------------------------------------------------------


@dataclass
class CensusRow:
    n: int
    connected: int = 0
    well_covered: int = 0
    vd: int = 0
    fail_q12: int = 0


@dataclass
class CensusReport:
    rows: dict[int, CensusRow] = field(default_factory=dict)
    failures: list[ClassificationRecord] = field(default_factory=list)
    skipped_disconnected: int = 0

    def row(self, n: int) -> CensusRow:
        return self.rows[n]

    def as_tuple(self, n: int) -> tuple[int, int, int, int]:
        r = self.rows[n]
        return (r.connected, r.well_covered, r.vd, r.fail_q12)

    def to_json(self) -> str:
        doc = {
            "rows": [asdict(self.rows[n]) for n in sorted(self.rows)],
            "failures": [f.graph6 for f in self.failures],
        }
        return json.dumps(doc, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "connected", "well_covered", "cohen_macaulay", "vd", "fail_q12"])
        for n in sorted(self.rows):
            r = self.rows[n]
            writer.writerow([n, r.connected, r.well_covered, "n/a", r.vd, r.fail_q12])
        return buf.getvalue()

    def to_table(self) -> str:
        """Whitespace-aligned rows ``n connected well_covered vd fail``.

        Cohen-Macaulay counts are not computed; a trailing note says so.
        """
        head = ("Vertices", "Connected", "Well-Covered", "Vertex-Decomposable", "Shed-Not-Dominating")
        lines = ["  ".join(head)]
        for n in sorted(self.rows):
            r = self.rows[n]
            cells = (n, r.connected, r.well_covered, r.vd, r.fail_q12)
            lines.append("  ".join(str(c).rjust(len(h)) for c, h in zip(cells, head)))
        lines.append("(Cohen-Macaulay column not computed: n/a)")
        return "\n".join(lines)

    def check_monotone(self) -> bool:
        return all(r.fail_q12 <= r.vd <= r.well_covered <= r.connected for r in self.rows.values())


def _classify_shard(g6_lines: list[str], cache_bytes: int | None = None) -> list[ClassificationRecord]:
    cache = VDCache.from_env(cache_bytes)
    return [classify(parse_graph6(line), cache) for line in g6_lines]


def _fold(report: CensusReport, rec: ClassificationRecord) -> None:
    row = report.rows.setdefault(rec.n, CensusRow(rec.n))
    row.connected += 1
    row.well_covered += rec.well_covered
    row.vd += rec.vertex_decomposable
    if rec.vertex_decomposable and not rec.shed_dominating:
        row.fail_q12 += 1
        report.failures.append(rec)


def _failure_order(rec: ClassificationRecord):
    return (rec.n, rec.m, rec.key)


@dataclass(frozen=True)
class CensusConfig:
    """Run settings for :func:`census_report`.

    ``jobs=1`` is the sequential reference path.  ``cache_bytes`` bounds each
    worker's verdict cache (None: unbounded, or SHEDLAB_CACHE_BYTES if set).
    """

    jobs: int = 1
    chunk: int = 2000
    cache_bytes: int | None = None


def census_report(
    source: Iterable[Graph],
    jobs: int = 1,
    chunk: int = 2000,
    config: CensusConfig | None = None,
) -> CensusReport:
    """Aggregate per-order counts over ``source``.

    Disconnected graphs are skipped and counted in ``skipped_disconnected``.
    With ``jobs > 1`` the graphs are dealt out to worker processes in
    fixed-size chunks; each worker keeps its own verdict cache and the counts
    are summed, so the report does not depend on ``jobs``.
    """
    config = config or CensusConfig(jobs=jobs, chunk=chunk)
    jobs, chunk = config.jobs, config.chunk
    report = CensusReport()
    if jobs <= 1:
        cache = VDCache.from_env(config.cache_bytes)
        for g in source:
            if not is_connected(g):
                report.skipped_disconnected += 1
                continue
            _fold(report, classify(g, cache))
    else:
        def shards() -> Iterator[list[str]]:
            batch: list[str] = []
            for g in source:
                if not is_connected(g):
                    report.skipped_disconnected += 1
                    continue
                batch.append(to_graph6(g))
                if len(batch) == chunk:
                    yield batch
                    batch = []
            if batch:
                yield batch

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for records in pool.map(_classify_shard, shards(), repeat(config.cache_bytes)):
                for rec in records:
                    _fold(report, rec)
    if report.skipped_disconnected:
        log.warning("skipped %d disconnected graphs", report.skipped_disconnected)
    report.failures.sort(key=_failure_order)
    return report


def find_q12_failures(source: Iterable[Graph], cache: VDCache | None = None) -> list[ClassificationRecord]:
    """Vertex decomposable graphs whose shedding set does not dominate."""
    cache = VDCache() if cache is None else cache
    out = []
    for g in source:
        rec = classify(g, cache)
        if rec.vertex_decomposable and not rec.shed_dominating:
            out.append(rec)
    out.sort(key=_failure_order)
    return out


def graph_source(n: int | None = None, path: str | Path | None = None) -> Iterator[Graph]:
    """Built-in enumeration for ``n``, or the graphs of a graph6 file (filtered to ``n`` if given)."""
    if path is None:
        if n is None:
            raise BadParameter("need --n or an input file")
        return enumerate_connected(n)
    graphs = ingest_graph6(path)
    if n is None:
        return graphs
    return (g for g in graphs if g.n == n)


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)

