"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import sys
import time
from functools import lru_cache
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import connected, connected_upto  # noqa: E402
from oracles import vd_graph  # noqa: E402
from shedlab.canon import canonical_key  # noqa: E402
from shedlab.census import census_report, classify, graph_source  # noqa: E402
from shedlab.constructions import (  # noqa: E402
    clique_append,
    clique_whisker,
    expand,
    gen_Dn,
    gen_Ln,
    gen_Pm,
)
from shedlab.decomposability import (  # noqa: E402
    VDCache,
    is_vertex_decomposable,
    shed_is_dominating,
    shedding_set,
)
from shedlab.graph import delete_closed_neighborhood, delete_vertex, disjoint_union, from_edges, girth  # noqa: E402
from shedlab.graph6 import parse_graph6, to_graph6  # noqa: E402
from shedlab.independence import h_vector, is_very_well_covered, is_well_covered  # noqa: E402
from shedlab.structure import is_chordal, pc_membership, simplex_partition, simplicial_vertices, vwc_labeling  # noqa: E402
from test_constructions import BASES, clique_partitions  # noqa: E402
from test_graph import VECTORS  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "data"
N9_FILE = DATA / "connected9.g6.gz"

RESULTS: list[str] = []

ROWS = {
    1: (1, 1, 1, 0),
    2: (1, 1, 1, 0),
    3: (2, 1, 1, 0),
    4: (6, 3, 2, 0),
    5: (21, 6, 5, 0),
    6: (112, 27, 20, 0),
    7: (853, 108, 82, 0),
}


def names(g, vertices):
    return {g.name(v) for v in vertices}


# -- criteria ----------------------------------------------------------


def c1_rows_1_to_7():
    start = time.time()
    got = {n: census_report(connected(n)).as_tuple(n) for n in ROWS}
    elapsed = time.time() - start
    ok = got == ROWS and elapsed < 60
    return ok, f"rows {[got[n] for n in sorted(got)]} in {elapsed:.1f}s (limit 60s)"


def c2_row_8():
    start = time.time()
    row = census_report(graph_source(8), jobs=1).as_tuple(8)
    elapsed = time.time() - start
    return row == (11117, 788, 565, 0) and elapsed < 15 * 60, f"row 8 {row} in {elapsed:.0f}s sequential (limit 900s)"


@lru_cache(maxsize=None)
def n9_report():
    start = time.time()
    report = census_report(graph_source(None, N9_FILE), jobs=1)
    return report, time.time() - start


def c3_row_9():
    report, elapsed = n9_report()
    row = report.as_tuple(9)
    return row == (261080, 9035, 5688, 17), f"row 9 {row} from {N9_FILE.name} in {elapsed:.0f}s"


def c4_minimal_counterexample():
    report, _ = n9_report()
    fails = report.failures
    least = min(r.m for r in fails)
    at_min = [r for r in fails if r.m == least]
    target = canonical_key(gen_Pm(2))
    ok = len(fails) == 17 and least == 13 and [r.key for r in at_min] == [target]
    return ok, f"{len(fails)} failures, min edges {least}, {len(at_min)} at minimum, key match {at_min[0].key == target}"


def c5_families():
    details = []
    ok = True
    for ks in ([2], [2, 2]):
        g = gen_Dn(ks)
        r = classify(g)
        z = {f"z{j}" for j in range(1, sum(ks) + 1)}
        good = r.vertex_decomposable and names(g, r.shed) == z and r.shed_dominating is False
        ok &= good
        details.append(f"D{ks}:{'ok' if good else 'bad'}")
    for m in (2, 3):
        g = gen_Pm(m)
        r = classify(g)
        good = r.vertex_decomposable and names(g, r.shed) == {"z1", "z2"} and r.shed_dominating is False
        ok &= good
        details.append(f"P{m}:{'ok' if good else 'bad'}")
    r = classify(gen_Ln(1))
    good = r.vertex_decomposable and r.shed_dominating is False
    ok &= good
    details.append(f"L1:{'ok' if good else 'bad'}")
    return ok, " ".join(details)


def c6_hvector():
    got = {}
    for m in (2, 3, 4):
        g = gen_Pm(m)
        got[m] = h_vector(delete_vertex(g, g.label_of("y1"))).h[3]
    return got == {m: 1 - m for m in (2, 3, 4)}, f"h3 = {got}"


def c7_property_suites():
    cache = VDCache()
    all7 = connected_upto(7)
    counts = {}

    # VD checker against the cache-free brute force.
    counts["oracle"] = sum(is_vertex_decomposable(g, cache) != vd_graph(g) for g in all7)

    vd7 = [g for g in all7 if is_vertex_decomposable(g, cache)]
    counts["links"] = sum(
        not is_vertex_decomposable(delete_closed_neighborhood(g, x), cache) for g in vd7 for x in range(g.n)
    )
    counts["simplicial"] = sum(
        not set(g.neighbors(x)) <= shedding_set(g, cache) for g in vd7 for x in simplicial_vertices(g)
    )
    small = connected_upto(5)
    counts["union"] = sum(
        is_vertex_decomposable(disjoint_union(a, b), cache)
        != (is_vertex_decomposable(a, cache) and is_vertex_decomposable(b, cache))
        for a in small for b in small if a.n + b.n <= 9
    )

    bad = 0
    for g in all7:
        if is_chordal(g):
            vd, wc, part = is_vertex_decomposable(g, cache), is_well_covered(g), simplex_partition(g)
            bad += not (vd == wc == (part is not None))
    counts["chordal"] = bad

    bad_vwc = bad_g5 = 0
    for g in connected_upto(8):
        vd = None
        if is_very_well_covered(g):
            vd = is_vertex_decomposable(g, cache)
            bad_vwc += vd != (vwc_labeling(g) is not None)
        if girth(g) >= 5 and is_well_covered(g):
            vd = is_vertex_decomposable(g, cache) if vd is None else vd
            bad_g5 += vd != (g.n == 1 or pc_membership(g) is not None)
    counts["vwc"], counts["girth5"] = bad_vwc, bad_g5

    bad = 0
    for g in BASES:
        vd = is_vertex_decomposable(g, cache)
        for s in product((1, 2, 3), repeat=g.n):
            if sum(s) > 9:
                continue
            h = expand(g, s)
            hv = is_vertex_decomposable(h, cache)
            bad += hv != vd
            if vd and min(s) >= 2:
                bad += not (hv and shed_is_dominating(h, cache))
    counts["expansion"] = bad

    bad = 0
    for g in BASES:
        for ks in product((2, 3), repeat=g.n):
            h = clique_append(g, ks)
            bad += not (is_vertex_decomposable(h, cache) and shed_is_dominating(h, cache))
        for blocks in clique_partitions(g):
            h = clique_whisker(g, blocks)
            bad += not (is_vertex_decomposable(h, cache) and shed_is_dominating(h, cache))
    counts["constructions"] = bad

    return all(v == 0 for v in counts.values()), "violations " + ", ".join(f"{k}={v}" for k, v in counts.items())


def c8_graph6():
    graphs = connected_upto(7)
    round_trip = sum(parse_graph6(to_graph6(g)).adj == g.adj for g in graphs)
    vectors = 0
    for text, n, edges in VECTORS:
        g = from_edges(n, edges)
        vectors += to_graph6(g) == text and parse_graph6(text).adj == g.adj
    ok = round_trip == len(graphs) and vectors == len(VECTORS) >= 20
    return ok, f"round trip {round_trip}/{len(graphs)}, vectors {vectors}/{len(VECTORS)}"


CRITERIA = [
    ("1", "census rows n=1..7", c1_rows_1_to_7),
    ("2", "census row n=8", c2_row_8),
    ("3", "census row n=9 (ingested)", c3_row_9),
    ("4", "minimal counterexample at n=9", c4_minimal_counterexample),
    ("5", "family shedding sets", c5_families),
    ("6", "h-vector obstruction", c6_hvector),
    ("7", "property suites", c7_property_suites),
    ("8", "graph6 codec", c8_graph6),
]


def _line(cid, title, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {cid} ({title}): {detail}"


@pytest.mark.slow
@pytest.mark.parametrize("cid,title,check", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(cid, title, check):
    if cid in ("3", "4") and not N9_FILE.exists():
        RESULTS.append(_line(cid, title, False, f"missing {N9_FILE}; run scripts/make_connected_g6.py --n 9"))
        pytest.fail(f"{N9_FILE} not found")
    ok, detail = check()
    line = _line(cid, title, ok, detail)
    RESULTS.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    failed = 0
    for cid, title, check in CRITERIA:
        ok, detail = check()
        failed += not ok
        print(_line(cid, title, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
