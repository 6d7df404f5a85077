#!/usr/bin/env python3
"""Reproduce census rows and the list of non-dominating shedding sets.

    python scripts/run_census.py --n 1-8
    python scripts/run_census.py --input data/connected9.g6.gz --out results/census9.json
"""
import argparse
import json
import logging
import time
from pathlib import Path

from shedlab.census import CensusConfig, census_report, default_jobs, graph_source


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", help="N or LO-HI for the built-in enumeration")
    ap.add_argument("--input", help="graph6 file (optionally .gz)")
    ap.add_argument("--jobs", type=int, default=default_jobs())
    ap.add_argument("--cache-bytes", type=int, default=None, help="bound each worker's verdict cache")
    ap.add_argument("--out", help="write rows and failures as JSON here")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    if args.input:
        source = graph_source(None, args.input)
    else:
        lo, _, hi = args.n.partition("-")
        source = (g for n in range(int(lo), int(hi or lo) + 1) for g in graph_source(n))
    start = time.time()
    report = census_report(source, config=CensusConfig(jobs=args.jobs, cache_bytes=args.cache_bytes))
    elapsed = time.time() - start
    print(report.to_table())
    print(f"{len(report.failures)} failure(s); {elapsed:.0f}s with {args.jobs} job(s)")
    for rec in report.failures:
        print(f"  {rec.graph6}  n={rec.n} m={rec.m} shed={sorted(rec.shed)}")
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        doc = json.loads(report.to_json())
        doc["failures"] = [rec.as_json() for rec in report.failures]
        doc["seconds"] = round(elapsed, 1)
        Path(args.out).write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main()
