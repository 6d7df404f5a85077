#!/usr/bin/env python3
"""Write every connected graph on N vertices (one per isomorphism class) as graph6.

Extends the built-in n=8 enumeration one vertex at a time, so n=9 takes a few
minutes and roughly 300 MB.  n=10 is out of reach this way; use an external
generator such as ``geng -c 10`` for that row.

    python scripts/make_connected_g6.py --n 9 --out data/connected9.g6.gz
"""
import argparse
import time

from shedlab.census import MAX_BUILTIN_N, enumerate_connected, extend_connected
from shedlab.graph6 import write_graph6


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()

    start = time.time()
    base = min(args.n, MAX_BUILTIN_N)
    graphs = list(enumerate_connected(base))
    for k in range(base + 1, args.n + 1):
        graphs = extend_connected(graphs)
        print(f"n={k}: {len(graphs)} graphs ({time.time() - start:.0f}s)", flush=True)
    count = write_graph6(args.out, graphs)
    print(f"wrote {count} graphs to {args.out} in {time.time() - start:.0f}s")


if __name__ == "__main__":
    main()
