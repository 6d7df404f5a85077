"""graph6 encoding for graphs on at most 62 vertices.

A line is one size byte ``n + 63`` (or ``~`` plus three bytes beyond 62
vertices) followed by the upper triangle of the
adjacency matrix in column order ``x(0,1), x(0,2), x(1,2), x(0,3), ...``,
packed six bits per byte (zero padded) with each group written as ``value + 63``.
"""
from __future__ import annotations

import gzip
import io
from pathlib import Path
from typing import Iterator

from .graph import MAX_VERTICES, Graph, GraphError

HEADER = ">>graph6<<"
MAX_GRAPH6_VERTICES = 62


class BadGraph6(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def _payload_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def to_graph6(g: Graph) -> str:
    return encode_adj(g.adj)


def encode_adj(adj: tuple[int, ...]) -> str:
    """graph6 text for a raw adjacency-mask tuple."""
    n = len(adj)
    if n <= MAX_GRAPH6_VERTICES:
        out = [chr(n + 63)]
    else:
        # Four-byte size field; only reached for 63 and 64 vertices.
        out = ["~"] + [chr((n >> s & 63) + 63) for s in (12, 6, 0)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise BadGraph6("empty graph6 string")
    codes = [ord(c) for c in line]
    for c in codes:
        if not 63 <= c <= 126:
            raise BadGraph6(f"byte {c} outside 63..126")
    n = codes[0] - 63
    payload = codes[1:]
    if n > MAX_GRAPH6_VERTICES:
        if len(codes) < 4 or codes[1] == 126:
            raise BadGraph6("size fields beyond four bytes are not supported")
        n = (codes[1] - 63) << 12 | (codes[2] - 63) << 6 | (codes[3] - 63)
        if n > MAX_VERTICES:
            raise BadGraph6(f"{n} vertices exceeds the graph cap of {MAX_VERTICES}")
        payload = codes[4:]
    if len(payload) != _payload_length(n):
        raise BadGraph6(f"expected {_payload_length(n)} payload bytes for n={n}, got {len(payload)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (payload[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if k % 6 and (payload[-1] - 63) & ((1 << (6 - k % 6)) - 1):
        raise BadGraph6("nonzero padding bits")
    return Graph(n, tuple(adj))


def _open_text(path: str | Path) -> io.TextIOBase:
    path = Path(path)
    if path.suffix == ".gz":
        return gzip.open(path, "rt", encoding="ascii")
    return open(path, "r", encoding="ascii")


def read_graph6_lines(lines, start: int = 1) -> Iterator[Graph]:
    """Parse an iterable of graph6 lines; blank lines and headers are skipped."""
    for number, raw in enumerate(lines, start):
        line = raw.strip()
        if not line:
            continue
        if line == HEADER:
            continue
        try:
            yield parse_graph6(line)
        except BadGraph6 as exc:
            raise BadGraph6(str(exc), line=number) from None


def ingest_graph6(path: str | Path) -> Iterator[Graph]:
    """Stream the graphs of a graph6 file (optionally gzip-compressed) in file order."""
    with _open_text(path) as fh:
        yield from read_graph6_lines(fh)


def write_graph6(path: str | Path, graphs) -> int:
    path = Path(path)
    opener = gzip.open if path.suffix == ".gz" else open
    count = 0
    with opener(path, "wt", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
            count += 1
    return count
