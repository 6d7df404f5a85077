"""Graph generators: whiskers, clique appending, clique-whiskering, expansion,
vertex duplication, circulants and the three non-dominating families."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graph import BadParameter, Graph, GraphError, bits, from_edges, to_mask


class InvalidPartition(GraphError):
    pass


def _fresh(g: Graph, prefix: str, count: int) -> list[str]:
    taken = set(g.names or ())
    out = []
    i = 1
    while len(out) < count:
        name = f"{prefix}{i}"
        if name not in taken:
            out.append(name)
        i += 1
    return out


def _names_or_none(g: Graph, extra: list[str]) -> tuple[str, ...] | None:
    if g.names is None:
        return None
    return g.names + tuple(extra)


def whisker(g: Graph, vertices: Iterable[int]) -> Graph:
    """Attach a new leaf to every vertex of the given set."""
    s = sorted(set(vertices))
    for v in s:
        g._check(v)
    edges = g.edges() + [(v, g.n + i) for i, v in enumerate(s)]
    return from_edges(g.n + len(s), edges, _names_or_none(g, _fresh(g, "z", len(s))))


def clique_append(g: Graph, ks: Sequence[int]) -> Graph:
    """Attach a clique of size ``ks[i]`` at vertex ``i``.

    Vertex ``i`` keeps its label and plays the role of the clique's first
    vertex; the other ``ks[i] - 1`` clique vertices are appended block by block.
    """
    if len(ks) != g.n:
        raise BadParameter(f"expected {g.n} clique sizes, got {len(ks)}")
    if any(k < 2 for k in ks):
        raise BadParameter("every appended clique needs at least 2 vertices")
    edges = g.edges()
    extra_names = []
    nxt = g.n
    for i, k in enumerate(ks):
        block = [i] + list(range(nxt, nxt + k - 1))
        nxt += k - 1
        edges.extend(combinations(block, 2))
        if g.names is not None:
            extra_names.extend(f"{g.names[i]}_{j}" for j in range(2, k + 1))
    return from_edges(nxt, edges, _names_or_none(g, extra_names))


def _check_clique_partition(g: Graph, blocks: Sequence[Iterable[int]]) -> list[list[int]]:
    seen = 0
    out = []
    for block in blocks:
        b = sorted(set(block))
        if not b:
            raise InvalidPartition("empty block")
        mask = to_mask(b)
        if mask & ~g.vertex_mask:
            raise InvalidPartition("block contains a vertex outside the graph")
        if mask & seen:
            raise InvalidPartition("blocks overlap")
        for u, v in combinations(b, 2):
            if not g.adj[u] >> v & 1:
                raise InvalidPartition(f"block {b} is not a clique")
        seen |= mask
        out.append(b)
    if seen != g.vertex_mask:
        raise InvalidPartition("blocks do not cover every vertex")
    return out


@dataclass(frozen=True)
class CliquePartition:
    blocks: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, g: Graph, blocks: Sequence[Iterable[int]]) -> CliquePartition:
        return cls(tuple(frozenset(b) for b in _check_clique_partition(g, blocks)))


def clique_whisker(g: Graph, partition: CliquePartition | Sequence[Iterable[int]]) -> Graph:
    """Add a vertex w_i joined to every vertex of the i-th clique of the partition."""
    blocks = partition.blocks if isinstance(partition, CliquePartition) else partition
    blocks = _check_clique_partition(g, blocks)
    edges = g.edges() + [(v, g.n + i) for i, b in enumerate(blocks) for v in b]
    return from_edges(g.n + len(blocks), edges, _names_or_none(g, _fresh(g, "w", len(blocks))))


def expand(g: Graph, s: Sequence[int]) -> Graph:
    """Replace vertex i by a clique of ``s[i]`` copies, each inheriting i's adjacency.

    Copies are laid out block by block: x_{1,1..s_1}, x_{2,1..s_2}, ...
    """
    if len(s) != g.n:
        raise BadParameter(f"expected {g.n} multiplicities, got {len(s)}")
    if any(k < 1 for k in s):
        raise BadParameter("multiplicities must be positive")
    start = []
    total = 0
    for k in s:
        start.append(total)
        total += k
    blocks = [range(start[i], start[i] + s[i]) for i in range(g.n)]
    edges = []
    for i in range(g.n):
        edges.extend(combinations(blocks[i], 2))
        for k in bits(g.adj[i] & ((1 << i) - 1)):
            edges.extend((a, b) for a in blocks[k] for b in blocks[i])
    names = None
    if g.names is not None:
        names = [g.names[i] + "'" * j for i in range(g.n) for j in range(s[i])]
    return from_edges(total, edges, names)


def duplicate_vertex(g: Graph, x: int) -> Graph:
    """Append a copy x' of ``x`` adjacent to every vertex of N[x]."""
    g._check(x)
    edges = g.edges() + [(v, g.n) for v in bits(g.adj[x] | 1 << x)]
    return from_edges(g.n + 1, edges, _names_or_none(g, [g.name(x) + "'"]))


def circulant(n: int, offsets: Iterable[int]) -> Graph:
    """C_n(S): a ~ b iff |a - b| or n - |a - b| lies in S."""
    s = set(offsets)
    if n < 1:
        raise BadParameter("circulant needs at least one vertex")
    if any(not 1 <= d <= n // 2 for d in s):
        raise BadParameter(f"offsets must lie in 1..{n // 2}")
    edges = [(a, b) for a, b in combinations(range(n), 2) if (b - a) in s or n - (b - a) in s]
    return from_edges(n, edges)


# -- counterexample families -------------------------------------------


def gen_Dn(ks: Sequence[int]) -> Graph:
    """D_n(k_1, ..., k_m) on 5n vertices, n = sum(ks).

    Labels: x_1..x_2n are 0..2n-1, y_1..y_2n follow, then z_1..z_n.
    """
    ks = list(ks)
    if not ks or any(k < 2 for k in ks):
        raise BadParameter("D_n needs at least one block and every k_i >= 2")
    n = sum(ks)
    x = lambda j: j - 1  # noqa: E731
    y = lambda j: 2 * n + j - 1  # noqa: E731
    z = lambda j: 4 * n + j - 1  # noqa: E731
    edges = [(z(a), z(b)) for a, b in combinations(range(1, n + 1), 2)]
    w = 0
    for k in ks:
        odd = [2 * w + 2 * t - 1 for t in range(1, k + 1)]
        even = [2 * w + 2 * t for t in range(1, k + 1)]
        edges.extend((x(a), x(b)) for a in odd for b in even)
        w += k
    edges.extend((x(j), y(j)) for j in range(1, 2 * n + 1))
    for j in range(1, n + 1):
        edges.append((z(j), y(2 * j)))
        edges.append((z(j), y(2 * j - 1)))
    names = [f"x{j}" for j in range(1, 2 * n + 1)] + [f"y{j}" for j in range(1, 2 * n + 1)]
    names += [f"z{j}" for j in range(1, n + 1)]
    return from_edges(5 * n, edges, names)


def gen_Pm(m: int) -> Graph:
    """P_m on 2m + 5 vertices: x_1..x_2m, y_1, y_2, z_1, z_2, z_3 in that order."""
    if m < 2:
        raise BadParameter("P_m needs m >= 2")
    xs = list(range(2 * m))
    y1, y2 = 2 * m, 2 * m + 1
    z1, z2, z3 = 2 * m + 2, 2 * m + 3, 2 * m + 4
    # x_a ~ x_b unless {a, b} = {2i-1, 2i}; labels are 0-based so pairs are (2i, 2i+1).
    edges = [(a, b) for a, b in combinations(xs, 2) if not (a % 2 == 0 and b == a + 1)]
    edges += [(y1, z1), (y2, z2), (z1, z2), (z1, z3), (z2, z3)]
    edges += [(y1, a) for a in xs if a % 2 == 0]
    edges += [(y2, a) for a in xs if a % 2 == 1]
    names = [f"x{j}" for j in range(1, 2 * m + 1)] + ["y1", "y2", "z1", "z2", "z3"]
    return from_edges(2 * m + 5, edges, names)


def gen_Ln(n: int) -> Graph:
    """L_n on 8n + 1 vertices.

    Order: x_{i,1}, x_{i,2} for all i, then y_{i,1..3}, then z_{i,1..3}, then w.
    """
    if n < 1:
        raise BadParameter("L_n needs n >= 1")
    x = lambda i, j: 2 * (i - 1) + (j - 1)  # noqa: E731
    y = lambda i, j: 2 * n + 3 * (i - 1) + (j - 1)  # noqa: E731
    z = lambda i, j: 5 * n + 3 * (i - 1) + (j - 1)  # noqa: E731
    w = 8 * n
    edges = []
    for i in range(1, n + 1):
        edges += [
            (y(i, 1), y(i, 2)),
            (y(i, 2), y(i, 3)),
            (y(i, 3), x(i, 2)),
            (x(i, 2), x(i, 1)),
            (x(i, 1), y(i, 1)),
        ]
        edges += [(z(i, j), y(i, j)) for j in (1, 2, 3)]
    clique = list(range(5 * n, 8 * n)) + [w]
    edges += list(combinations(clique, 2))
    names = [f"x_{{{i},{j}}}" for i in range(1, n + 1) for j in (1, 2)]
    names += [f"y_{{{i},{j}}}" for i in range(1, n + 1) for j in (1, 2, 3)]
    names += [f"z_{{{i},{j}}}" for i in range(1, n + 1) for j in (1, 2, 3)]
    names.append("w")
    return from_edges(8 * n + 1, edges, names)


@dataclass(frozen=True)
class FamilySpec:
    """A named family member: ``Dn`` (ks), ``Pm`` (m), ``Ln`` (n) or ``Circulant`` (n, S)."""

    variant: str
    params: tuple

    def build(self) -> Graph:
        if self.variant == "Dn":
            return gen_Dn(self.params)
        if self.variant == "Pm":
            return gen_Pm(*self.params)
        if self.variant == "Ln":
            return gen_Ln(*self.params)
        if self.variant == "Circulant":
            n, offsets = self.params
            return circulant(n, offsets)
        raise BadParameter(f"unknown family {self.variant!r}")
