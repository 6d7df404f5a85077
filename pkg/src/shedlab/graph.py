"""Immutable simple graphs on at most 64 vertices.

Each vertex ``v`` carries a neighbour set stored as an int bitmask ``adj[v]``;
bit ``u`` is set iff ``{u, v}`` is an edge.  Vertex labels are always
``0..n-1``.  Deletions relabel the survivors in increasing order and carry the
optional display ``names`` along, so a vertex can be followed through a chain
of deletions by its name.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    pass


class InvalidEdge(GraphError):
    pass


class OutOfRange(GraphError, IndexError):
    pass


class BadParameter(GraphError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise BadParameter(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        if self.names is not None and len(self.names) != self.n:
            raise GraphError("names length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidEdge(f"vertex {v} has a neighbour label >= n")
            if row >> v & 1:
                raise InvalidEdge(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    # -- basic queries -------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def degree(self, v: int) -> int:
        self._check(v)
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def name(self, v: int) -> str:
        self._check(v)
        return self.names[v] if self.names is not None else str(v)

    def label_of(self, name: str) -> int:
        """Inverse of :meth:`name`."""
        if self.names is None:
            try:
                v = int(name)
            except ValueError:
                raise OutOfRange(f"no vertex named {name!r}") from None
            self._check(v)
            return v
        try:
            return self.names.index(name)
        except ValueError:
            raise OutOfRange(f"no vertex named {name!r}") from None

    def name_map(self) -> dict[int, str]:
        return {v: self.name(v) for v in range(self.n)}

    def with_names(self, names: Sequence[str] | None) -> Graph:
        return Graph(self.n, self.adj, None if names is None else tuple(names))

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise OutOfRange(f"vertex {v} not in 0..{self.n - 1}")

    def _check_mask(self, mask: int) -> None:
        if mask & ~self.vertex_mask or mask < 0:
            raise OutOfRange("vertex set contains labels outside the graph")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- construction ------------------------------------------------------


def from_edges(n: int, edges: Iterable[Iterable[int]], names: Sequence[str] | None = None) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse."""
    if not 0 <= n <= MAX_VERTICES:
        raise BadParameter(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for e in edges:
        u, v = tuple(e)
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge {{{u}, {v}}} outside 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), None if names is None else tuple(names))


def empty_graph(n: int = 0) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = g.adj + tuple(row << g.n for row in h.adj)
    names = None
    if g.names is not None or h.names is not None:
        names = tuple(g.name(v) for v in g.vertices()) + tuple(h.name(v) for v in h.vertices())
    return Graph(g.n + h.n, adj, names)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph in which old vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise BadParameter("relabeling is not a permutation")
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    names = None
    if g.names is not None:
        inv = [""] * g.n
        for v in range(g.n):
            inv[perm[v]] = g.names[v]
        names = tuple(inv)
    return Graph(g.n, tuple(adj), names)


# -- surgery -----------------------------------------------------------


def induced_subgraph_mask(g: Graph, mask: int) -> Graph:
    g._check_mask(mask)
    keep = list(bits(mask))
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in bits(g.adj[v] & mask):
            row |= 1 << pos[u]
        adj.append(row)
    names = None if g.names is None else tuple(g.names[v] for v in keep)
    return Graph(len(keep), tuple(adj), names)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """G[W], relabeled order-preservingly to 0..|W|-1."""
    vs = list(vertices)
    for v in vs:
        g._check(v)
    return induced_subgraph_mask(g, to_mask(vs))


def delete_vertex(g: Graph, v: int) -> Graph:
    g._check(v)
    return induced_subgraph_mask(g, g.vertex_mask & ~(1 << v))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    vs = list(vertices)
    for v in vs:
        g._check(v)
    return induced_subgraph_mask(g, g.vertex_mask & ~to_mask(vs))


def delete_closed_neighborhood(g: Graph, v: int) -> Graph:
    g._check(v)
    return induced_subgraph_mask(g, g.vertex_mask & ~(g.adj[v] | 1 << v))


# -- global structure --------------------------------------------------


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of G[within] as bitmasks, ordered by least label."""
    todo = g.vertex_mask if within is None else within
    comps = []
    while todo:
        seed = todo & -todo
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= g.adj[v]
            frontier = reach & todo & ~comp
            comp |= frontier
        comps.append(comp)
        todo &= ~comp
    return comps


def connected_components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(component_masks(g)) == 1


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in bits(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best
