"""Structural classifiers: simplicial vertices, chordality, simplex
partitions, class PC (pendant edges plus basic 5-cycles) and the very
well-covered labeling."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graph import Graph, GraphError, bits
from .independence import is_very_well_covered, maximal_independent_masks


class NotVeryWellCovered(GraphError):
    pass


def _is_clique_mask(adj: tuple[int, ...], mask: int) -> bool:
    return all(mask & ~(adj[u] | 1 << u) == 0 for u in bits(mask))


def _simplicial_mask(adj: tuple[int, ...], within: int) -> int:
    out = 0
    for v in bits(within):
        if _is_clique_mask(adj, adj[v] & within):
            out |= 1 << v
    return out


def simplicial_vertices(g: Graph) -> frozenset[int]:
    return frozenset(bits(_simplicial_mask(g.adj, g.vertex_mask)))


def is_simplicial_graph(g: Graph) -> bool:
    simp = _simplicial_mask(g.adj, g.vertex_mask)
    return all(simp >> v & 1 or g.adj[v] & simp for v in range(g.n))


def is_chordal(g: Graph) -> bool:
    """Peel simplicial vertices; chordal iff the graph empties out."""
    left = g.vertex_mask
    while left:
        simp = _simplicial_mask(g.adj, left)
        if not simp:
            return False
        left &= ~simp
    return True


@dataclass(frozen=True)
class SimplexPartition:
    blocks: tuple[frozenset[int], ...]

    def to_dict(self) -> dict:
        return {"blocks": [sorted(b) for b in self.blocks]}


def simplex_partition(g: Graph) -> SimplexPartition | None:
    """The simplexes of G when they partition V, else None.

    A simplicial vertex lies in exactly one maximal clique, N[s]; those cliques
    are the simplexes, so the partition exists iff they are pairwise disjoint
    and cover V.
    """
    simp = _simplicial_mask(g.adj, g.vertex_mask)
    blocks: list[int] = []
    for s in bits(simp):
        block = g.adj[s] | 1 << s
        if block in blocks:
            continue
        if any(block & b for b in blocks):
            return None
        blocks.append(block)
    covered = 0
    for b in blocks:
        covered |= b
    if covered != g.vertex_mask:
        return None
    return SimplexPartition(tuple(frozenset(bits(b)) for b in blocks))


# -- class PC ----------------------------------------------------------


def basic_five_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Induced 5-cycles with no two adjacent vertices of degree >= 3 in G.

    Each cycle is listed once, starting at its least vertex and continuing
    towards the smaller of that vertex's two cycle neighbours.
    """
    out = []
    for cyc in induced_five_cycles(g):
        heavy = [g.adj[v].bit_count() >= 3 for v in cyc]
        if not any(heavy[i] and heavy[(i + 1) % 5] for i in range(5)):
            out.append(cyc)
    return out


def induced_five_cycles(g: Graph) -> list[tuple[int, ...]]:
    adj = g.adj
    out = []
    for a in range(g.n):
        higher = ~((1 << (a + 1)) - 1)
        for b in bits(adj[a] & higher):
            for e in bits(adj[a] & higher):
                if e <= b or adj[b] >> e & 1:
                    continue
                # c ~ b, d ~ e, c ~ d, and no chords back to a, b, e.
                for c in bits(adj[b] & higher & ~adj[a] & ~adj[e] & ~(1 << e)):
                    for d in bits(adj[e] & adj[c] & higher & ~adj[a] & ~adj[b] & ~(1 << b)):
                        out.append((a, b, c, d, e))
    return out


@dataclass(frozen=True)
class PCCertificate:
    pendant_edges: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...]

    @property
    def P(self) -> frozenset[int]:
        return frozenset(v for e in self.pendant_edges for v in e)

    @property
    def C(self) -> frozenset[int]:
        return frozenset(v for c in self.cycles for v in c)

    def to_dict(self) -> dict:
        return {"pendant_edges": [list(e) for e in self.pendant_edges], "cycles": [list(c) for c in self.cycles]}


def pc_membership(g: Graph) -> PCCertificate | None:
    """Certificate that G lies in class PC, or None."""
    adj = g.adj
    pendant = set()
    for v in range(g.n):
        if adj[v].bit_count() == 1:
            u = adj[v].bit_length() - 1
            pendant.add((min(u, v), max(u, v)))
    used = 0
    for u, v in pendant:
        if used >> u & 1 or used >> v & 1:
            return None
        used |= 1 << u | 1 << v
    rest = g.vertex_mask & ~used
    options: dict[int, list[tuple[int, int]]] = {v: [] for v in bits(rest)}
    for cyc in basic_five_cycles(g):
        mask = sum(1 << v for v in cyc)
        if mask & ~rest:
            continue
        for v in cyc:
            options[v].append((mask, cyc))
    chosen: list[tuple[int, ...]] = []

    def cover(left: int) -> bool:
        if not left:
            return True
        # Branch on the uncovered vertex with the fewest usable cycles.
        best = None
        for v in bits(left):
            usable = [o for o in options[v] if o[0] & ~left == 0]
            if best is None or len(usable) < len(best[1]):
                best = (v, usable)
                if not usable:
                    return False
        for mask, cyc in best[1]:
            chosen.append(cyc)
            if cover(left & ~mask):
                return True
            chosen.pop()
        return False

    if not cover(rest):
        return None
    return PCCertificate(tuple(sorted(pendant)), tuple(sorted(chosen)))


# -- very well-covered labelings ---------------------------------------


@dataclass(frozen=True)
class VWCLabeling:
    pairs: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs]}


def check_vwc_labeling(g: Graph, pairs) -> bool:
    """Conditions (a)-(e) of the very well-covered characterization, checked literally."""
    adj = g.adj
    h = len(pairs)
    xs = [p[0] for p in pairs]
    ys = [p[1] for p in pairs]
    if sorted(xs + ys) != list(range(g.n)) or 2 * h != g.n:
        return False
    ymask = sum(1 << y for y in ys)
    # (a): Y independent and maximal, so X is a minimal vertex cover.
    if any(adj[y] & ymask for y in ys):
        return False
    if any(not adj[x] & ymask for x in xs):
        return False
    edge = lambda a, b: bool(adj[a] >> b & 1)  # noqa: E731
    for i in range(h):
        if not edge(xs[i], ys[i]):  # (b)
            return False
        for j in range(h):
            if i != j and edge(xs[i], ys[j]):
                if edge(xs[i], xs[j]):  # (d)
                    return False
                if i > j:  # (e)
                    return False
    for i, j, k in permutations(range(h), 3):  # (c)
        if edge(ys[j], xs[k]):
            for z in (xs[i], ys[i]):
                if edge(z, xs[j]) and not edge(z, xs[k]):
                    return False
    return True


def _order_pairs(g: Graph, pairs: list[tuple[int, int]]) -> list[tuple[int, int]] | None:
    """Topologically sort pairs so x_i ~ y_j forces i <= j; None on a cycle."""
    h = len(pairs)
    succ = [[b for b in range(h) if b != a and g.adj[pairs[a][0]] >> pairs[b][1] & 1] for a in range(h)]
    indeg = [0] * h
    for a in range(h):
        for b in succ[a]:
            indeg[b] += 1
    ready = sorted((pairs[a][0], a) for a in range(h) if indeg[a] == 0)
    order = []
    while ready:
        _, a = ready.pop(0)
        order.append(pairs[a])
        for b in succ[a]:
            indeg[b] -= 1
            if indeg[b] == 0:
                ready.append((pairs[b][0], b))
                ready.sort()
    return order if len(order) == h else None


def _matchings(g: Graph, xs: list[int], ymask: int):
    pairs: list[tuple[int, int]] = []

    def rec(i: int, free: int):
        if i == len(xs):
            yield list(pairs)
            return
        for y in bits(g.adj[xs[i]] & free):
            pairs.append((xs[i], y))
            yield from rec(i + 1, free & ~(1 << y))
            pairs.pop()

    yield from rec(0, ymask)


def vwc_labeling(g: Graph) -> VWCLabeling | None:
    """Search for an (x_i, y_i) labeling meeting conditions (a)-(e).

    Y ranges over the maximal independent sets (all of size n/2), X is the
    complement, pairs come from perfect matchings X -> Y, and (e) is met by a
    topological order of the pairs when one exists.  Conditions (c) and (d) do
    not depend on the order.
    """
    if not is_very_well_covered(g):
        raise NotVeryWellCovered("labeling is only defined for very well-covered graphs")
    # Prefer the Y whose complement X has the least labels, so x_1 is as small as possible.
    ymasks = sorted(maximal_independent_masks(g.adj, g.vertex_mask), key=lambda m: list(bits(g.vertex_mask & ~m)))
    for ymask in ymasks:
        xs = list(bits(g.vertex_mask & ~ymask))
        for pairs in _matchings(g, xs, ymask):
            ordered = _order_pairs(g, pairs)
            if ordered is not None and check_vwc_labeling(g, ordered):
                return VWCLabeling(tuple(ordered))
    return None
