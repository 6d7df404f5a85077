"""Independent sets, well-coveredness, independence counts and h-vectors."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .graph import Graph, GraphError, bits, to_mask

MAX_COUNT_VERTICES = 32


class TooLarge(GraphError):
    pass


def _vertex_set(g: Graph, vertices: Iterable[int]) -> int:
    mask = to_mask(vertices)
    g._check_mask(mask)
    return mask


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    mask = _vertex_set(g, vertices)
    return all(not g.adj[v] & mask for v in bits(mask))


def maximal_independent_masks(adj: tuple[int, ...], within: int) -> Iterator[int]:
    """Bron-Kerbosch with pivoting, run on the complement of G[within].

    ``cand`` holds vertices still addable to the current set, ``excl`` those
    already covered by an earlier branch.  Each branch only tries candidates
    that are adjacent (in G) to the pivot or are the pivot itself.
    """
    stack = [(0, within, 0)]
    while stack:
        current, cand, excl = stack.pop()
        if not cand:
            if not excl:
                yield current
            continue
        pool = cand | excl
        pivot = -1
        fewest = None
        for u in bits(pool):
            branch = cand & (adj[u] | 1 << u)
            size = branch.bit_count()
            if fewest is None or size < fewest:
                fewest, pivot = size, u
                if size <= 1:
                    break
        branch = cand & (adj[pivot] | 1 << pivot)
        for v in bits(branch):
            closed = adj[v] | 1 << v
            stack.append((current | 1 << v, cand & ~closed, excl & ~closed))
            cand &= ~(1 << v)
            excl |= 1 << v


def maximal_independent_sets(g: Graph) -> Iterator[frozenset[int]]:
    for mask in maximal_independent_masks(g.adj, g.vertex_mask):
        yield frozenset(bits(mask))


def independence_number(g: Graph) -> int:
    return max((m.bit_count() for m in maximal_independent_masks(g.adj, g.vertex_mask)), default=0)


def well_covered_mask(adj: tuple[int, ...], within: int) -> bool:
    """Whether G[within] is well-covered; stops at the first size mismatch."""
    for comp in component_masks_adj(adj, within):
        size = None
        for m in maximal_independent_masks(adj, comp):
            c = m.bit_count()
            if size is None:
                size = c
            elif c != size:
                return False
    return True


def component_masks_adj(adj: tuple[int, ...], within: int) -> list[int]:
    comps = []
    todo = within
    while todo:
        comp = frontier = todo & -todo
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= adj[v]
            frontier = reach & todo & ~comp
            comp |= frontier
        comps.append(comp)
        todo &= ~comp
    return comps


def is_well_covered(g: Graph) -> bool:
    return well_covered_mask(g.adj, g.vertex_mask)


def is_very_well_covered(g: Graph) -> bool:
    if g.n % 2:
        return False
    sizes = set()
    for m in maximal_independent_masks(g.adj, g.vertex_mask):
        sizes.add(m.bit_count())
        if len(sizes) > 1:
            return False
    return sizes == {g.n // 2}


def _independence_poly(adj: tuple[int, ...], within: int, memo: dict[int, list[int]]) -> list[int]:
    if within in memo:
        return memo[within]
    comps = component_masks_adj(adj, within)
    if len(comps) > 1:
        poly = [1]
        for c in comps:
            poly = _poly_mul(poly, _independence_poly(adj, c, memo))
    elif within & (within - 1) == 0:
        poly = [1, 1] if within else [1]
    else:
        v = max(bits(within), key=lambda u: (adj[u] & within).bit_count())
        without = _independence_poly(adj, within & ~(1 << v), memo)
        with_v = _independence_poly(adj, within & ~(adj[v] | 1 << v), memo)
        poly = list(without) + [0] * max(0, len(with_v) + 1 - len(without))
        for k, c in enumerate(with_v):
            poly[k + 1] += c
    memo[within] = poly
    return poly


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def independent_set_counts(g: Graph) -> tuple[int, ...]:
    """(i_0, ..., i_alpha): number of independent sets of each size."""
    if g.n > MAX_COUNT_VERTICES:
        raise TooLarge(f"independence counts are capped at {MAX_COUNT_VERTICES} vertices")
    poly = _independence_poly(g.adj, g.vertex_mask, {})
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


@dataclass(frozen=True)
class HVector:
    alpha: int
    counts: tuple[int, ...]
    h: tuple[int, ...]

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.h)


def h_from_counts(counts: tuple[int, ...]) -> HVector:
    alpha = len(counts) - 1
    h = tuple(
        sum((-1) ** (k - r) * comb(alpha - r, k - r) * counts[r] for r in range(k + 1))
        for k in range(alpha + 1)
    )
    if sum(h) != counts[alpha]:
        raise ArithmeticError("h-vector entries do not sum to i_alpha")
    return HVector(alpha, tuple(counts), h)


def h_vector(g: Graph) -> HVector:
    return h_from_counts(independent_set_counts(g))


def is_nonnegative(h: HVector) -> bool:
    return h.is_nonnegative()


def dominates_mask(adj: tuple[int, ...], within: int, dom: int) -> bool:
    for v in bits(within & ~dom):
        if not adj[v] & dom:
            return False
    return True


def is_dominating_set(g: Graph, vertices: Iterable[int]) -> bool:
    """Every vertex outside the set has a neighbour inside it."""
    return dominates_mask(g.adj, g.vertex_mask, _vertex_set(g, vertices))
