"""Canonical labeling by colour refinement and individualization.

The search tree follows the usual scheme: refine the ordered partition to an
equitable one, pick the first smallest non-singleton cell, individualize each
of its vertices in turn and recurse.  Every leaf is a discrete partition, i.e.
a labeling; the canonical form is the labeling with the lexicographically
smallest relabeled adjacency rows.  Automorphisms are discovered whenever two
leaves produce the same form and are used to skip children that lie in the same
orbit of the pointwise stabilizer of the current individualized prefix.
"""
from __future__ import annotations

from .graph import Graph, bits, relabel
from .graph6 import encode_adj, to_graph6


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    cells = list(cells)
    masks = [sum(1 << v for v in c) for c in cells]
    # Splitter queue holds cell masks; a split cell re-enters as its pieces.
    queue = list(masks)
    while queue:
        splitter = queue.pop(0)
        out_cells: list[list[int]] = []
        out_masks: list[int] = []
        for cell, cmask in zip(cells, masks):
            if len(cell) == 1:
                out_cells.append(cell)
                out_masks.append(cmask)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & splitter).bit_count(), []).append(v)
            if len(groups) == 1:
                out_cells.append(cell)
                out_masks.append(cmask)
                continue
            pieces = [groups[k] for k in sorted(groups)]
            piece_masks = [sum(1 << v for v in p) for p in pieces]
            out_cells.extend(pieces)
            out_masks.extend(piece_masks)
            if cmask in queue:
                queue.remove(cmask)
                queue.extend(piece_masks)
            else:
                # Hopcroft's trick: all but the largest piece suffice.
                big = max(range(len(pieces)), key=lambda i: len(pieces[i]))
                queue.extend(m for i, m in enumerate(piece_masks) if i != big)
        cells, masks = out_cells, out_masks
    return cells


def _form(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for u in bits(adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


class _Search:
    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.best_form: tuple[int, ...] | None = None
        self.best_path: list[int] = []
        self.best_order: list[int] | None = None
        self.first_form: tuple[int, ...] | None = None
        self.first_path: list[int] = []
        self.first_order: list[int] | None = None
        self.automorphisms: list[list[int]] = []

    def _record_automorphism(self, order_a: list[int], order_b: list[int]) -> None:
        gamma = [0] * len(order_a)
        for a, b in zip(order_a, order_b):
            gamma[a] = b
        if any(gamma[v] != v for v in range(len(gamma))):
            self.automorphisms.append(gamma)

    @staticmethod
    def _common(a: list[int], b: list[int]) -> int:
        k = 0
        while k < len(a) and k < len(b) and a[k] == b[k]:
            k += 1
        return k

    def leaf(self, cells: list[list[int]], path: list[int]) -> int | None:
        """Process a leaf; return a depth to jump back to, or None."""
        order = [c[0] for c in cells]
        form = _form(self.adj, order)
        if self.first_form is None:
            self.first_form, self.first_order, self.first_path = form, order, path
            self.best_form, self.best_order, self.best_path = form, order, path
            return None
        # An automorphism maps an already finished subtree onto the one we are
        # in, so the rest of it can be skipped.
        if form == self.first_form:
            self._record_automorphism(self.first_order, order)
            return self._common(self.first_path, path)
        if form == self.best_form:
            self._record_automorphism(self.best_order, order)
            return self._common(self.best_path, path)
        if form < self.best_form:
            self.best_form, self.best_order, self.best_path = form, order, path
        return None

    def _orbit_rep(self, prefix: list[int], n: int) -> list[int]:
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.automorphisms:
            if all(gamma[p] == p for p in prefix):
                for v in range(n):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(n)]

    def run(self, cells: list[list[int]], prefix: list[int]) -> int | None:
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        if target is None:
            return self.leaf(cells, prefix)
        n = len(self.adj)
        depth = len(prefix)
        explored: list[int] = []
        rep: list[int] | None = None
        seen_autos = -1
        for v in sorted(cells[target]):
            if explored:
                if seen_autos != len(self.automorphisms):
                    rep = self._orbit_rep(prefix, n)
                    seen_autos = len(self.automorphisms)
                if any(rep[v] == rep[u] for u in explored):
                    continue
            explored.append(v)
            rest = [u for u in cells[target] if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            jump = self.run(_refine(self.adj, child), prefix + [v])
            if jump is not None and jump < depth:
                return jump
        return None


def _best(adj: tuple[int, ...]) -> _Search:
    search = _Search(adj)
    search.run(_refine(adj, [list(range(len(adj)))]), [])
    return search


def canonical_order(g: Graph) -> list[int]:
    """Vertex sequence whose positions give the canonical relabeling."""
    if g.n == 0:
        return []
    return _best(g.adj).best_order


def key_from_adj(adj: tuple[int, ...]) -> bytes:
    """canonical_key for a raw adjacency tuple, skipping Graph validation."""
    if not adj:
        return b"?"
    return encode_adj(_best(adj).best_form).encode("ascii")


def canonical_form(g: Graph) -> Graph:
    """Canonically relabeled copy of ``g`` (names follow their vertices)."""
    order = canonical_order(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return relabel(g, perm)


def canonical_key(g: Graph) -> bytes:
    """graph6 bytes of the canonical form; equal exactly for isomorphic graphs."""
    return to_graph6(canonical_form(g)).encode("ascii")
