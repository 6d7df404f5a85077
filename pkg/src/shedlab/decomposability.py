"""Vertex decomposability, shedding sets and decomposition witnesses.

A graph is vertex decomposable when it is well-covered and either has no
edges, or has a shedding vertex ``x`` with both ``G - x`` and ``G - N[x]``
vertex decomposable.  The decider splits off components (a disjoint union is
vertex decomposable iff each part is) and memoizes connected components by
canonical key in a :class:`VDCache`.
"""
from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass

from .canon import key_from_adj
from .graph import Graph, GraphError, bits, delete_closed_neighborhood, delete_vertex
from .independence import (
    component_masks_adj,
    dominates_mask,
    is_well_covered,
    well_covered_mask,
)

# Rough per-entry footprint (key bytes object + dict slot) used to turn a byte
# budget into an entry count.
_ENTRY_BYTES = 120


class NotVertexDecomposable(GraphError):
    pass


class VDCache:
    """Canonical key -> verdict map with insert-if-absent semantics.

    Safe to share between threads.  With ``max_entries`` set, the oldest
    entries are evicted first; verdicts are deterministic so eviction only
    costs recomputation.
    """

    def __init__(self, max_entries: int | None = None):
        self._data: dict[bytes, bool] = {}
        self._lock = threading.Lock()
        self.max_entries = max_entries
        self.hits = 0
        self.misses = 0

    @classmethod
    def from_env(cls, budget: int | None = None) -> VDCache:
        """Cache bounded by ``budget`` bytes, else by SHEDLAB_CACHE_BYTES, else unbounded."""
        if budget is None:
            budget = os.environ.get("SHEDLAB_CACHE_BYTES")
        if not budget:
            return cls()
        return cls(max_entries=max(1, int(budget) // _ENTRY_BYTES))

    def get(self, key: bytes) -> bool | None:
        value = self._data.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, key: bytes, value: bool) -> bool:
        with self._lock:
            stored = self._data.setdefault(key, value)
            if self.max_entries is not None:
                while len(self._data) > self.max_entries:
                    del self._data[next(iter(self._data))]
            return stored

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key: bytes) -> bool:
        return key in self._data


def _sub_adj(adj: tuple[int, ...], mask: int) -> tuple[int, ...]:
    keep = list(bits(mask))
    pos = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        row = 0
        for u in bits(adj[v] & mask):
            row |= 1 << pos[u]
        out.append(row)
    return tuple(out)


def candidate_order(adj: tuple[int, ...], within: int) -> list[int]:
    """Shedding candidates: neighbours of simplicial vertices, then by degree.

    Neighbours of simplicial vertices are always shedding vertices of a vertex
    decomposable graph, so trying them first usually ends the search at once.
    """
    first = 0
    for v in bits(within):
        nb = adj[v] & within
        if all(nb & ~(adj[u] | 1 << u) == 0 for u in bits(nb)):
            first |= nb
    deg = {v: (adj[v] & within).bit_count() for v in bits(within)}
    head = sorted(bits(first), key=lambda v: (-deg[v], v))
    tail = sorted(bits(within & ~first), key=lambda v: (-deg[v], v))
    return head + tail


def _vd(adj: tuple[int, ...], within: int, cache: VDCache) -> bool:
    for comp in component_masks_adj(adj, within):
        if comp & (comp - 1) == 0:
            continue
        if not _vd_connected(_sub_adj(adj, comp), cache):
            return False
    return True


def _vd_connected(sub: tuple[int, ...], cache: VDCache) -> bool:
    n = len(sub)
    full = (1 << n) - 1
    if all(row == full ^ (1 << v) for v, row in enumerate(sub)):
        return True
    key = key_from_adj(sub)
    hit = cache.get(key)
    if hit is not None:
        return hit
    verdict = _decide(sub, full, cache)
    return cache.put(key, verdict)


def _decide(adj: tuple[int, ...], full: int, cache: VDCache) -> bool:
    if not well_covered_mask(adj, full):
        return False
    for x in candidate_order(adj, full):
        closed = adj[x] | 1 << x
        if _vd(adj, full & ~closed, cache) and _vd(adj, full & ~(1 << x), cache):
            return True
    return False


def is_vertex_decomposable(g: Graph, cache: VDCache | None = None) -> bool:
    if cache is None:
        cache = VDCache()
    return _vd(g.adj, g.vertex_mask, cache)


def _shed_mask(g: Graph, cache: VDCache) -> int:
    if not _vd(g.adj, g.vertex_mask, cache):
        raise NotVertexDecomposable("Shed(G) is only defined for vertex decomposable graphs")
    mask = 0
    for x in range(g.n):
        if _vd(g.adj, g.vertex_mask & ~(1 << x), cache):
            mask |= 1 << x
    return mask


def shedding_set(g: Graph, cache: VDCache | None = None) -> frozenset[int]:
    """Vertices x with G - x vertex decomposable (G must be vertex decomposable)."""
    if cache is None:
        cache = VDCache()
    return frozenset(bits(_shed_mask(g, cache)))


def shed_is_dominating(g: Graph, cache: VDCache | None = None) -> bool:
    if cache is None:
        cache = VDCache()
    return dominates_mask(g.adj, g.vertex_mask, _shed_mask(g, cache))


# -- witnesses ---------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """One node of a decomposition derivation.

    ``kind`` is ``"isolated"`` (edgeless, nonempty), ``"empty"`` (no vertices)
    or ``"shed"``; a shed node names its vertex and holds the witnesses for
    ``G - x`` (``deletion``) and ``G - N[x]`` (``link``).
    """

    kind: str
    vertex: str | None = None
    deletion: Witness | None = None
    link: Witness | None = None

    def to_text(self) -> str:
        if self.kind == "isolated":
            return "Isolated"
        if self.kind == "empty":
            return "Empty"
        return f"Shed({self.vertex}; {self.deletion.to_text()}; {self.link.to_text()})"

    def to_dict(self) -> dict:
        if self.kind != "shed":
            return {"base": self.kind}
        return {"shed": self.vertex, "deletion": self.deletion.to_dict(), "link": self.link.to_dict()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> Witness:
        if "base" in data:
            if data["base"] not in ("isolated", "empty"):
                raise ValueError(f"unknown base kind {data['base']!r}")
            return cls(data["base"])
        return cls("shed", str(data["shed"]), cls.from_dict(data["deletion"]), cls.from_dict(data["link"]))

    @classmethod
    def from_text(cls, text: str) -> Witness:
        node, rest = _parse_witness(text.strip())
        if rest.strip():
            raise ValueError(f"trailing text in witness: {rest!r}")
        return node

    def depth(self) -> int:
        if self.kind != "shed":
            return 0
        return 1 + max(self.deletion.depth(), self.link.depth())


def _parse_witness(text: str) -> tuple[Witness, str]:
    text = text.lstrip()
    for word, kind in (("Isolated", "isolated"), ("Empty", "empty")):
        if text.startswith(word):
            return Witness(kind), text[len(word):]
    if not text.startswith("Shed("):
        raise ValueError(f"cannot parse witness at {text[:20]!r}")
    text = text[5:]
    name, sep, text = text.partition(";")
    if not sep:
        raise ValueError("missing ';' after shedding vertex")
    deletion, text = _parse_witness(text)
    text = text.lstrip()
    if not text.startswith(";"):
        raise ValueError("missing ';' between branches")
    link, text = _parse_witness(text[1:])
    text = text.lstrip()
    if not text.startswith(")"):
        raise ValueError("missing ')'")
    return Witness("shed", name.strip(), deletion, link), text[1:]


def _named(g: Graph) -> Graph:
    return g if g.names is not None else g.with_names([str(v) for v in range(g.n)])


def decomposition_witness(g: Graph, cache: VDCache | None = None) -> Witness:
    if cache is None:
        cache = VDCache()
    if not is_vertex_decomposable(g, cache):
        raise NotVertexDecomposable("no witness exists for a graph that is not vertex decomposable")
    return _build(_named(g), cache)


def _build(g: Graph, cache: VDCache) -> Witness:
    if g.n == 0:
        return Witness("empty")
    if g.num_edges == 0:
        return Witness("isolated")
    full = g.vertex_mask
    for x in candidate_order(g.adj, full):
        closed = g.adj[x] | 1 << x
        if _vd(g.adj, full & ~closed, cache) and _vd(g.adj, full & ~(1 << x), cache):
            return Witness(
                "shed",
                g.name(x),
                _build(delete_vertex(g, x), cache),
                _build(delete_closed_neighborhood(g, x), cache),
            )
    raise AssertionError("vertex decomposable graph without a shedding vertex")


def verify_witness(g: Graph, w: Witness) -> bool:
    """Replay ``w`` against ``g``, checking well-coveredness at every node."""
    return _replay(_named(g), w)


def _replay(g: Graph, w: Witness) -> bool:
    if not is_well_covered(g):
        return False
    if w.kind == "empty":
        return g.n == 0
    if w.kind == "isolated":
        return g.n > 0 and g.num_edges == 0
    if w.kind != "shed" or w.vertex is None or w.deletion is None or w.link is None:
        return False
    if g.names is None or w.vertex not in g.names:
        return False
    x = g.names.index(w.vertex)
    return _replay(delete_vertex(g, x), w.deletion) and _replay(delete_closed_neighborhood(g, x), w.link)

