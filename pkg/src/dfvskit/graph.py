"""Immutable directed multigraphs, deletion overlays, and the vertex-split gadget.

Vertices are ``0..n-1`` and arcs ``0..m-1``; arc ids follow input order and
parallel arcs keep distinct ids. Arc and vertex sets cross the public API
as ``frozenset`` of ids; the canonical printed form is the sorted tuple.
"""
from __future__ import annotations

import heapq
from array import array
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import _backend
from .errors import ContractError, CyclicGraphError, GraphInputError

ArcSet = frozenset
VertexSet = frozenset


class DiGraph:
    """Directed multigraph in compressed adjacency form.

    Adjacency lists are stored as CSR arrays so the kernels can walk them
    without Python objects; ``out_arcs[out_ptr[v]:out_ptr[v+1]]`` are the
    arc ids leaving ``v`` in ascending order, likewise for ``in_*``.
    """

    __slots__ = ("n", "m", "tails", "heads", "out_ptr", "out_arcs",
                 "in_ptr", "in_arcs", "loops", "_cache")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        tails = array("i")
        heads = array("i")
        for i, (t, h) in enumerate(arcs):
            if not (0 <= t < n and 0 <= h < n):
                raise GraphInputError(f"arc {i} = ({t}, {h}) has an endpoint outside [0, {n})")
            tails.append(t)
            heads.append(h)
        self.n = n
        self.m = len(tails)
        self.tails = tails
        self.heads = heads
        self.out_ptr, self.out_arcs = _csr(n, tails)
        self.in_ptr, self.in_arcs = _csr(n, heads)
        self.loops = array("i", [a for a in range(self.m) if tails[a] == heads[a]])
        self._cache = {}

    @property
    def arcs(self) -> list[tuple[int, int]]:
        return list(zip(self.tails, self.heads))

    def arc(self, a: int) -> tuple[int, int]:
        return self.tails[a], self.heads[a]

    def out_arcs_of(self, v: int) -> Sequence[int]:
        return self.out_arcs[self.out_ptr[v]:self.out_ptr[v + 1]]

    def in_arcs_of(self, v: int) -> Sequence[int]:
        return self.in_arcs[self.in_ptr[v]:self.in_ptr[v + 1]]

    def __eq__(self, other):
        if not isinstance(other, DiGraph):
            return NotImplemented
        return self.n == other.n and self.tails == other.tails and self.heads == other.heads

    def __hash__(self):
        return hash((self.n, self.tails.tobytes(), self.heads.tobytes()))

    def __repr__(self):
        return f"DiGraph(n={self.n}, m={self.m})"


def _csr(n, keys):
    count = [0] * (n + 1)
    for k in keys:
        count[k + 1] += 1
    for v in range(n):
        count[v + 1] += count[v]
    ptr = array("i", count)
    fill = list(count[:n])
    order = array("i", [0]) * len(keys)
    for a, k in enumerate(keys):
        order[fill[k]] = a
        fill[k] += 1
    return ptr, order


def build_graph(n: int, arc_list: Iterable[tuple[int, int]]) -> DiGraph:
    """Build a DiGraph; arc ids are assigned in input order."""
    return DiGraph(n, arc_list)


class GraphView:
    """A DiGraph with some arcs and vertices masked out.

    The masks are mutable bytearrays; recursive searches delete arcs with
    :meth:`remove_arcs` and put them back with :meth:`restore_arcs` rather
    than copying the view. A removed vertex implicitly removes its arcs.
    """

    __slots__ = ("base", "arc_dead", "vert_dead")

    def __init__(self, base: DiGraph, removed_arcs: Iterable[int] = (),
                 removed_vertices: Iterable[int] = ()):
        self.base = base
        self.arc_dead = bytearray(base.m)
        self.vert_dead = bytearray(base.n)
        for a in removed_arcs:
            self.arc_dead[a] = 1
        for v in removed_vertices:
            self.vert_dead[v] = 1

    @classmethod
    def from_masks(cls, base: DiGraph, arc_dead: bytearray, vert_dead: bytearray) -> "GraphView":
        view = cls.__new__(cls)
        view.base = base
        view.arc_dead = arc_dead
        view.vert_dead = vert_dead
        return view

    def copy(self) -> "GraphView":
        return GraphView.from_masks(self.base, bytearray(self.arc_dead), bytearray(self.vert_dead))

    def remove_arcs(self, arcs: Iterable[int]) -> list[int]:
        """Delete arcs; returns the ids that were live before (pass them to restore_arcs)."""
        dead = self.arc_dead
        newly = []
        for a in arcs:
            if not dead[a]:
                dead[a] = 1
                newly.append(a)
        return newly

    def restore_arcs(self, arcs: Iterable[int]) -> None:
        dead = self.arc_dead
        for a in arcs:
            dead[a] = 0

    def without_arcs(self, arcs: Iterable[int]) -> "GraphView":
        view = self.copy()
        view.remove_arcs(arcs)
        return view

    def without_vertices(self, vertices: Iterable[int]) -> "GraphView":
        view = self.copy()
        for v in vertices:
            view.vert_dead[v] = 1
        return view

    def is_live_vertex(self, v: int) -> bool:
        return not self.vert_dead[v]

    def is_live_arc(self, a: int) -> bool:
        t, h = self.base.tails[a], self.base.heads[a]
        return not (self.arc_dead[a] or self.vert_dead[t] or self.vert_dead[h])

    def live_vertices(self) -> list[int]:
        return [v for v in range(self.base.n) if not self.vert_dead[v]]

    def live_arcs(self) -> list[int]:
        return [a for a in range(self.base.m) if self.is_live_arc(a)]

    def materialize(self) -> tuple[DiGraph, dict[int, int], dict[int, int]]:
        """Copy the live part into a fresh DiGraph.

        Returns the graph with the vertex and arc renumbering maps
        (old id -> new id); relative order is preserved.
        """
        vmap = {v: i for i, v in enumerate(self.live_vertices())}
        live = self.live_arcs()
        amap = {a: i for i, a in enumerate(live)}
        g = self.base
        arcs = [(vmap[g.tails[a]], vmap[g.heads[a]]) for a in live]
        return DiGraph(len(vmap), arcs), vmap, amap

    def __repr__(self):
        return (f"GraphView({self.base!r}, removed_arcs={sum(self.arc_dead)}, "
                f"removed_vertices={sum(self.vert_dead)})")


GraphLike = Union[DiGraph, GraphView]


def as_view(g: GraphLike) -> GraphView:
    return g if isinstance(g, GraphView) else GraphView(g)


def _masks(g: GraphLike):
    if isinstance(g, GraphView):
        return g.base, g.arc_dead, g.vert_dead
    return g, bytes(g.m), bytes(g.n)


def vertex_mask(n: int, vertices: Iterable[int]) -> bytearray:
    mask = bytearray(n)
    for v in vertices:
        mask[v] = 1
    return mask


# -- queries -----------------------------------------------------------------

def scc_partition(view: GraphLike) -> list[VertexSet]:
    """Strongly connected components of the live vertices (sink components first)."""
    g, arc_dead, vert_dead = _masks(view)
    labels, count = _backend.kernels.scc_labels(g, arc_dead, vert_dead)
    parts = [[] for _ in range(count)]
    for v, c in enumerate(labels):
        if c >= 0:
            parts[c].append(v)
    return [frozenset(p) for p in parts]


def cycle_vertices(view: GraphLike) -> VertexSet:
    """Live vertices that lie on some directed cycle."""
    g, arc_dead, vert_dead = _masks(view)
    mask = _backend.kernels.cyclic_mask(g, arc_dead, vert_dead)
    return frozenset(v for v in range(g.n) if mask[v])


def is_acyclic(view: GraphLike) -> bool:
    g, arc_dead, vert_dead = _masks(view)
    return 1 not in _backend.kernels.cyclic_mask(g, arc_dead, vert_dead)


def on_cycle(view: GraphLike, v: int) -> bool:
    g, arc_dead, vert_dead = _masks(view)
    if vert_dead[v]:
        raise ContractError(f"vertex {v} is not live in the view")
    return bool(_backend.kernels.cyclic_mask(g, arc_dead, vert_dead)[v])


def topological_order(view: GraphLike) -> list[int]:
    """Kahn's algorithm; smallest available vertex id first.

    Raises CyclicGraphError if the view has a cycle.
    """
    g, arc_dead, vert_dead = _masks(view)
    indeg = [0] * g.n
    live = []
    for a in range(g.m):
        t, h = g.tails[a], g.heads[a]
        if arc_dead[a] or vert_dead[t] or vert_dead[h]:
            continue
        live.append(a)
        indeg[h] += 1
    ready = [v for v in range(g.n) if not vert_dead[v] and indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for a in g.out_arcs_of(u):
            h = g.heads[a]
            if arc_dead[a] or vert_dead[h]:
                continue
            indeg[h] -= 1
            if indeg[h] == 0:
                heapq.heappush(ready, h)
    expected = g.n - sum(1 for v in range(g.n) if vert_dead[v])
    if len(order) != expected:
        raise CyclicGraphError(f"view contains a cycle ({expected - len(order)} vertices unordered)")
    return order


def reachable_from(view: GraphLike, X: Iterable[int]) -> VertexSet:
    g, arc_dead, vert_dead = _masks(view)
    X = list(X)
    for v in X:
        if vert_dead[v]:
            raise ContractError(f"source vertex {v} is not live")
    seen = _backend.kernels.reach(g, arc_dead, vert_dead, vertex_mask(g.n, X), True)
    return frozenset(v for v in range(g.n) if seen[v])


# -- vertex expansion --------------------------------------------------------

@dataclass(frozen=True)
class ExpansionMap:
    """Where the split vertices and original arcs went.

    ``minus[v]``/``plus[v]``/``bridge[v]`` for each expanded vertex ``v``;
    ``arc_image[a]`` is the new id of original arc ``a`` and
    ``arc_head[a]`` its head in the original graph.
    """

    n: int
    m: int
    minus: dict
    plus: dict
    bridge: dict
    arc_image: tuple
    arc_head: tuple

    def bridge_owner(self) -> dict:
        return {b: v for v, b in self.bridge.items()}

    def original_arc(self) -> dict:
        return {img: a for a, img in enumerate(self.arc_image)}


def expand_vertex(G: DiGraph, w: int) -> tuple[DiGraph, ExpansionMap]:
    """Split ``w`` into ``w-`` (new id ``n``, takes the in-arcs) and ``w+`` (keeps id ``w``).

    Original arcs keep their ids; the bridge ``(w-, w+)`` gets id ``m``.
    A loop at ``w`` becomes ``(w+, w-)``. Results are cached on ``G``.
    """
    if not 0 <= w < G.n:
        raise GraphInputError(f"vertex {w} outside [0, {G.n})")
    key = ("vertex", w)
    hit = G._cache.get(key)
    if hit is not None:
        return hit
    n, m = G.n, G.m
    heads = array("i", G.heads)
    for a in G.in_arcs_of(w):
        heads[a] = n
    arcs = list(zip(G.tails, heads))
    arcs.append((n, w))
    H = DiGraph(n + 1, arcs)
    emap = ExpansionMap(n, m, {w: n}, {w: w}, {w: m}, tuple(range(m)), tuple(G.heads))
    G._cache[key] = (H, emap)
    return H, emap


def expand_all(G: DiGraph) -> tuple[DiGraph, ExpansionMap]:
    """Split every vertex: ``v+ = v``, ``v- = n + v``, bridge of ``v`` is arc ``m + v``.

    Original arc ``(u, v)`` keeps its id and becomes ``(u+, v-)``.
    """
    hit = G._cache.get("all")
    if hit is not None:
        return hit
    n, m = G.n, G.m
    arcs = [(t, n + h) for t, h in zip(G.tails, G.heads)]
    arcs.extend((n + v, v) for v in range(n))
    H = DiGraph(2 * n, arcs)
    emap = ExpansionMap(
        n, m,
        {v: n + v for v in range(n)},
        {v: v for v in range(n)},
        {v: m + v for v in range(n)},
        tuple(range(m)),
        tuple(G.heads),
    )
    G._cache["all"] = (H, emap)
    return H, emap


def expanded_view(view: GraphLike, emap: ExpansionMap, H: DiGraph) -> GraphView:
    """Carry a view's deletions over to ``expand_all`` of its base graph."""
    g, arc_dead, vert_dead = _masks(view)
    out = GraphView(H)
    for a in range(g.m):
        if arc_dead[a]:
            out.arc_dead[emap.arc_image[a]] = 1
    for v in range(g.n):
        if vert_dead[v]:
            out.vert_dead[emap.plus[v]] = 1
            out.vert_dead[emap.minus[v]] = 1
    return out
