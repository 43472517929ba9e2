"""Directed feedback vertex set by iterative compression over vertex prefixes."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .compression import CompressionInstance, solve_compression
from .dfasv import MAX_K, SearchStats
from .errors import ContractError
from .graph import DiGraph, GraphView, is_acyclic, scc_partition

MODES = ("decision", "construct", "minimize")


@dataclass
class DfvsQuery:
    G: DiGraph
    k: int
    mode: str = "construct"


def solve_dfvs(q: DfvsQuery, stats_sink: Optional[list] = None,
               scc_split: bool = False) -> Optional[frozenset]:
    """A dfvs of size at most ``q.k``, or None.

    Vertices are added in ascending id. While the prefix has at most ``k``
    vertices the whole prefix is the solution; afterwards the previous
    solution plus the new vertex is a dfvs of size at most ``k + 1`` and is
    compressed. If some prefix needs more than ``k`` vertices so does the
    whole graph. Every DFAS-V search appends its :class:`SearchStats` to
    ``stats_sink`` when given. ``mode="minimize"`` treats ``k`` as the cap
    and returns a minimum solution.
    """
    if q.mode not in MODES:
        raise ContractError(f"mode must be one of {MODES}, got {q.mode!r}")
    if not 0 <= q.k <= MAX_K:
        raise ContractError(f"k must lie in [0, {MAX_K}], got {q.k}")
    if q.mode == "minimize":
        found = minimize_dfvs(q.G, q.k, stats_sink=stats_sink, scc_split=scc_split)
        return None if found is None else found[1]
    if scc_split:
        return _solve_split(q.G, q.k, stats_sink)
    return _iterative_compression(q.G, q.k, stats_sink)


def _iterative_compression(G: DiGraph, k: int, stats_sink) -> Optional[frozenset]:
    n = G.n
    prefix = GraphView(G, removed_vertices=range(n))
    S = frozenset()
    for i in range(n):
        prefix.vert_dead[i] = 0
        W = S | {i}
        if len(W) <= k:
            S = W
            continue
        stats = SearchStats()
        S = solve_compression(CompressionInstance(prefix, W, k), stats)
        if stats_sink is not None:
            stats_sink.append(stats)
        if S is None:
            return None
    assert len(S) <= k and is_acyclic(GraphView(G, removed_vertices=S))
    return S


def _cyclic_components(G: DiGraph):
    view = GraphView(G)
    loops = {G.tails[a] for a in G.loops}
    for comp in sorted(scc_partition(view), key=min):
        if len(comp) > 1 or next(iter(comp)) in loops:
            yield sorted(comp)


def _induced(G: DiGraph, vertices):
    index = {v: i for i, v in enumerate(vertices)}
    arcs = [(index[t], index[h]) for t, h in G.arcs if t in index and h in index]
    return DiGraph(len(vertices), arcs)


def _solve_split(G: DiGraph, k: int, stats_sink) -> Optional[frozenset]:
    found = minimize_dfvs(G, k, stats_sink=stats_sink, scc_split=True)
    return None if found is None else found[1]


def minimize_dfvs(G: DiGraph, k_max: int, stats_sink: Optional[list] = None,
                  scc_split: bool = False) -> Optional[tuple[int, frozenset]]:
    """Smallest ``k <= k_max`` admitting a dfvs, with a witness; None if above ``k_max``."""
    if not 0 <= k_max <= MAX_K:
        raise ContractError(f"k_max must lie in [0, {MAX_K}], got {k_max}")
    if scc_split:
        # every cycle lives inside one strongly connected component
        out = set()
        for comp in _cyclic_components(G):
            if len(out) > k_max:
                return None
            found = minimize_dfvs(_induced(G, comp), k_max - len(out), stats_sink=stats_sink)
            if found is None:
                return None
            out.update(comp[v] for v in found[1])
        return len(out), frozenset(out)
    for k in range(k_max + 1):
        S = _iterative_compression(G, k, stats_sink)
        if S is not None:
            return len(S), S
    return None
