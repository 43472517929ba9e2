"""Brute-force ground truth and instance generators.

Nothing here touches the compiled kernels or the flow code: acyclicity
is tested by peeling sinks off bitmask adjacency, reachability by
bitmask closure. These are the independent references every solver
component is differentially tested against.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .errors import GraphInputError
from .graph import DiGraph

MAX_DFVS_N = 16
MAX_SUBSET_M = 20


def _succ_masks(n, arcs, skip_arcs=0, skip_vertices=0):
    succ = [0] * n
    for i, (t, h) in enumerate(arcs):
        if skip_arcs >> i & 1 or skip_vertices >> t & 1 or skip_vertices >> h & 1:
            continue
        succ[t] |= 1 << h
    return succ


def _acyclic_masks(n, succ, alive):
    # peel sinks; a self-loop keeps its vertex from ever becoming a sink
    while alive:
        sinks = 0
        rest = alive
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if succ[v] & alive == 0:
                sinks |= low
            rest ^= low
        if not sinks:
            return False
        alive &= ~sinks
    return True


def acyclic_without(G: DiGraph, vertices=(), arcs=()) -> bool:
    """True iff ``G`` minus the given vertices and arcs has no directed cycle."""
    skip_v = 0
    for v in vertices:
        skip_v |= 1 << v
    skip_a = 0
    for a in arcs:
        skip_a |= 1 << a
    succ = _succ_masks(G.n, G.arcs, skip_a, skip_v)
    return _acyclic_masks(G.n, succ, ((1 << G.n) - 1) & ~skip_v)


def brute_min_dfvs(G: DiGraph) -> tuple[int, frozenset]:
    """Minimum dfvs by trying vertex subsets in ascending size, lexicographic order."""
    if G.n > MAX_DFVS_N:
        raise GraphInputError(f"brute_min_dfvs needs n <= {MAX_DFVS_N}, got {G.n}")
    arcs = G.arcs
    full = (1 << G.n) - 1
    for s in range(G.n + 1):
        for combo in combinations(range(G.n), s):
            skip = 0
            for v in combo:
                skip |= 1 << v
            if _acyclic_masks(G.n, _succ_masks(G.n, arcs, 0, skip), full & ~skip):
                return s, frozenset(combo)
    raise AssertionError("removing every vertex must leave an acyclic graph")


def brute_min_dfas(G: DiGraph) -> tuple[int, frozenset]:
    """Minimum dfas.

    Arc subsets in ascending size when ``m <= 20``; otherwise the exact
    ordering DP of :func:`min_dfas_by_ordering` (needs ``n <= 16``).
    """
    if G.m > MAX_SUBSET_M:
        return min_dfas_by_ordering(G)
    arcs = G.arcs
    full = (1 << G.n) - 1
    for s in range(G.m + 1):
        for combo in combinations(range(G.m), s):
            skip = 0
            for a in combo:
                skip |= 1 << a
            if _acyclic_masks(G.n, _succ_masks(G.n, arcs, skip), full):
                return s, frozenset(combo)
    raise AssertionError("removing every arc must leave an acyclic graph")


def min_dfas_by_ordering(G: DiGraph) -> tuple[int, frozenset]:
    """Minimum dfas as the fewest backward arcs over all vertex orders.

    Subset DP: ``best[S]`` is the fewest backward arcs among orders that
    place ``S`` first. Loops are always backward.
    """
    n = G.n
    if n > MAX_DFVS_N:
        raise GraphInputError(f"min_dfas_by_ordering needs n <= {MAX_DFVS_N}, got {n}")
    # into[v][u] = number of arcs v -> u (u != v)
    into = [[0] * n for _ in range(n)]
    loops = []
    for a, (t, h) in enumerate(G.arcs):
        if t == h:
            loops.append(a)
        else:
            into[t][h] += 1
    size = 1 << n
    inf = float("inf")
    best = [inf] * size
    choice = [-1] * size
    best[0] = 0
    for S in range(size):
        if best[S] == inf:
            continue
        for v in range(n):
            if S >> v & 1:
                continue
            # v goes after everything in S: arcs v -> S are backward
            cost = best[S]
            row = into[v]
            rest = S
            while rest:
                low = rest & -rest
                cost += row[low.bit_length() - 1]
                rest ^= low
            T = S | 1 << v
            if cost < best[T]:
                best[T] = cost
                choice[T] = v
    order = []
    S = size - 1
    while S:
        v = choice[S]
        order.append(v)
        S &= ~(1 << v)
    order.reverse()
    pos = {v: i for i, v in enumerate(order)}
    witness = [a for a, (t, h) in enumerate(G.arcs) if t != h and pos[t] > pos[h]]
    witness.extend(loops)
    return len(witness), frozenset(witness)


def _reach_bits(arcs, seeds, skip_arcs):
    r = seeds
    while True:
        nxt = r
        for i, (t, h) in enumerate(arcs):
            if not skip_arcs >> i & 1 and r >> t & 1:
                nxt |= 1 << h
        if nxt == r:
            return r
        r = nxt


def reach_table(G: DiGraph, X, k: int) -> dict[int, int]:
    """Reach bitmask of ``G - F`` from ``X`` for every arc subset ``F`` (as bitmask) with ``|F| <= k``."""
    if G.m > MAX_SUBSET_M:
        raise GraphInputError(f"brute-force cut oracle needs m <= {MAX_SUBSET_M}, got {G.m}")
    seeds = 0
    for v in X:
        seeds |= 1 << v
    arcs = G.arcs
    table = {}
    for s in range(min(k, G.m) + 1):
        for combo in combinations(range(G.m), s):
            skip = 0
            for a in combo:
                skip |= 1 << a
            table[skip] = _reach_bits(arcs, seeds, skip)
    return table


def brute_important_cuts(G: DiGraph, X, Y, k: int, *, table=None,
                         all_reaches_contained: bool = False) -> set[frozenset]:
    """All important (X,Y)-cuts of size <= k, straight from the definition.

    A cut ``F`` (arc set meeting every X-Y path) is important when no
    proper subset is a cut and no cut ``F'`` with ``|F'| <= |F|`` reaches
    a strict superset of ``F``'s reach. With ``all_reaches_contained``
    the second condition is the stronger "every such ``F'`` reaches a
    subset of ``F``'s reach".
    """
    X = frozenset(X)
    Y = frozenset(Y)
    if X & Y:
        raise GraphInputError("X and Y must be disjoint")
    if table is None:
        table = reach_table(G, X, k)
    ymask = 0
    for v in Y:
        ymask |= 1 << v
    cuts_by_size: dict[int, list[tuple[int, int]]] = {}
    for F, R in table.items():
        if R & ymask == 0:
            cuts_by_size.setdefault(bin(F).count("1"), []).append((F, R))
    out = set()
    for s in range(k + 1):
        for F, R in cuts_by_size.get(s, ()):
            minimal = True
            rest = F
            while rest:
                low = rest & -rest
                if table[F ^ low] & ymask == 0:
                    minimal = False
                    break
                rest ^= low
            if not minimal:
                continue
            dominated = False
            for s2 in range(s + 1):
                for _, R2 in cuts_by_size.get(s2, ()):
                    if all_reaches_contained:
                        if R2 & ~R:
                            dominated = True
                            break
                    elif R2 != R and R2 & R == R:
                        dominated = True
                        break
                if dominated:
                    break
            if not dominated:
                out.add(frozenset(i for i in range(G.m) if F >> i & 1))
    return out


def all_digraphs(n: int, loops: bool = False) -> Iterator[DiGraph]:
    """Every digraph on ``n`` labelled vertices without parallel arcs.

    Arc slots are the ordered pairs ``(u, v)`` in lexicographic order
    (``u != v`` unless ``loops``); graph ``i`` contains slot ``j`` iff bit
    ``j`` of ``i`` is set.
    """
    slots = [(u, v) for u in range(n) for v in range(n) if loops or u != v]
    for bits in range(1 << len(slots)):
        yield DiGraph(n, [slots[j] for j in range(len(slots)) if bits >> j & 1])


@dataclass(frozen=True)
class GenSpec:
    kind: str = "erdos-renyi"
    n: int = 10
    p: float = 0.2
    planted_k: int = 0
    seed: int = 0
    loops: bool = False


KINDS = ("erdos-renyi", "tournament", "planted-dfvs")


def generate(spec: GenSpec) -> tuple[DiGraph, Optional[frozenset]]:
    """Deterministic random instance; second item is the planted dfvs (or None).

    ``planted-dfvs`` draws a hidden vertex order, keeps every forward arc
    with probability ``p`` and every backward arc with probability ``p``
    only when its head is planted, so deleting the planted set leaves a DAG.
    """
    if spec.kind not in KINDS:
        raise GraphInputError(f"unknown generator kind {spec.kind!r}")
    if spec.n < 0 or not 0.0 <= spec.p <= 1.0:
        raise GraphInputError("need n >= 0 and 0 <= p <= 1")
    rng = random.Random(spec.seed)
    n = spec.n
    arcs = []
    planted = None
    if spec.kind == "erdos-renyi":
        for u in range(n):
            for v in range(n):
                if (u != v or spec.loops) and rng.random() < spec.p:
                    arcs.append((u, v))
    elif spec.kind == "tournament":
        for u in range(n):
            for v in range(u + 1, n):
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    else:
        if not 0 <= spec.planted_k <= n:
            raise GraphInputError("planted_k must lie in [0, n]")
        order = list(range(n))
        rng.shuffle(order)
        pos = {v: i for i, v in enumerate(order)}
        planted = frozenset(rng.sample(range(n), spec.planted_k))
        for u in range(n):
            for v in range(n):
                if u == v:
                    if spec.loops and v in planted and rng.random() < spec.p:
                        arcs.append((u, v))
                    continue
                if pos[u] < pos[v] or v in planted:
                    if rng.random() < spec.p:
                        arcs.append((u, v))
    return DiGraph(n, arcs), planted
