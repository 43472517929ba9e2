"""Feedback arc set with a feedback-vertex-set hint, by important-cut branching.

Given a digraph, a dfvs ``W`` and a budget ``k``, find at most ``k`` arcs
whose deletion makes the graph acyclic. Each search node drops hint
vertices that lie on no cycle, then for every remaining hint vertex
``w`` splits it into ``w-``/``w+`` and branches on the important
``({w+}, (W - w) + {w-})``-cuts of size at most ``k``: one of them is
contained in some minimum solution for the right choice of ``w``.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import _backend
from .cuts import important_cut_arcs
from .errors import ContractError, GraphInputError
from .graph import GraphLike, GraphView, as_view, expand_vertex, is_acyclic, vertex_mask

MAX_K = 64


@dataclass
class DfasvInstance:
    view: GraphView
    W: frozenset
    k: int

    @classmethod
    def of(cls, g: GraphLike, W: Iterable[int], k: int) -> "DfasvInstance":
        return cls(as_view(g), frozenset(W), k)


@dataclass
class SearchStats:
    """Search-tree telemetry for one solve.

    ``cut_size_histogram`` counts every cut branch taken (size -> count).
    With ``record_traces`` each leaf appends ``(vertex_sequence,
    cut_size_sequence)`` for the root-to-leaf path to ``traces``.
    """

    nodes: int = 0
    leaves: int = 0
    max_depth: int = 0
    cut_size_histogram: Counter = field(default_factory=Counter)
    reduction_removals: int = 0
    record_traces: bool = False
    traces: list = field(default_factory=list)
    k: int = 0
    root_hint_size: int = 0

    @property
    def analysis_applies(self) -> bool:
        """Whether the root satisfied ``|W| <= k + 1``, the leaf bound's premise."""
        return self.root_hint_size <= self.k + 1

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.max_depth = max(self.max_depth, other.max_depth)
        self.cut_size_histogram.update(other.cut_size_histogram)
        self.reduction_removals += other.reduction_removals


@dataclass(frozen=True)
class LeafBound:
    k: int
    bound: int


def leaf_bound(k: int) -> LeafBound:
    """Exact value of the search-tree leaf-count bound for budget ``k``.

    sum over a = 1..k of (k+1)!/(k+1-a)! * C(a, max(0, 2a-k)) * 4^(2(k-a));
    ``k = 0`` gives 1 (a single-leaf tree).
    """
    if k < 0:
        raise GraphInputError(f"k must be non-negative, got {k}")
    if k == 0:
        return LeafBound(0, 1)
    total = 0
    for a in range(1, k + 1):
        total += (math.perm(k + 1, a)
                  * math.comb(a, max(0, 2 * a - k))
                  * 4 ** (2 * (k - a)))
    return LeafBound(k, total)


def gamma_epsilon(eps: float) -> float:
    """eps^-eps * (1-eps)^-(1-eps); increasing on (0, 1/2], tends to 1 as eps -> 0."""
    if not 0.0 < eps <= 0.5:
        raise GraphInputError(f"eps must lie in (0, 1/2], got {eps}")
    return eps ** (-eps) * (1.0 - eps) ** (-(1.0 - eps))


def reduce_hint(view: GraphLike, W: Iterable[int]) -> frozenset:
    """Drop hint vertices that lie on no cycle of the view."""
    view = as_view(view)
    mask = _backend.kernels.cyclic_mask(view.base, view.arc_dead, view.vert_dead)
    return frozenset(w for w in W if mask[w])


class _Search:
    def __init__(self, g, arc_dead, vert_dead, stats):
        self.g = g
        self.arc_dead = arc_dead
        self.vert_dead = vert_dead
        self.stats = stats
        self.pi = []
        self.xs = []

    def _leaf(self):
        st = self.stats
        st.leaves += 1
        if st.record_traces:
            st.traces.append((tuple(self.pi), tuple(self.xs)))

    def run(self, W, k, depth):
        st = self.stats
        st.nodes += 1
        if depth > st.max_depth:
            st.max_depth = depth
        g, arc_dead, vert_dead = self.g, self.arc_dead, self.vert_dead
        on_cycle = _backend.kernels.cyclic_mask(g, arc_dead, vert_dead)
        if 1 not in on_cycle:
            self._leaf()
            return []
        if k == 0:
            self._leaf()
            return None
        kept = [w for w in W if on_cycle[w]]
        st.reduction_removals += len(W) - len(kept)
        branched = False
        for w in kept:
            H, emap = expand_vertex(g, w)
            w_minus = emap.minus[w]
            bridge = emap.bridge[w]
            h_arc_dead = arc_dead + b"\x00"
            h_vert_dead = vert_dead + b"\x00"
            tgt = vertex_mask(H.n, [x for x in kept if x != w])
            tgt[w_minus] = 1
            src = vertex_mask(H.n, [w])
            cuts = important_cut_arcs(H, h_arc_dead, h_vert_dead, src, tgt, k)
            rest = [x for x in kept if x != w]
            for S in cuts:
                # w lies on a cycle, so w+ reaches w- and every cut is nonempty
                assert S and bridge not in S
                branched = True
                st.cut_size_histogram[len(S)] += 1
                for a in S:
                    arc_dead[a] = 1
                self.pi.append(w)
                self.xs.append(len(S))
                F = self.run(rest, k - len(S), depth + 1)
                self.pi.pop()
                self.xs.pop()
                for a in S:
                    arc_dead[a] = 0
                if F is not None:
                    return F + list(S)
        if not branched:
            self._leaf()
        return None


def check_hint(view: GraphView, W: frozenset) -> None:
    for w in W:
        if not 0 <= w < view.base.n or view.vert_dead[w]:
            raise ContractError(f"hint vertex {w} is not a live vertex")
    if not is_acyclic(view.without_vertices(W)):
        raise ContractError("hint W is not a dfvs: the view minus W still has a cycle")


def solve_dfasv(inst: DfasvInstance, stats: Optional[SearchStats] = None,
                *, check: bool = True) -> Optional[frozenset]:
    """Return a dfas of size at most ``inst.k`` (arc ids of the view's base), or None.

    Hint vertices are tried in ascending id and cuts in enumeration order,
    so the result and ``stats`` are deterministic.
    """
    view = as_view(inst.view)
    W = frozenset(inst.W)
    k = inst.k
    if not 0 <= k <= MAX_K:
        raise ContractError(f"k must lie in [0, {MAX_K}], got {k}")
    if check:
        check_hint(view, W)
    if stats is None:
        stats = SearchStats()
    stats.k = k
    stats.root_hint_size = len(W)
    arc_dead = bytearray(view.arc_dead)
    search = _Search(view.base, arc_dead, view.vert_dead, stats)
    F = search.run(sorted(W), k, 0)
    if F is None:
        return None
    F = frozenset(F)
    assert len(F) <= k and is_acyclic(view.without_arcs(F)), "solver returned an invalid dfas"
    return F
