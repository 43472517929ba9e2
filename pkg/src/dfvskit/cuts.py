"""Unit-capacity minimum cuts and important (X,Y)-cut enumeration.

An (X,Y)-cut is a set of arcs meeting every X-Y path. It is *important*
when it is inclusion-minimal and no cut of at most its size leaves a
strictly larger set reachable from X. Enumeration uses the classic
farthest-minimum-cut branching and then filters candidates through an
exact importance test, so the output is exactly the set of important
cuts of size at most the budget.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import _backend
from .errors import ContractError
from .graph import GraphLike, GraphView, as_view, reachable_from, vertex_mask


@dataclass(frozen=True)
class CutProblem:
    view: GraphView
    X: frozenset
    Y: frozenset
    budget: int

    @classmethod
    def of(cls, g: GraphLike, X: Iterable[int], Y: Iterable[int], budget: int) -> "CutProblem":
        return cls(as_view(g), frozenset(X), frozenset(Y), budget)


@dataclass(frozen=True)
class MinCutResult:
    """Extremal minimum cuts. When ``exceeds`` is set the cut fields are None
    and ``size`` is ``budget + 1`` (a lower bound on the true minimum)."""

    size: int
    exceeds: bool
    closest_reach: Optional[frozenset]
    farthest_reach: Optional[frozenset]
    closest_cut: Optional[frozenset]
    farthest_cut: Optional[frozenset]


@dataclass(frozen=True)
class ImportantCut:
    arcs: frozenset
    reach: frozenset

    def canonical(self) -> tuple:
        return tuple(sorted(self.arcs))


def _check(p: CutProblem):
    g = p.view.base
    if p.budget < 0:
        raise ContractError(f"budget must be non-negative, got {p.budget}")
    if not p.X or not p.Y:
        raise ContractError("X and Y must be nonempty")
    if p.X & p.Y:
        raise ContractError(f"X and Y overlap on {sorted(p.X & p.Y)}")
    for v in p.X | p.Y:
        if not 0 <= v < g.n or p.view.vert_dead[v]:
            raise ContractError(f"vertex {v} is not a live vertex of the view")


def _farthest(g, arc_dead, vert_dead, src, tgt, budget):
    """Max flow capped at budget+1, then the farthest minimum cut.

    Returns ``(size, reach_mask, cut_arcs)``; the last two are None when
    the minimum cut exceeds the budget. ``arc_dead`` is restored on exit.
    """
    K = _backend.kernels
    flow = bytearray(g.m)
    lam = K.max_flow(g, arc_dead, vert_dead, flow, src, tgt, budget + 1)
    if lam > budget:
        return lam, None, None
    if lam == 0:
        return 0, K.reach(g, arc_dead, vert_dead, src, True), []
    co = K.residual_reach(g, arc_dead, vert_dead, flow, tgt, False)
    cut = K.frontier(g, arc_dead, vert_dead, co, True)
    for a in cut:
        arc_dead[a] = 1
    far = K.reach(g, arc_dead, vert_dead, src, True)
    for a in cut:
        arc_dead[a] = 0
    return lam, far, cut


def min_cut(p: CutProblem) -> MinCutResult:
    """Minimum (X,Y)-cut with its closest and farthest extremes.

    Performs at most ``budget + 1`` augmentations.
    """
    _check(p)
    K = _backend.kernels
    g = p.view.base
    arc_dead = bytearray(p.view.arc_dead)
    vert_dead = p.view.vert_dead
    src = vertex_mask(g.n, p.X)
    tgt = vertex_mask(g.n, p.Y)
    flow = bytearray(g.m)
    lam = K.max_flow(g, arc_dead, vert_dead, flow, src, tgt, p.budget + 1)
    if lam > p.budget:
        return MinCutResult(lam, True, None, None, None, None)
    near = K.residual_reach(g, arc_dead, vert_dead, flow, src, True)
    co = K.residual_reach(g, arc_dead, vert_dead, flow, tgt, False)
    near_cut = K.frontier(g, arc_dead, vert_dead, near, False)
    far_cut = K.frontier(g, arc_dead, vert_dead, co, True)
    for a in far_cut:
        arc_dead[a] = 1
    far = K.reach(g, arc_dead, vert_dead, src, True)
    return MinCutResult(
        lam, False,
        frozenset(v for v in range(g.n) if near[v]),
        frozenset(v for v in range(g.n) if far[v]),
        frozenset(near_cut),
        frozenset(far_cut),
    )


def _is_important_masks(g, arc_dead, vert_dead, src, tgt, F, reach_out=None):
    K = _backend.kernels
    for a in F:
        arc_dead[a] = 1
    R = K.reach(g, arc_dead, vert_dead, src, True)
    for a in F:
        arc_dead[a] = 0
    for v in range(g.n):
        if R[v] and tgt[v]:
            raise ContractError("arc set is not an (X,Y)-cut")
    if sorted(K.frontier(g, arc_dead, vert_dead, R, False)) != sorted(F):
        return False
    lam, far, _ = _farthest(g, arc_dead, vert_dead, R, tgt, len(F))
    if lam != len(F) or far != R:
        return False
    if reach_out is not None:
        reach_out.append(R)
    return True


def is_important(p: CutProblem, F: Iterable[int]) -> bool:
    """Exact importance test.

    With R the vertices reachable from X after deleting F: F must be
    exactly the arcs leaving R, and the farthest minimum (R,Y)-cut must
    have size |F| and reach exactly R.
    """
    _check(p)
    g = p.view.base
    F = sorted(set(F))
    for a in F:
        if not p.view.is_live_arc(a):
            raise ContractError(f"arc {a} is not live in the view")
    return _is_important_masks(
        g, bytearray(p.view.arc_dead), p.view.vert_dead,
        vertex_mask(g.n, p.X), vertex_mask(g.n, p.Y), F,
    )


def _branch(g, arc_dead, vert_dead, src, tgt, budget, prefix, out):
    lam, far, cut = _farthest(g, arc_dead, vert_dead, src, tgt, budget)
    if far is None:
        return
    if lam == 0:
        out.append(tuple(sorted(prefix)))
        return
    e = cut[0]
    v = g.heads[e]
    arc_dead[e] = 1
    prefix.append(e)
    _branch(g, arc_dead, vert_dead, far, tgt, budget - 1, prefix, out)
    prefix.pop()
    arc_dead[e] = 0
    if not tgt[v]:
        grown = bytearray(far)
        grown[v] = 1
        _branch(g, arc_dead, vert_dead, grown, tgt, budget, prefix, out)


def important_cut_arcs(g, arc_dead, vert_dead, src, tgt, budget, with_reach=False):
    """Mask-level enumeration used by the solver's inner loop.

    Returns sorted arc-id tuples ordered by (size, ids); with
    ``with_reach`` a parallel list of reach masks is returned as well.
    ``arc_dead`` is used as scratch and restored before returning.
    """
    raw = []
    _branch(g, arc_dead, vert_dead, src, tgt, budget, [], raw)
    cuts = []
    reaches = []
    for F in sorted(set(raw), key=lambda c: (len(c), c)):
        box = [] if with_reach else None
        if _is_important_masks(g, arc_dead, vert_dead, src, tgt, F, box):
            cuts.append(F)
            if with_reach:
                reaches.append(box[0])
    return (cuts, reaches) if with_reach else cuts


def enumerate_important_cuts(p: CutProblem) -> list[ImportantCut]:
    """All important (X,Y)-cuts of size at most ``p.budget``, each once.

    Ordered by size, then by sorted arc ids. When Y is unreachable the
    empty cut is the single result.
    """
    _check(p)
    g = p.view.base
    cuts, reaches = important_cut_arcs(
        g, bytearray(p.view.arc_dead), p.view.vert_dead,
        vertex_mask(g.n, p.X), vertex_mask(g.n, p.Y), p.budget, with_reach=True,
    )
    return [
        ImportantCut(frozenset(F), frozenset(v for v in range(g.n) if R[v]))
        for F, R in zip(cuts, reaches)
    ]


def dominating_important_cut(p: CutProblem, S: Iterable[int],
                             candidates: Optional[Sequence[ImportantCut]] = None) -> ImportantCut:
    """An important cut no larger than ``S`` whose reach contains the reach of ``S``.

    ``candidates`` may pass a precomputed enumeration (any budget >= |S|).
    """
    _check(p)
    S = frozenset(S)
    reach = reachable_from(p.view.without_arcs(S), p.X)
    if reach & p.Y:
        raise ContractError("arc set is not an (X,Y)-cut")
    if candidates is None:
        candidates = enumerate_important_cuts(CutProblem(p.view, p.X, p.Y, len(S)))
    for cut in candidates:
        if len(cut.arcs) <= len(S) and reach <= cut.reach:
            return cut
    raise AssertionError("no dominating important cut found")
