"""DFVS compression via the vertex-split reduction to DFAS-V.

Splitting every vertex turns vertex deletion into deletion of its bridge
arc; a dfas of the split graph is pulled back to a dfvs of the original
by moving each arc onto the bridge of its head's owner.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .dfasv import MAX_K, DfasvInstance, SearchStats, check_hint, solve_dfasv
from .errors import ContractError
from .graph import ExpansionMap, GraphLike, as_view, expand_all, expanded_view, is_acyclic


@dataclass
class CompressionInstance:
    """``G`` may be a DiGraph or a GraphView (e.g. a vertex prefix)."""

    G: GraphLike
    W: frozenset
    k: int


def to_dfasv(inst: CompressionInstance) -> tuple[DfasvInstance, ExpansionMap]:
    view = as_view(inst.G)
    H, emap = expand_all(view.base)
    hview = expanded_view(view, emap, H)
    return DfasvInstance(hview, frozenset(emap.plus[w] for w in inst.W), inst.k), emap


def lift_solution(emap: ExpansionMap, S_prime: Iterable[int]) -> frozenset:
    """Map a dfas of the split graph to a dfvs of the original graph.

    Bridge arcs map to their vertex; an original arc ``(u+, v-)`` maps to
    ``v`` (every cycle through it continues over ``v``'s bridge).
    """
    owner = emap.bridge_owner()
    original = emap.original_arc()
    out = set()
    for a in S_prime:
        if a in owner:
            out.add(owner[a])
        else:
            out.add(emap.arc_head[original[a]])
    return frozenset(out)


def solve_compression(inst: CompressionInstance, stats: Optional[SearchStats] = None) -> Optional[frozenset]:
    """A dfvs of size at most ``k`` using the hint ``W`` (``|W| <= k+1``), or None."""
    view = as_view(inst.G)
    W = frozenset(inst.W)
    if not 0 <= inst.k <= MAX_K:
        raise ContractError(f"k must lie in [0, {MAX_K}], got {inst.k}")
    if len(W) > inst.k + 1:
        raise ContractError(f"hint has {len(W)} vertices, more than k + 1 = {inst.k + 1}")
    check_hint(view, W)
    dinst, emap = to_dfasv(CompressionInstance(view, W, inst.k))
    F = solve_dfasv(dinst, stats, check=False)
    if F is None:
        return None
    S = lift_solution(emap, F)
    assert len(S) <= inst.k and is_acyclic(view.without_vertices(S))
    return S
