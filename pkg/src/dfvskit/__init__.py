"""Exact parameterized solver for Directed Feedback Vertex Set.

Pipeline: important-cut enumeration, the DFAS-V branching search, the
vertex-split compression reduction, and an iterative-compression driver.
"""
from . import _backend
from .compression import CompressionInstance, lift_solution, solve_compression, to_dfasv
from .cuts import (CutProblem, ImportantCut, MinCutResult, dominating_important_cut,
                   enumerate_important_cuts, is_important, min_cut)
from .dfasv import (DfasvInstance, LeafBound, SearchStats, gamma_epsilon, leaf_bound,
                    reduce_hint, solve_dfasv)
from .driver import DfvsQuery, minimize_dfvs, solve_dfvs
from .errors import ContractError, CyclicGraphError, DfvsError, GraphInputError
from .graph import (DiGraph, ExpansionMap, GraphView, build_graph, cycle_vertices, expand_all,
                    expand_vertex, is_acyclic, on_cycle, reachable_from, scc_partition,
                    topological_order)

__version__ = "0.1.0"


def backend() -> str:
    """Name of the active kernel backend (``"cython"`` or ``"python"``)."""
    return _backend.kernels.NAME


__all__ = [
    "CompressionInstance", "ContractError", "CutProblem", "CyclicGraphError", "DfasvInstance",
    "DfvsError", "DfvsQuery", "DiGraph", "ExpansionMap", "GraphInputError", "GraphView",
    "ImportantCut", "LeafBound", "MinCutResult", "SearchStats", "backend", "build_graph",
    "cycle_vertices", "dominating_important_cut", "enumerate_important_cuts", "expand_all",
    "expand_vertex", "gamma_epsilon", "is_acyclic", "is_important", "leaf_bound", "lift_solution",
    "min_cut", "minimize_dfvs", "on_cycle", "reachable_from", "reduce_hint", "scc_partition",
    "solve_compression", "solve_dfasv", "solve_dfvs", "to_dfasv", "topological_order",
]
