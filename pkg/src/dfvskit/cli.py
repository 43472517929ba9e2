"""Command-line interface.

Exit codes: 0 yes / valid, 1 no / invalid, 2 input or usage error.
"""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from . import _backend
from .compression import CompressionInstance, solve_compression
from .cuts import CutProblem, enumerate_important_cuts
from .dfasv import MAX_K, DfasvInstance, SearchStats, gamma_epsilon, leaf_bound, solve_dfasv
from .driver import DfvsQuery, minimize_dfvs, solve_dfvs
from .edgelist import (format_arc, occurrence_indices, parse_arc_list, parse_edge_list,
                       parse_id_csv, parse_vertex_list, serialize)
from .errors import DfvsError
from .graph import GraphView, is_acyclic
from .oracle import KINDS, GenSpec, generate

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2

STATS_FIELDS = (
    "nodes", "leaves", "max_depth", "cut_size_histogram", "reduction_removals",
    "leaf_bound", "gamma_eps", "wall_time_ms", "runs", "max_run_leaves", "leaf_bound_ok",
)


@dataclass
class StatsReport:
    """Key-value stats document; fields are written in ``STATS_FIELDS`` order.

    For multi-run commands (``solve``) the counters are totals over all
    DFAS-V searches, ``max_run_leaves`` is the largest single search, and
    ``leaf_bound_ok`` says whether every search that started with
    ``|W| <= k + 1`` stayed within its own ``leaf_bound(k)``.
    ``leaf_bound`` is reported for the command's final ``k``.
    """

    nodes: int = 0
    leaves: int = 0
    max_depth: int = 0
    cut_size_histogram: dict = field(default_factory=dict)
    reduction_removals: int = 0
    leaf_bound: int = 1
    gamma_eps: float = 0.0
    wall_time_ms: float = 0.0
    runs: int = 0
    max_run_leaves: int = 0
    leaf_bound_ok: bool = True

    @classmethod
    def from_runs(cls, runs: list, k: int, eps: float, wall_ms: float) -> "StatsReport":
        total = SearchStats()
        ok = True
        for st in runs:
            total.merge(st)
            if st.analysis_applies and st.leaves > leaf_bound(st.k).bound:
                ok = False
        return cls(
            nodes=total.nodes, leaves=total.leaves, max_depth=total.max_depth,
            cut_size_histogram=dict(sorted(total.cut_size_histogram.items())),
            reduction_removals=total.reduction_removals,
            leaf_bound=leaf_bound(k).bound, gamma_eps=gamma_epsilon(eps),
            wall_time_ms=wall_ms, runs=len(runs),
            max_run_leaves=max((st.leaves for st in runs), default=0),
            leaf_bound_ok=ok,
        )

    def render(self) -> str:
        lines = []
        for name in STATS_FIELDS:
            val = getattr(self, name)
            if name == "cut_size_histogram":
                val = " ".join(f"{s}:{c}" for s, c in val.items())
            elif name == "gamma_eps":
                val = f"{val:.6f}"
            elif name == "wall_time_ms":
                val = f"{val:.3f}"
            elif name == "leaf_bound_ok":
                val = "true" if val else "false"
            lines.append(f"{name}: {val}".rstrip())
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "StatsReport":
        raw = {}
        for line in text.splitlines():
            key, _, val = line.partition(":")
            raw[key.strip()] = val.strip()
        hist = {}
        for tok in raw.get("cut_size_histogram", "").split():
            s, c = tok.split(":")
            hist[int(s)] = int(c)
        return cls(
            nodes=int(raw["nodes"]), leaves=int(raw["leaves"]), max_depth=int(raw["max_depth"]),
            cut_size_histogram=hist, reduction_removals=int(raw["reduction_removals"]),
            leaf_bound=int(raw["leaf_bound"]), gamma_eps=float(raw["gamma_eps"]),
            wall_time_ms=float(raw["wall_time_ms"]), runs=int(raw["runs"]),
            max_run_leaves=int(raw["max_run_leaves"]), leaf_bound_ok=raw["leaf_bound_ok"] == "true",
        )


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _eps(value: str) -> float:
    eps = float(value)
    if not 0.0 < eps < 0.5:
        raise argparse.ArgumentTypeError("--eps must lie strictly between 0 and 0.5")
    return eps


def _k(value: str) -> int:
    k = int(value)
    if not 0 <= k <= MAX_K:
        raise argparse.ArgumentTypeError(f"--k must lie in [0, {MAX_K}]")
    return k


def _write_stats(args, runs, k, started):
    if args.stats:
        report = StatsReport.from_runs(runs, k, args.eps, (time.perf_counter() - started) * 1e3)
        with open(args.stats, "w", encoding="utf-8") as fh:
            fh.write(report.render())


def _print_vertices(S, out):
    out.write(f"SIZE {len(S)}\n")
    for v in sorted(S):
        out.write(f"{v + 1}\n")


def cmd_solve(args, out) -> int:
    G = parse_edge_list(_read_text(args.input))
    started = time.perf_counter()
    runs: list = []
    if args.minimize:
        k_max = MAX_K if args.k is None else args.k
        found = minimize_dfvs(G, k_max, stats_sink=runs, scc_split=args.scc_split)
        S = None if found is None else found[1]
        k = k_max if found is None else found[0]
    else:
        if args.k is None:
            raise DfvsError("solve needs --k (or --minimize)")
        k = args.k
        S = solve_dfvs(DfvsQuery(G, k), stats_sink=runs, scc_split=args.scc_split)
    _write_stats(args, runs, k, started)
    if S is None:
        out.write("NO\n")
        return EXIT_NO
    if args.verify and not is_acyclic(GraphView(G, removed_vertices=S)):
        raise DfvsError("internal error: computed witness failed verification")
    _print_vertices(S, out)
    return EXIT_YES


def cmd_dfasv(args, out) -> int:
    G = parse_edge_list(_read_text(args.input))
    W = parse_vertex_list(_read_text(args.hint), G.n)
    started = time.perf_counter()
    stats = SearchStats()
    F = solve_dfasv(DfasvInstance.of(G, W, args.k), stats)
    _write_stats(args, [stats], args.k, started)
    if F is None:
        out.write("NO\n")
        return EXIT_NO
    if args.verify and not is_acyclic(GraphView(G, removed_arcs=F)):
        raise DfvsError("internal error: computed witness failed verification")
    occ = occurrence_indices(G)
    out.write(f"SIZE {len(F)}\n")
    for a in sorted(F):
        out.write(format_arc(G, a, occ) + "\n")
    return EXIT_YES


def cmd_compress(args, out) -> int:
    G = parse_edge_list(_read_text(args.input))
    W = parse_vertex_list(_read_text(args.hint), G.n)
    started = time.perf_counter()
    stats = SearchStats()
    S = solve_compression(CompressionInstance(G, W, args.k), stats)
    _write_stats(args, [stats], args.k, started)
    if S is None:
        out.write("NO\n")
        return EXIT_NO
    _print_vertices(S, out)
    return EXIT_YES


def cmd_impcuts(args, out) -> int:
    G = parse_edge_list(_read_text(args.input))
    X = parse_id_csv(args.sources, G.n)
    Y = parse_id_csv(args.targets, G.n)
    cuts = enumerate_important_cuts(CutProblem.of(G, X, Y, args.k))
    occ = occurrence_indices(G)
    out.write(f"COUNT {len(cuts)}\n")
    for cut in cuts:
        out.write("; ".join(format_arc(G, a, occ) for a in cut.canonical()) + "\n")
    return EXIT_YES


def cmd_gen(args, out) -> int:
    spec = GenSpec(args.kind, args.n, args.p, args.planted_k, args.seed, args.loops)
    G, planted = generate(spec)
    comments = [f"kind={spec.kind} n={spec.n} p={spec.p} planted_k={spec.planted_k} seed={spec.seed}"]
    if planted is not None:
        comments.append("planted " + " ".join(str(v + 1) for v in sorted(planted)))
    text = serialize(G, comments)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_YES


def cmd_verify(args, out) -> int:
    G = parse_edge_list(_read_text(args.input))
    text = _read_text(args.witness)
    if args.mode == "dfvs":
        view = GraphView(G, removed_vertices=parse_vertex_list(text, G.n))
    else:
        view = GraphView(G, removed_arcs=parse_arc_list(text, G))
    ok = is_acyclic(view)
    out.write("VALID\n" if ok else "INVALID\n")
    return EXIT_YES if ok else EXIT_NO


def cmd_selftest(args, out) -> int:
    from .oracle import all_digraphs, brute_important_cuts, brute_min_dfas, brute_min_dfvs
    failures = 0
    checked = 0
    for n in range(1, args.n + 1):
        for G in all_digraphs(n):
            checked += 1
            opt, _ = brute_min_dfvs(G)
            found = minimize_dfvs(G, n)
            if found is None or found[0] != opt:
                failures += 1
                out.write(f"FAIL dfvs n={n} arcs={G.arcs}\n")
            dopt, _ = brute_min_dfas(G)
            W = set(brute_min_dfvs(G)[1])
            F = solve_dfasv(DfasvInstance.of(G, W, dopt))
            if F is None or (dopt > 0 and solve_dfasv(DfasvInstance.of(G, W, dopt - 1)) is not None):
                failures += 1
                out.write(f"FAIL dfas-v n={n} arcs={G.arcs}\n")
            for x in range(n):
                for y in range(n):
                    if x == y:
                        continue
                    got = {c.arcs for c in enumerate_important_cuts(CutProblem.of(G, [x], [y], G.m))}
                    if got != brute_important_cuts(G, [x], [y], G.m):
                        failures += 1
                        out.write(f"FAIL impcuts n={n} arcs={G.arcs} x={x} y={y}\n")
    out.write(f"selftest: {checked} graphs, {failures} failures, backend={_backend.kernels.NAME}\n")
    return EXIT_YES if failures == 0 else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dfvskit", description="Exact directed feedback vertex set solver.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, hint=False, k_required=True):
        p.add_argument("--input", "-i", required=True, help="edge-list file ('-' for stdin)")
        if hint:
            p.add_argument("--hint", required=True, help="file of 1-based hint vertex ids")
        p.add_argument("--k", type=_k, required=k_required, default=None, help="solution size budget")
        p.add_argument("--stats", help="write a stats report to this path")
        p.add_argument("--eps", type=_eps, default=0.25, help="epsilon for the gamma report (0, 0.5)")
        p.add_argument("--verify", action="store_true", help="re-check the witness before printing")

    p = sub.add_parser("solve", help="directed feedback vertex set of size <= k")
    common(p, k_required=False)
    p.add_argument("--minimize", action="store_true", help="find the minimum size (k is the cap)")
    p.add_argument("--scc-split", action="store_true", help="solve strongly connected components separately")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("dfas-v", help="feedback arc set of size <= k given a dfvs hint")
    common(p, hint=True)
    p.set_defaults(func=cmd_dfasv)

    p = sub.add_parser("compress", help="shrink a dfvs hint of size <= k+1 to size <= k")
    common(p, hint=True)
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("impcuts", help="list important (X,Y)-cuts of size <= k")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--sources", "-X", required=True, help="comma-separated 1-based ids")
    p.add_argument("--targets", "-Y", required=True, help="comma-separated 1-based ids")
    p.add_argument("--k", type=_k, required=True)
    p.set_defaults(func=cmd_impcuts)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--kind", choices=KINDS, default="erdos-renyi")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.2)
    p.add_argument("--planted-k", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--loops", action="store_true")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a dfvs or dfas witness")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--witness", "-w", required=True)
    p.add_argument("--mode", choices=("dfvs", "dfas"), default="dfvs")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="exhaustive differential check on tiny graphs")
    p.add_argument("--n", type=int, default=3, help="largest vertex count to sweep")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[list] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    try:
        return args.func(args, out)
    except (DfvsError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
