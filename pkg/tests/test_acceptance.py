"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Criteria that reuse another criterion's runs (4 on 3, 7 and 9 on 1-2,
5 on every enumeration) share module-scoped fixtures, so selecting a
single test still does all the work it depends on.
"""
import io
import random
import time

import pytest

from dfvskit import (CompressionInstance, CutProblem, DfasvInstance, DfvsQuery, SearchStats,
                     dominating_important_cut, enumerate_important_cuts, leaf_bound, minimize_dfvs, reachable_from,
                     solve_compression, solve_dfasv, solve_dfvs, to_dfasv, topological_order)
from dfvskit import dfasv as dfasv_module
from dfvskit.cli import main as cli_main
from dfvskit.edgelist import parse_edge_list, parse_vertex_list, serialize
from dfvskit.graph import DiGraph, GraphView
from dfvskit.oracle import (GenSpec, acyclic_without, all_digraphs, brute_important_cuts, brute_min_dfas,
                            brute_min_dfvs, generate, reach_table)

from conftest import report

RANDOM_COUNT = 500


def random_family():
    """500 seeded digraphs, n cycling through 5..9, p alternating 0.2 / 0.4."""
    for i in range(RANDOM_COUNT):
        yield generate(GenSpec("erdos-renyi", 5 + i % 5, 0.2 if i % 2 == 0 else 0.4, seed=1000 + i))[0]


def oracle_family():
    yield from all_digraphs(4)
    yield from random_family()


class CutLog:
    """Counts enumerations and flags any with more than one size-1 cut."""

    def __init__(self):
        self.enumerations = 0
        self.violations = []

    def check(self, sizes, where):
        self.enumerations += 1
        if sum(1 for s in sizes if s == 1) > 1:
            self.violations.append(where)


@pytest.fixture(scope="module")
def cut_log():
    return CutLog()


@pytest.fixture(scope="module")
def solver_cut_log(cut_log):
    """Route the solver's inner enumeration through the size-1 check."""
    original = dfasv_module.important_cut_arcs

    def checked(*args, **kwargs):
        cuts = original(*args, **kwargs)
        cut_log.check([len(c) for c in cuts], "dfas-v search")
        return cuts

    dfasv_module.important_cut_arcs = checked
    yield cut_log
    dfasv_module.important_cut_arcs = original


@pytest.fixture(scope="module")
def dfvs_runs(solver_cut_log):
    started = time.perf_counter()
    stats, mismatches, bad_witness, graphs = [], [], [], 0
    for G in oracle_family():
        graphs += 1
        opt, _ = brute_min_dfvs(G)
        found = minimize_dfvs(G, G.n, stats_sink=stats)
        if found is None or found[0] != opt:
            mismatches.append(G.arcs)
        elif not acyclic_without(G, vertices=found[1]) or len(found[1]) != opt:
            bad_witness.append(G.arcs)
    return dict(graphs=graphs, stats=stats, mismatches=mismatches, bad_witness=bad_witness,
                seconds=time.perf_counter() - started)


def _hint(G):
    _, S = brute_min_dfvs(G)
    extra = [v for v in range(G.n) if v not in S]
    return frozenset(S) | frozenset(extra[:1])


def last_hint_vertex_isolated(G, W, F):
    rest = GraphView(G, removed_arcs=F)
    pos = {v: i for i, v in enumerate(topological_order(rest))}
    if not W:
        return True
    last = max(W, key=pos.get)
    return not (reachable_from(rest, {last}) & (W - {last}))


@pytest.fixture(scope="module")
def dfasv_runs(solver_cut_log):
    started = time.perf_counter()
    stats, mismatches, invalid, isolation_fail = [], [], [], []
    runs = 0
    for G in oracle_family():
        W = _hint(G)
        opt, _ = brute_min_dfas(G)
        for k in range(opt + 2):
            runs += 1
            st = SearchStats()
            F = solve_dfasv(DfasvInstance.of(G, W, k), st)
            stats.append(st)
            if (F is not None) != (opt <= k):
                mismatches.append((G.arcs, k))
            elif F is not None:
                if len(F) > k or not acyclic_without(G, arcs=F):
                    invalid.append((G.arcs, k))
                if not last_hint_vertex_isolated(G, W, F):
                    isolation_fail.append((G.arcs, k))
    return dict(runs=runs, stats=stats, mismatches=mismatches, invalid=invalid, isolation_fail=isolation_fail,
                seconds=time.perf_counter() - started)


def _random_cut_instances():
    rng = random.Random(2024)
    for _ in range(300):
        n = rng.randint(3, 8)
        arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.3]
        rng.shuffle(arcs)
        G = DiGraph(n, arcs[:20])
        verts = list(range(n))
        rng.shuffle(verts)
        sx = rng.randint(1, 2)
        sy = rng.randint(1, 2)
        yield G, frozenset(verts[:sx]), frozenset(verts[sx:sx + sy]), rng.randint(0, 4)


@pytest.fixture(scope="module")
def cut_runs(cut_log):
    started = time.perf_counter()
    problems, mismatches, kraft_fail, count_fail = 0, [], [], []
    for G in all_digraphs(4):
        for x in range(4):
            table = reach_table(G, {x}, G.m)
            for y in range(4):
                if x == y:
                    continue
                problems += 1
                cuts = enumerate_important_cuts(CutProblem.of(G, {x}, {y}, G.m))
                got = [c.arcs for c in cuts]
                cut_log.check([len(F) for F in got], "4-vertex exhaustive")
                if len(set(got)) != len(got) or set(got) != brute_important_cuts(G, {x}, {y}, G.m, table=table):
                    mismatches.append((G.arcs, x, y))
                if sum(4.0 ** -len(F) for F in got) > 1.0:
                    kraft_fail.append((G.arcs, x, y))
                if len(got) > 4 ** G.m:
                    count_fail.append((G.arcs, x, y))
    for G, X, Y, k in _random_cut_instances():
        problems += 1
        got = [c.arcs for c in enumerate_important_cuts(CutProblem.of(G, X, Y, k))]
        cut_log.check([len(F) for F in got], "random")
        if len(set(got)) != len(got) or set(got) != brute_important_cuts(G, X, Y, k):
            mismatches.append((G.arcs, X, Y, k))
        if len(got) > 4 ** k:
            count_fail.append((G.arcs, X, Y, k))
        full = [c.arcs for c in enumerate_important_cuts(CutProblem.of(G, X, Y, G.m))]
        cut_log.check([len(F) for F in full], "random, budget m")
        if sum(4.0 ** -len(F) for F in full) > 1.0:
            kraft_fail.append((G.arcs, X, Y))
    return dict(problems=problems, mismatches=mismatches, kraft_fail=kraft_fail, count_fail=count_fail,
                seconds=time.perf_counter() - started)


@pytest.fixture(scope="module")
def dominance_runs(cut_log):
    started = time.perf_counter()
    checked, failures = 0, []
    for G in all_digraphs(4):
        for x in range(4):
            table = reach_table(G, {x}, G.m)
            for y in range(4):
                if x == y:
                    continue
                p = CutProblem.of(G, {x}, {y}, G.m)
                candidates = enumerate_important_cuts(p)
                cut_log.check([len(c.arcs) for c in candidates], "dominance")
                for F, R in table.items():
                    if R >> y & 1:
                        continue
                    checked += 1
                    S = [a for a in range(G.m) if F >> a & 1]
                    dom = dominating_important_cut(p, S, candidates)
                    reach = {v for v in range(4) if R >> v & 1}
                    if len(dom.arcs) > len(S) or not reach <= dom.reach:
                        failures.append((G.arcs, x, y, S))
    return dict(checked=checked, failures=failures, seconds=time.perf_counter() - started)


@pytest.fixture(scope="module")
def planted_high_k_stats():
    stats = []
    for n, k, seed in [(40, 7, 1), (40, 8, 2), (80, 7, 3), (80, 8, 4), (200, 8, 5)]:
        G, planted = generate(GenSpec("planted-dfvs", n, 3.0 / n, planted_k=k, seed=seed))
        S = solve_dfvs(DfvsQuery(G, k), stats_sink=stats)
        assert S is not None and len(S) <= len(planted)
    return stats


def _fail_text(items, limit=3):
    return "" if not items else f"; first failures: {items[:limit]}"


def test_criterion_01_dfvs_oracle(dfvs_runs):
    r = dfvs_runs
    ok = not r["mismatches"] and not r["bad_witness"] and r["graphs"] == 4096 + RANDOM_COUNT
    report(1, ok, f"DFVS minimum equals brute force on {r['graphs']} graphs, "
                  f"witnesses verified ({r['seconds']:.1f}s)" + _fail_text(r["mismatches"] + r["bad_witness"]))
    assert ok and r["seconds"] < 300


def test_criterion_02_dfasv_oracle(dfasv_runs):
    r = dfasv_runs
    ok = not r["mismatches"] and not r["invalid"]
    report(2, ok, f"DFAS-V yes/no equals brute-force dfas <= k on {r['runs']} runs "
                  f"({r['seconds']:.1f}s)" + _fail_text(r["mismatches"] + r["invalid"]))
    assert ok and r["seconds"] < 300


def test_criterion_03_important_cut_exactness(cut_runs):
    r = cut_runs
    ok = not r["mismatches"]
    report(3, ok, f"important cuts equal brute force on {r['problems']} problems "
                  f"({r['seconds']:.1f}s)" + _fail_text(r["mismatches"]))
    assert ok and r["seconds"] < 300


def test_criterion_04_kraft_sum_and_count(cut_runs):
    r = cut_runs
    ok = not r["kraft_fail"] and not r["count_fail"]
    report(4, ok, f"sum 4^-|S| <= 1 at budget m and count <= 4^k on {r['problems']} problems"
                  + _fail_text(r["kraft_fail"] + r["count_fail"]))
    assert ok


def test_criterion_05_single_size_one_cut(cut_log, cut_runs, dominance_runs, dfvs_runs, dfasv_runs):
    ok = not cut_log.violations and cut_log.enumerations > 0
    report(5, ok, f"at most one size-1 important cut in each of {cut_log.enumerations} enumerations"
                  + _fail_text(cut_log.violations))
    assert ok


def test_criterion_06_dominance(dominance_runs):
    r = dominance_runs
    ok = not r["failures"]
    report(6, ok, f"dominating important cut found for {r['checked']} cuts "
                  f"({r['seconds']:.1f}s)" + _fail_text(r["failures"]))
    assert ok


def test_criterion_07_leaf_bound(dfvs_runs, dfasv_runs, planted_high_k_stats):
    runs = dfvs_runs["stats"] + dfasv_runs["stats"] + planted_high_k_stats
    applicable = [st for st in runs if st.analysis_applies]
    over = [(st.k, st.leaves) for st in applicable if st.leaves > leaf_bound(st.k).bound]
    top_k = max(st.k for st in planted_high_k_stats)
    ok = not over and top_k == 8
    report(7, ok, f"leaves <= leaf_bound(k) on {len(applicable)} searches with |W| <= k+1, "
                  f"k up to {max(st.k for st in applicable)}" + _fail_text(over))
    assert ok


def test_criterion_08_compression_equivalence():
    started = time.perf_counter()
    checked, failures = 0, []
    families = [all_digraphs(n, loops=True) for n in range(1, 4)] + [all_digraphs(4)]
    for family in families:
        for G in family:
            opt, S = brute_min_dfvs(G)
            cases = [(_hint(G), opt)]
            if opt > 0:
                cases.append((frozenset(S), opt - 1))
            for W, k in cases:
                checked += 1
                lifted = solve_compression(CompressionInstance(G, W, k))
                dinst, _ = to_dfasv(CompressionInstance(G, W, k))
                F = solve_dfasv(dinst)
                if (lifted is None) != (F is None) or (lifted is None) != (opt > k):
                    failures.append((G.arcs, sorted(W), k))
                elif lifted is not None and (len(lifted) > k or not acyclic_without(G, vertices=lifted)):
                    failures.append((G.arcs, sorted(W), k, "lift"))
    seconds = time.perf_counter() - started
    ok = not failures
    report(8, ok, f"compression matches split-graph DFAS-V on {checked} instances, n <= 4 "
                  f"({seconds:.1f}s)" + _fail_text(failures))
    assert ok


def test_criterion_09_last_hint_vertex_postcondition(dfasv_runs):
    r = dfasv_runs
    ok = not r["isolation_fail"]
    report(9, ok, "last hint vertex in a topological order of G - F reaches no other hint vertex "
                  "on every returned dfas" + _fail_text(r["isolation_fail"]))
    assert ok


def test_criterion_10_performance(tmp_path):
    results, ok = [], True
    for planted_k in (4, 6):
        G, planted = generate(GenSpec("planted-dfvs", 200, 0.04, planted_k=planted_k, seed=planted_k))
        path = tmp_path / f"g{planted_k}.txt"
        path.write_text(serialize(G))
        out = io.StringIO()
        started = time.perf_counter()
        code = cli_main(["solve", "--input", str(path), "--minimize", "--k", str(planted_k), "--verify"], out)
        seconds = time.perf_counter() - started
        S = parse_vertex_list(out.getvalue(), G.n) if code == 0 else None
        good = code == 0 and seconds < 10 and len(S) <= len(planted) and acyclic_without(G, vertices=S)
        ok = ok and good
        results.append(f"k={planted_k} m={G.m} minimum {len(S) if S is not None else '-'} in {seconds:.2f}s")
    report(10, ok, "planted n=200: " + ", ".join(results) + " (limit 10s each)")
    assert ok


def test_criterion_11_cli_round_trip(tmp_path):
    failures = []
    kinds = ["erdos-renyi", "planted-dfvs", "tournament"]
    for i in range(50):
        kind = kinds[i % 3]
        n = 6 + i % 20 if kind != "tournament" else 5 + i % 4
        g = tmp_path / f"g{i}.txt"
        w = tmp_path / f"w{i}.txt"
        gen = ["gen", "--kind", kind, "--n", str(n), "--p", "0.15", "--planted-k", "3", "--seed", str(i),
               "--output", str(g)]
        codes = [cli_main(gen, io.StringIO())]
        out = io.StringIO()
        codes.append(cli_main(["solve", "-i", str(g), "--minimize", "--verify"], out))
        w.write_text(out.getvalue())
        codes.append(cli_main(["verify", "-i", str(g), "-w", str(w)], io.StringIO()))
        text = g.read_text()
        comments = [line[2:] for line in text.splitlines() if line.startswith("# ")]
        round_trip = serialize(parse_edge_list(text), comments) == text
        if codes != [0, 0, 0] or not round_trip:
            failures.append((i, codes, round_trip))
    ok = not failures
    report(11, ok, "50 generated instances: gen, solve --verify, verify all exit 0 and "
                   "serialization round-trips byte for byte" + _fail_text(failures))
    assert ok
