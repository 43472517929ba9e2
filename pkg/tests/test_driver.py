import random

import pytest

from dfvskit import ContractError, DfvsQuery, build_graph, minimize_dfvs, solve_dfvs
from dfvskit.oracle import GenSpec, acyclic_without, all_digraphs, brute_min_dfvs, generate

from graphs import complete4, diamond, path3, triangle, two_cycle, two_disjoint_two_cycles


@pytest.mark.parametrize("make,opt", [
    (path3, 0), (diamond, 0), (two_cycle, 1), (triangle, 1), (two_disjoint_two_cycles, 2), (complete4, 3),
])
def test_examples(make, opt, backend):
    G = make()
    assert minimize_dfvs(G, 5)[0] == opt
    if opt:
        assert solve_dfvs(DfvsQuery(G, opt - 1)) is None
    S = solve_dfvs(DfvsQuery(G, opt))
    assert len(S) <= opt and acyclic_without(G, vertices=S)


def test_complete4_k2_is_no():
    assert solve_dfvs(DfvsQuery(complete4(), 2)) is None


def test_minimize_cap():
    assert minimize_dfvs(complete4(), 2) is None
    assert solve_dfvs(DfvsQuery(complete4(), 3, mode="minimize")) is not None


def test_empty_graph():
    assert solve_dfvs(DfvsQuery(build_graph(0, []), 0)) == frozenset()


@pytest.mark.parametrize("bad", [dict(k=-1), dict(k=65), dict(k=1, mode="guess")])
def test_contracts(bad):
    with pytest.raises(ContractError):
        solve_dfvs(DfvsQuery(two_cycle(), **bad))


def test_exhaustive_three_vertices_with_loops():
    for G in all_digraphs(3, loops=True):
        opt, _ = brute_min_dfvs(G)
        got = minimize_dfvs(G, 3)
        assert got[0] == opt and acyclic_without(G, vertices=got[1])


def test_scc_split_agrees():
    rng = random.Random(4)
    for _ in range(80):
        n = rng.randint(3, 8)
        G = build_graph(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.3])
        plain = minimize_dfvs(G, n)
        split = minimize_dfvs(G, n, scc_split=True)
        assert plain[0] == split[0]
        assert acyclic_without(G, vertices=split[1])
        assert (solve_dfvs(DfvsQuery(G, plain[0]), scc_split=True) is not None)
        if plain[0]:
            assert solve_dfvs(DfvsQuery(G, plain[0] - 1), scc_split=True) is None


def test_prefix_optimum_is_monotone():
    G, _ = generate(GenSpec(kind="erdos-renyi", n=9, p=0.3, seed=8))
    prev = 0
    for i in range(1, G.n + 1):
        sub = build_graph(i, [(t, h) for t, h in G.arcs if t < i and h < i])
        cur = minimize_dfvs(sub, i)[0]
        assert prev <= cur <= prev + 1
        prev = cur


def test_stats_sink_collects_compression_runs():
    sink = []
    minimize_dfvs(complete4(), 3, stats_sink=sink)
    assert sink and all(s.root_hint_size <= s.k + 1 for s in sink)


@pytest.mark.parametrize("seed", range(3))
def test_planted_witness_not_larger(seed):
    G, planted = generate(GenSpec(kind="planted-dfvs", n=40, p=0.1, planted_k=4, seed=seed))
    opt, S = minimize_dfvs(G, len(planted))
    assert opt == len(S) <= len(planted)
    assert acyclic_without(G, vertices=S)
