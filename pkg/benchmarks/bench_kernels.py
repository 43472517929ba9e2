"""Compare the compiled and pure-Python kernel backends.

Times the individual kernels on a large random graph and a full
``minimize_dfvs`` on planted instances, once per available backend.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--n 200]
"""
import argparse
import time

from dfvskit import _backend, minimize_dfvs
from dfvskit.graph import vertex_mask
from dfvskit.oracle import GenSpec, generate


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def kernel_cases(G):
    K = _backend.kernels
    arc_dead = bytearray(G.m)
    vert_dead = bytearray(G.n)
    src = vertex_mask(G.n, [0])
    tgt = vertex_mask(G.n, range(G.n // 2, G.n))

    def flow():
        K.max_flow(G, arc_dead, vert_dead, bytearray(G.m), src, tgt, 8)

    return {
        "scc_labels": lambda: K.scc_labels(G, arc_dead, vert_dead),
        "cyclic_mask": lambda: K.cyclic_mask(G, arc_dead, vert_dead),
        "reach": lambda: K.reach(G, arc_dead, vert_dead, src, True),
        "max_flow(8)": flow,
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--n", type=int, default=200, help="vertices of the planted instances")
    parser.add_argument("--big", type=int, default=20000, help="vertices of the kernel-only graph")
    args = parser.parse_args(argv)

    big, _ = generate(GenSpec("erdos-renyi", args.big, 4.0 / args.big, seed=1))
    planted = [generate(GenSpec("planted-dfvs", args.n, 0.04, planted_k=k, seed=k))[0] for k in (4, 6)]
    backends = [mod.NAME for mod in _backend.available()]
    rows = {}
    for name in backends:
        previous = _backend.use(name)
        try:
            for label, fn in kernel_cases(big).items():
                rows.setdefault(f"{label} n={big.n} m={big.m}", {})[name] = best_of(fn, args.repeat)
            for G, k in zip(planted, (4, 6)):
                fn = lambda G=G, k=k: minimize_dfvs(G, k)
                rows.setdefault(f"minimize planted k={k} n={G.n} m={G.m}", {})[name] = best_of(fn, args.repeat)
        finally:
            _backend.use(previous)

    header = f"{'case':<42}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for label, times in rows.items():
        line = f"{label:<42}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) > 1:
            line += f"{times['python'] / times['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
