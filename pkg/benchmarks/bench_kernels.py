"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--groups S5,A5,D60]
"""

import argparse
import timeit

from compactlocus import _kernels_py, catalog

try:
    from compactlocus import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def workload(mod, G, subs, gens):
    for g in gens:
        mod.closure(G.table, g)
    mod.element_orders(G.table)
    for s in subs:
        mod.canonical_conjugate(G.conj, s)
    for a in subs[:20]:
        for b in subs[-20:]:
            mod.is_subconjugate(G.conj, a, b)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--groups", default="S4,D24,A5,D60,S5")
    args = ap.parse_args()
    backends = [("python", _kernels_py)] + ([("cython", _kernels_c)] if _kernels_c else [])
    print(f"{'group':>6} {'order':>5} {'classes':>7} " + " ".join(f"{n + ' ms':>10}" for n, _ in backends) + "  speedup")
    for name in args.groups.split(","):
        G = catalog.by_name(name)
        subs = [c.representative for c in G.classes]
        gens = [[G.index(g) for g in c.subgroup.perms()[:2]] for c in G.classes]
        times = []
        for _, mod in backends:
            t = min(timeit.repeat(lambda: workload(mod, G, subs, gens), number=1, repeat=args.repeat))
            times.append(t * 1e3)
        speed = f"{times[0] / times[1]:7.1f}x" if len(times) == 2 else "      -"
        print(f"{name:>6} {G.order:5d} {len(subs):7d} " + " ".join(f"{t:10.2f}" for t in times) + "  " + speed)
    if _kernels_c is None:
        print("compiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()
