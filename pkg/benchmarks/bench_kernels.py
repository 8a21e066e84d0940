"""Compare the compiled and pure-Python congruence kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times the three hot paths on fixed inputs: principal closures over every
cover pair of a large tower member, brute-force enumeration on an
8-element lattice, and partition joins.  Both backends get identical
array inputs and must return identical results.
"""

import argparse
import timeit
from array import array

from lattica import Variant, _pykernels, boolean, m_lattice, tower
from lattica.corpus import m4_swap
from lattica.kernels import available_backends


def _tables(S, maps=()):
    L = getattr(S, "lattice", S)
    join, meet = L.flat_tables()
    return L, join, meet, array("i", [v for f in maps for v in f])


def cases():
    big = tower(m4_swap(), 8, Variant.KLEENE).members[-1]
    L, j, m, u = _tables(big, [big.inv])
    pairs = [[c] for c in L.covers()]

    def closures(impl):
        return [impl.principal_closure(L.n, j, m, u, p) for p in pairs]

    B = boolean(3)
    LB, jb, mb, ub = _tables(B, [B.inv])

    def oracle(impl):
        return impl.compatible_partitions(LB.n, jb, mb, ub)

    M = tower(m_lattice(3), 8).members[-1]
    LM, jm, mm, um = _tables(M)
    gens = [array("i", _pykernels.principal_closure(LM.n, jm, mm, um, [c])) for c in LM.covers()]

    def joins(impl):
        out = []
        for p in gens:
            for q in gens:
                out.append(impl.join_labels(p, q))
        return out

    return [
        (f"principal closure x{len(pairs)} (n={L.n}, ILAT)", closures),
        (f"brute force (n={LB.n}, ILAT)", oracle),
        (f"partition join x{len(gens) ** 2} (n={LM.n})", joins),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    backends = available_backends()
    if "cython" not in backends:
        print("compiled backend not built; timing the Python kernels only")
    print(f"{'case':48s} " + " ".join(f"{name:>10s}" for name in backends) + "   speedup")
    for title, fn in cases():
        results = {name: [tuple(x) for x in fn(impl)] for name, impl in backends.items()}
        first = next(iter(results.values()))
        assert all(r == first for r in results.values()), f"backends disagree on {title}"
        times = {}
        for name, impl in backends.items():
            number = 1
            while timeit.timeit(lambda: fn(impl), number=number) < 0.2:
                number *= 2
            best = min(timeit.repeat(lambda: fn(impl), number=number, repeat=args.repeat))
            times[name] = best / number
        cells = " ".join(f"{times[n] * 1e3:8.3f}ms" for n in backends)
        speed = times["python"] / times["cython"] if "cython" in times else 1.0
        print(f"{title:48s} {cells}   {speed:6.1f}x")


if __name__ == "__main__":
    main()
