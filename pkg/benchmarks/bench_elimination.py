"""Compare the compiled and pure-Python elimination kernels.

    python benchmarks/bench_elimination.py [--repeat N]

Times ``rref_int`` on random integer matrices and full cohomology runs on
grid tori, once per backend.
"""

import argparse
import random
import timeit

from gysinkit import _elim_py, exactla
from gysinkit.complexes import SimplicialComplex, cohomology

try:
    from gysinkit import _elim
except ImportError:
    _elim = None


def grid_torus(n):
    def v(i, j):
        return n * (i % n) + (j % n)

    tris = []
    for i in range(n):
        for j in range(n):
            tris += [(v(i, j), v(i + 1, j), v(i + 1, j + 1)), (v(i, j), v(i, j + 1), v(i + 1, j + 1))]
    return SimplicialComplex.closure(tris)


def random_rows(n, m, seed):
    rng = random.Random(seed)
    return [[rng.randint(-3, 3) if rng.random() < 0.3 else 0 for _ in range(m)] for _ in range(n)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    kernels = [("python", _elim_py.rref_int)]
    if _elim is not None:
        kernels.append(("cython", _elim.rref_int))
    else:
        print("compiled kernel not built; timing the pure-Python fallback only")

    cases = []
    for n in (40, 80, 120):
        rows = random_rows(n, n, n)
        cases.append((f"rref_int random {n}x{n}",
                      lambda k, rows=rows, n=n: (lambda: k(rows, n))))
    for n in (6, 10, 14):
        x = grid_torus(n)
        cases.append((f"cohomology torus {n}x{n} ({len(x)} simplices)",
                      lambda k, x=x: (lambda: with_kernel(k, x))))

    print(f"{'case':<44}" + "".join(f"{name:>12}" for name, _ in kernels) + "    speedup")
    for label, factory in cases:
        times = [min(timeit.repeat(factory(k), number=1, repeat=args.repeat)) for _, k in kernels]
        speed = f"{times[0] / times[1]:8.2f}x" if len(times) == 2 else ""
        print(f"{label:<44}" + "".join(f"{t * 1e3:10.1f}ms" for t in times) + "  " + speed)


def with_kernel(kernel, x):
    saved = exactla.rref_int
    exactla.rref_int = kernel
    try:
        x._delta.clear()
        cohomology(x)
    finally:
        exactla.rref_int = saved

if __name__ == "__main__":
    main()
